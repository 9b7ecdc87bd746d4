#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

from fractions import Fraction

from hypothesis import given
from hypothesis import settings

from supm_certifier import exceptions
from supm_certifier import parser
from supm_certifier.polynomial import Poly
from supm_certifier.tests.unit import base
from supm_certifier.tests.unit.base import gr


class TestParsePoly(base.TestCase):

    def test_rational_binds_before_implicit_product(self):
        p = parser.parse_poly('z^6+4z^5+25/6z^4')
        self.assertEqual(6, p.degree)
        self.assertEqual(gr(Fraction(25, 6)), p.coefficient(4))
        self.assertEqual(gr(4), p.coefficient(5))
        self.assertEqual(p, parser.parse_poly('z^6 + 4*z^5 + 25/6 z^4'))

    def test_unary_minus_is_weaker_than_power(self):
        self.assertEqual(Poly.monomial(2, -1), parser.parse_poly('-z^2'))
        self.assertEqual(Poly.constant(-4), parser.parse_poly('-2^2'))

    def test_power_is_right_associative(self):
        self.assertEqual(Poly.monomial(4), parser.parse_poly('z^2^2'))
        self.assertEqual(Poly.constant(8), parser.parse_poly('2^3'))

    def test_implicit_multiplication(self):
        self.assertEqual(parser.parse_poly('z^2-1'),
                         parser.parse_poly('(z+1)(z-1)'))
        self.assertEqual(Poly.monomial(1, 3), parser.parse_poly('3z'))

    def test_imaginary_unit(self):
        p = parser.parse_poly('i*z + 2i')
        self.assertEqual(gr(0, 1), p.coefficient(1))
        self.assertEqual(gr(0, 2), p.coefficient(0))
        self.assertEqual(Poly.constant(-1), parser.parse_poly('i^2'))

    def test_variable_detection(self):
        expr = parser.parse_expr('t^2+1')
        self.assertEqual('t', expr.variable)
        self.assertEqual('t^2+1', expr.source)
        self.assertEqual('z', parser.parse_expr('7').variable)

    def test_invalid_exponent(self):
        for text in ('z^-1', 'z^(1/2)', 'z^z', 'z^i'):
            self.assertRaises(exceptions.InvalidExponentError,
                              parser.parse_poly, text)

    def test_exponent_limit(self):
        self.cfg.config(max_exponent=10, group='parser')
        self.assertEqual(10, parser.parse_poly('z^10').degree)
        self.assertRaises(exceptions.InvalidExponentError,
                          parser.parse_poly, 'z^11')

    def test_signed_factor_after_star(self):
        self.assertEqual(parser.parse_poly('-z'), parser.parse_poly('z*-1'))
        self.assertEqual(parser.parse_poly('-2z^2'),
                         parser.parse_poly('2*-z^2'))
        self.assertEqual(parser.parse_poly('-2z'), parser.parse_poly('2*-z'))
        self.assertEqual(parser.parse_poly('-3z^2'),
                         parser.parse_poly('3*-z^2'))
        self.assertEqual(parser.parse_poly('z'), parser.parse_poly('z*+1'))
        self.assertEqual(parser.parse_poly('2-z'), parser.parse_poly('2 -z'))

    def test_nested_power_degree_limit(self):
        exc = self.assertRaises(exceptions.DegreeLimitError,
                                parser.parse_poly, '(z^100)^200')
        self.assertEqual(7, exc.kwargs['position'])
        self.assertEqual(20000, exc.kwargs['degree'])
        self.assertRaises(exceptions.DegreeLimitError,
                          parser.parse_poly, '(z^10000)^10000')
        self.assertIsInstance(exc, exceptions.PolyParseError)

    def test_product_degree_limit(self):
        self.cfg.config(max_exponent=10, group='parser')
        self.assertEqual(10, parser.parse_poly('z^5*z^5').degree)
        self.assertEqual(9, parser.parse_poly('(z^3)^3').degree)
        exc = self.assertRaises(exceptions.DegreeLimitError,
                                parser.parse_poly, 'z^6(z^5+1)')
        self.assertEqual(3, exc.kwargs['position'])
        self.assertRaises(exceptions.DegreeLimitError,
                          parser.parse_poly, '(z^2)^6')
        self.assertRaises(exceptions.DegreeLimitError,
                          parser.parse_poly, 'z^6*-z^5')

    def test_multiple_variables(self):
        exc = self.assertRaises(exceptions.MultipleVariablesError,
                                parser.parse_poly, 'x+y')
        self.assertEqual(2, exc.kwargs['position'])
        self.assertRaises(exceptions.MultipleVariablesError,
                          parser.parse_poly, 't^2', variable='z')

    def test_syntax_errors(self):
        cases = {'z+*2': 2, '': 0, 'z/2': 1, '(z+1': 4, '()': 1,
                 'z)': 1, '1/0': 0}
        for text, position in cases.items():
            exc = self.assertRaises(exceptions.PolySyntaxError,
                                    parser.parse_poly, text)
            self.assertEqual(position, exc.kwargs['position'], text)

    def test_parse_errors_share_base(self):
        self.assertRaises(exceptions.PolyParseError, parser.parse_poly, '$')

    def test_reserved_variable(self):
        self.assertRaises(exceptions.PolySyntaxError, parser.parse_poly,
                          'z', variable='i')

    def test_parse_gaussian(self):
        self.assertEqual(gr(Fraction(1, 2), Fraction(-1, 2)),
                         parser.parse_gaussian('1/2-1/2i'))
        self.assertEqual(gr(0, -1), parser.parse_gaussian('-i'))
        self.assertRaises(exceptions.PolySyntaxError,
                          parser.parse_gaussian, 'z')

    def assertRaises(self, exc_class, func, *args, **kwargs):
        with super(TestParsePoly, self).assertRaises(exc_class) as ctx:
            func(*args, **kwargs)
        return ctx.exception


class TestRenderPoly(base.TestCase):

    def test_render(self):
        cases = ['4z^5 - 1/60 z^2 + 1', '(3+2i)z^2', '-z^3 + z',
                 '-1/2 z - 7', 'z^2 + (1-i)', '3/5i']
        for text in cases:
            self.assertEqual(text,
                             parser.render_poly(parser.parse_poly(text)))

    def test_render_zero(self):
        self.assertEqual('0', parser.render_poly(Poly()))

    def test_render_variable(self):
        self.assertEqual('t^2 - 1',
                         parser.render_poly(parser.parse_poly('z^2-1'), 't'))
        self.cfg.config(variable='w', group='parser')
        self.assertEqual('w + 1',
                         parser.render_poly(parser.parse_poly('z+1')))

    @settings(max_examples=60, deadline=None)
    @given(base.polys)
    def test_round_trip(self, f):
        self.assertEqual(f, parser.parse_poly(parser.render_poly(f)))
