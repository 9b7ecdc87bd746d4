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

"""Polynomial expressions over Q(i).

Grammar (EBNF)::

    expr     = term , { ( "+" | "-" ) , term } ;
    term     = unary , { "*" , unary | power } ;
    unary    = ( "+" | "-" ) , unary | power ;
    power    = atom , [ "^" , unary ] ;
    atom     = rational | "i" | variable | "(" , expr , ")" ;
    rational = digits , [ "/" , digits ] ;
    variable = letter - "i" ;

``^`` binds tighter than unary minus and is right associative; exponents
must evaluate to non-negative integers and no power or product may exceed
``[parser] max_exponent`` in degree. A rational literal binds tighter than
implicit multiplication, so ``25/6 z^4`` is (25/6)*z^4. Only an explicit
``*`` may be followed by a sign.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
import re

from oslo_log import log as logging

from supm_certifier import config
from supm_certifier import exceptions
from supm_certifier.gaussian import GaussianRational
from supm_certifier.gaussian import I
from supm_certifier.gaussian import render_gaussian
from supm_certifier.polynomial import Poly

CONF = config.CONF
LOG = logging.getLogger(__name__)

IMAGINARY_UNIT = 'i'

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z])
  | (?P<op>[-+*^()])
""", re.VERBOSE)


@dataclasses.dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        match = _TOKEN_RE.match(src, pos)
        if match is None:
            if src[pos] == '/':
                reason = "'/' is only allowed inside a rational literal"
            else:
                reason = "unexpected character %r" % src[pos]
            raise exceptions.PolySyntaxError(position=pos, reason=reason)
        kind = match.lastgroup
        if kind != 'ws':
            text = match.group()
            if kind == 'ident' and text == IMAGINARY_UNIT:
                kind = 'imag'
            elif kind == 'op':
                kind = text
            tokens.append(Token(kind, text, pos))
        pos = match.end()
    tokens.append(Token('end', '', len(src)))
    return tokens


@dataclasses.dataclass(frozen=True)
class PolyExpr:
    source: str
    parsed: Poly
    variable: str


class Parser(object):
    """Recursive descent parser evaluating straight into :class:`Poly`."""

    _FACTOR_START = ('num', 'ident', 'imag', '(')

    def __init__(self, src, variable=None, allow_variable=True):
        if variable == IMAGINARY_UNIT:
            raise exceptions.PolySyntaxError(
                position=0, reason="'i' is reserved for the imaginary unit")
        self.src = src
        self.variable = variable
        self.allow_variable = allow_variable
        self._tokens = tokenize(src)
        self._index = 0

    @property
    def token(self):
        return self._tokens[self._index]

    def advance(self):
        token = self.token
        if token.kind != 'end':
            self._index += 1
        return token

    def _error(self, reason, token=None):
        token = token or self.token
        return exceptions.PolySyntaxError(position=token.position,
                                          reason=reason)

    def parse(self) -> Poly:
        if self.token.kind == 'end':
            raise self._error("empty expression")
        value = self.expr()
        if self.token.kind != 'end':
            raise self._error("unexpected %r" % self.token.text)
        return value

    def expr(self):
        value = self.term()
        while self.token.kind in ('+', '-'):
            op = self.advance()
            rhs = self.term()
            value = value + rhs if op.kind == '+' else value - rhs
        return value

    def term(self):
        value = self.unary()
        while True:
            op = self.token
            if op.kind == '*':
                self.advance()
                rhs = self.unary()
            elif op.kind in self._FACTOR_START:
                rhs = self.power()
            else:
                return value
            self._check_degree((value.degree or 0) + (rhs.degree or 0), op)
            value = value * rhs

    def _check_degree(self, degree, token):
        limit = CONF.parser.max_exponent
        if degree > limit:
            raise exceptions.DegreeLimitError(position=token.position,
                                              degree=degree, limit=limit)

    def unary(self):
        if self.token.kind in ('+', '-'):
            op = self.advance()
            value = self.unary()
            return -value if op.kind == '-' else value
        return self.power()

    def power(self):
        base = self.atom()
        if self.token.kind != '^':
            return base
        caret = self.advance()
        exponent_token = self.token
        exponent = self.unary()
        n = self._exponent(exponent, exponent_token, caret)
        self._check_degree((base.degree or 0) * n, caret)
        return base ** n

    def _exponent(self, value, token, caret):
        if not value.is_constant:
            raise exceptions.InvalidExponentError(
                position=token.position, reason="exponent must be constant")
        c = value.coefficient(0)
        if not c.is_real or c.re.denominator != 1:
            raise exceptions.InvalidExponentError(
                position=token.position,
                reason="exponent %s is not an integer" % render_gaussian(c))
        n = c.re.numerator
        if n < 0:
            raise exceptions.InvalidExponentError(
                position=token.position,
                reason="negative exponent %d" % n)
        if n > CONF.parser.max_exponent:
            raise exceptions.InvalidExponentError(
                position=caret.position,
                reason="exponent %d exceeds the limit %d"
                       % (n, CONF.parser.max_exponent))
        return n

    def atom(self):
        token = self.token
        if token.kind == 'num':
            self.advance()
            num, _, den = token.text.partition('/')
            if den and int(den) == 0:
                raise exceptions.PolySyntaxError(
                    position=token.position, reason="zero denominator")
            return Poly.constant(Fraction(int(num), int(den or 1)))
        if token.kind == 'imag':
            self.advance()
            return Poly.constant(I)
        if token.kind == 'ident':
            self._bind_variable(token)
            self.advance()
            return Poly.monomial(1)
        if token.kind == '(':
            self.advance()
            if self.token.kind == ')':
                raise self._error("empty parentheses")
            value = self.expr()
            if self.token.kind != ')':
                raise self._error("expected ')'")
            self.advance()
            return value
        if token.kind == 'end':
            raise self._error("unexpected end of input")
        raise self._error("unexpected %r" % token.text)

    def _bind_variable(self, token):
        if not self.allow_variable:
            raise self._error("a constant is expected, found variable %s"
                              % token.text, token)
        if self.variable is None:
            self.variable = token.text
        elif token.text != self.variable:
            raise exceptions.MultipleVariablesError(
                position=token.position, found=token.text,
                expected=self.variable)


def parse_expr(src: str, variable=None) -> PolyExpr:
    parser = Parser(src, variable=variable)
    parsed = parser.parse()
    LOG.debug("Parsed %(src)r as a polynomial of degree %(deg)s",
              {'src': src, 'deg': parsed.degree})
    return PolyExpr(source=src, parsed=parsed,
                    variable=parser.variable or variable
                    or CONF.parser.variable)


def parse_poly(src: str, variable=None) -> Poly:
    """Parse ``src`` into an exact :class:`Poly`."""
    return Parser(src, variable=variable).parse()


def parse_gaussian(src: str) -> GaussianRational:
    """Parse a constant such as ``3/5``, ``-i`` or ``1/2-1/2i``."""
    return Parser(src, allow_variable=False).parse().coefficient(0)


def _monomial(variable, power):
    if power == 0:
        return ''
    if power == 1:
        return variable
    return '%s^%d' % (variable, power)


def render_poly(f: Poly, variable=None) -> str:
    """Canonical descending-power rendering accepted by :func:`parse_poly`."""
    variable = variable or CONF.parser.variable
    if f.is_zero:
        return '0'
    terms = [(k, c) for k, c in enumerate(f.coeffs) if not c.is_zero]
    terms.reverse()
    out = []
    for idx, (power, c) in enumerate(terms):
        mono = _monomial(variable, power)
        if c.is_real:
            negative = c.re < 0
            mag = abs(c.re)
            if mono and mag == 1:
                body = mono
            elif not mono:
                body = str(mag)
            elif mag.denominator == 1:
                body = '%s%s' % (mag, mono)
            else:
                body = '%s %s' % (mag, mono)
        else:
            negative = False
            if len(terms) == 1 and not mono:
                body = render_gaussian(c)
            else:
                body = '(%s)%s' % (render_gaussian(c), mono)
        if idx == 0:
            out.append('-' + body if negative else body)
        else:
            out.append((' - ' if negative else ' + ') + body)
    return ''.join(out)
