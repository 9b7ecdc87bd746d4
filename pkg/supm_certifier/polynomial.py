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

"""Univariate polynomials over Q(i), backed by :class:`sympy.Poly`.

Every polynomial lives in ``QQ_I[z]``; :class:`GaussianRational` is only the
type coefficients cross the module boundary in.

Resultant sign convention: for f of degree m with roots a_1..a_m and
leading coefficient lc(f),

    Res(f, g) = lc(f)^deg(g) * g(a_1) * ... * g(a_m).

Downstream predicates only test resultants for vanishing or use their root
sets, so nothing depends on this choice.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable

from oslo_log import log as logging
import sympy
from sympy import QQ_I

from supm_certifier import exceptions
from supm_certifier import gaussian
from supm_certifier.gaussian import GaussianRational
from supm_certifier import linalg

LOG = logging.getLogger(__name__)

_Z = sympy.Symbol('z')


class Poly(object):
    """Immutable polynomial; ``coeffs`` are in ascending powers.

    The zero polynomial has an empty coefficient tuple and ``degree`` None,
    so a degree never takes part in arithmetic by accident.
    """

    __slots__ = ('_rep', '_coeffs')

    def __init__(self, coeffs: Iterable = ()):
        desc = [gaussian.to_qq_i(c) for c in coeffs]
        desc.reverse()
        self._rep = sympy.Poly.from_list(desc, _Z, domain=QQ_I)
        self._coeffs = None

    @classmethod
    def _wrap(cls, rep) -> Poly:
        obj = cls.__new__(cls)
        obj._rep = rep
        obj._coeffs = None
        return obj

    @classmethod
    def from_descending(cls, elements) -> Poly:
        """Build from QQ_I elements, highest power first."""
        return cls._wrap(sympy.Poly.from_list(list(elements), _Z,
                                              domain=QQ_I))

    @classmethod
    def constant(cls, value) -> Poly:
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Poly:
        return cls([0] * degree + [coeff])

    @classmethod
    def linear(cls, root) -> Poly:
        """The monic polynomial z - root."""
        return cls([-GaussianRational.coerce(root), 1])

    @property
    def sympy_poly(self) -> sympy.Poly:
        return self._rep

    @property
    def coeffs(self) -> tuple:
        if self._coeffs is None:
            self._coeffs = tuple(gaussian.from_qq_i(c)
                                 for c in reversed(self._elements()))
        return self._coeffs

    def _elements(self):
        return self._rep.rep.to_list()

    @property
    def degree(self):
        if self._rep.is_zero:
            return None
        return len(self._elements()) - 1

    @property
    def is_zero(self) -> bool:
        return bool(self._rep.is_zero)

    @property
    def is_constant(self) -> bool:
        return len(self._elements()) <= 1

    @property
    def leading_coefficient(self) -> GaussianRational:
        return self.coefficient(self.degree or 0)

    def coefficient(self, power: int) -> GaussianRational:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return gaussian.ZERO

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._elements() == other._elements()
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Poly([%s])" % ", ".join(str(c) for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def __call__(self, x) -> GaussianRational:
        x = gaussian.to_qq_i(x)
        acc = QQ_I.zero
        for c in self._elements():
            acc = acc * x + c
        return gaussian.from_qq_i(acc)

    def __neg__(self):
        return Poly._wrap(-self._rep)

    def __add__(self, other):
        return Poly._wrap(self._rep + _coerce_poly(other)._rep)

    __radd__ = __add__

    def __sub__(self, other):
        return Poly._wrap(self._rep - _coerce_poly(other)._rep)

    def __rsub__(self, other):
        return _coerce_poly(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        return Poly._wrap(self._rep * other._rep)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        return Poly._wrap(self._rep ** exponent)

    def __divmod__(self, other):
        return divrem(self, _coerce_poly(other))

    def __floordiv__(self, other):
        return divrem(self, _coerce_poly(other))[0]

    def __mod__(self, other):
        return divrem(self, _coerce_poly(other))[1]

    def scale(self, factor) -> Poly:
        return Poly._wrap(self._rep * Poly.constant(factor)._rep)

    def monic(self) -> Poly:
        if self.is_zero:
            raise exceptions.ZeroPolynomialError(operation="monic")
        if self.leading_coefficient == 1:
            return self
        return Poly._wrap(self._rep.monic())

    def derivative(self) -> Poly:
        return Poly._wrap(self._rep.diff(_Z))

    def compose(self, inner: Poly) -> Poly:
        """Return self(inner(z))."""
        return Poly._wrap(self._rep.compose(inner._rep))

    def exact_div(self, other: Poly) -> Poly:
        q, r = divrem(self, other)
        if not r.is_zero:
            raise exceptions.ArithmeticDomainError(
                reason="%r does not divide %r" % (other, self))
        return q

    def is_squarefree(self) -> bool:
        if self.is_zero:
            return False
        return bool(self._rep.is_sqf)

    def factor_list(self):
        """Irreducible factorization over Q(i).

        Returns ``(unit, parts)`` where ``parts`` is a tuple of
        ``(monic irreducible factor, multiplicity)`` pairs.
        """
        if self.is_zero:
            raise exceptions.ZeroPolynomialError(operation="factor_list")
        _, factors = self._rep.factor_list()
        parts = tuple((Poly._wrap(g).monic(), k) for g, k in factors)
        return self.leading_coefficient, parts


def _coerce_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.constant(value)


def divrem(f: Poly, g: Poly):
    """Return (q, r) with f = q*g + r and deg r < deg g."""
    if g.is_zero:
        raise exceptions.DivisionByZero(reason="division by the zero "
                                               "polynomial")
    q, r = f.sympy_poly.div(g.sympy_poly)
    return Poly._wrap(q), Poly._wrap(r)


_ARITH = {
    'add': lambda f, g: f + g,
    'sub': lambda f, g: f - g,
    'mul': lambda f, g: f * g,
    'divrem': divrem,
}


def poly_arith(op: str, f: Poly, g: Poly):
    """Dispatch one of add, sub, mul or divrem."""
    try:
        func = _ARITH[op]
    except KeyError:
        raise exceptions.ArithmeticDomainError(
            reason="unknown polynomial operation %s" % op)
    return func(f, g)


def derivative(f: Poly) -> Poly:
    return f.derivative()


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    if f.is_zero and g.is_zero:
        raise exceptions.ZeroPolynomialError(operation="gcd")
    return Poly._wrap(f.sympy_poly.gcd(g.sympy_poly)).monic()


@dataclasses.dataclass(frozen=True)
class SquareFreePart:
    factor: Poly
    multiplicity: int


@dataclasses.dataclass(frozen=True)
class SquareFreeDecomposition:
    """unit * prod(factor ** multiplicity) over ``parts``."""

    parts: tuple
    unit: GaussianRational

    @property
    def squarefree_part(self) -> Poly:
        out = Poly.constant(1)
        for part in self.parts:
            out = out * part.factor
        return out

    @property
    def distinct_root_count(self) -> int:
        return sum(part.factor.degree for part in self.parts)

    def expand(self) -> Poly:
        out = Poly.constant(self.unit)
        for part in self.parts:
            out = out * part.factor ** part.multiplicity
        return out

    def multiplicity_of(self, factor: Poly) -> int:
        for part in self.parts:
            if gcd(part.factor, factor).degree:
                return part.multiplicity
        return 0


def squarefree_decompose(f: Poly) -> SquareFreeDecomposition:
    """Square-free decomposition with monic factors, lowest power first."""
    if f.is_zero:
        raise exceptions.ZeroPolynomialError(operation="squarefree_decompose")
    _, factors = f.sympy_poly.sqf_list()
    parts = tuple(SquareFreePart(Poly._wrap(g).monic(), k)
                  for g, k in sorted(factors, key=lambda item: item[1]))
    return SquareFreeDecomposition(parts=parts, unit=f.leading_coefficient)


def resultant(f: Poly, g: Poly) -> GaussianRational:
    if f.is_zero or g.is_zero:
        raise exceptions.ZeroPolynomialError(operation="resultant")
    return gaussian.from_sympy(f.sympy_poly.resultant(g.sympy_poly))


def multiplication_matrix(f: Poly, p: Poly):
    """Matrix of multiplication by p on Q(i)[z]/(f) in the basis z^j."""
    f = f.monic()
    m = f.degree
    column = p % f
    shift = Poly.monomial(1)
    rows = linalg.zeros(m)
    for j in range(m):
        for i, c in enumerate(reversed(column._elements())):
            rows[i][j] = c
        column = (column * shift) % f
    return rows


def _charpoly(matrix) -> Poly:
    return Poly.from_descending(linalg.charpoly(matrix))


def bivariate_resultant_in_w(f: Poly, p: Poly) -> Poly:
    """Monic R(w) = Res_z(f(z), w - p(z)) / lc(f)^deg(p).

    R is the characteristic polynomial of multiplication by p modulo f,
    so its roots are p(a) over the roots a of f, with multiplicity.
    """
    if f.is_zero:
        raise exceptions.ZeroPolynomialError(
            operation="bivariate_resultant_in_w")
    if p.is_constant:
        raise exceptions.ConstantPolynomialError(
            operation="bivariate_resultant_in_w")
    if f.degree == 0:
        return Poly.constant(1)
    return _charpoly(multiplication_matrix(f, p))


def companion_matrix(r: Poly):
    """Companion matrix whose characteristic polynomial is monic(r)."""
    r = r.monic()
    k = r.degree
    rows = linalg.zeros(k)
    for i in range(1, k):
        rows[i][i - 1] = QQ_I.one
    for i, c in enumerate(reversed(r._elements()[1:])):
        rows[i][k - 1] = -c
    return rows


def root_sum_poly(r1: Poly, r2: Poly) -> Poly:
    """Monic polynomial whose roots are a + b, a a root of r1, b of r2."""
    if r1.is_zero or r2.is_zero:
        raise exceptions.ZeroPolynomialError(operation="root_sum_poly")
    if r1.degree == 0 or r2.degree == 0:
        return Poly.constant(1)
    return _charpoly(linalg.kronecker_sum(companion_matrix(r1),
                                          companion_matrix(r2)))


def pair_sum_poly(r: Poly) -> Poly:
    """Monic polynomial whose roots are a_l + a_m over pairs l < m.

    Uses the derivation induced by the companion matrix on the exterior
    square, so the diagonal sums 2*a_l never appear.
    """
    if r.is_zero:
        raise exceptions.ZeroPolynomialError(operation="pair_sum_poly")
    if r.degree < 2:
        return Poly.constant(1)
    return _charpoly(linalg.exterior_square_derivation(companion_matrix(r)))


def is_power_of_variable(f: Poly) -> bool:
    """True when f is c*w^d, i.e. every root is zero."""
    return not f.is_zero and all(c.is_zero for c in f.coeffs[:-1])
