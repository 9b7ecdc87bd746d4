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

"""Exact arithmetic in the Gaussian rationals Q(i).

Rationals are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator. A :class:`GaussianRational` is a
pair of such fractions, so equality is structural.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
import math
import numbers

import sympy
from sympy import QQ
from sympy import QQ_I
from sympy.polys.polyerrors import CoercionFailed

from supm_certifier import exceptions

BigRational = Fraction


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, numbers.Rational)):
        return Fraction(value)
    raise TypeError("expected an exact rational, got %r" % (value,))


@dataclasses.dataclass(frozen=True, eq=False)
class GaussianRational:
    """An exact element re + im*i of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 're', _as_fraction(self.re))
        object.__setattr__(self, 'im', _as_fraction(self.im))

    @classmethod
    def coerce(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        return cls(_as_fraction(value))

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def denominator(self) -> int:
        """Least common denominator of both components."""
        a, b = self.re.denominator, self.im.denominator
        return a * b // math.gcd(a, b)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussianRational:
        if self.is_zero:
            raise exceptions.DivisionByZero(reason="inverse of 0 in Q(i)")
        n = self.norm()
        return GaussianRational(self.re / n, -self.im / n)

    def sort_key(self):
        return (self.re, self.im)

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, numbers.Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0 and d == 0:
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self):
        return render_gaussian(self)

    def __repr__(self):
        return "GaussianRational(%s)" % render_gaussian(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gr_add(x: GaussianRational, y: GaussianRational) -> GaussianRational:
    return x + y


def gr_mul(x: GaussianRational, y: GaussianRational) -> GaussianRational:
    return x * y


def gr_inv(x: GaussianRational) -> GaussianRational:
    """Multiplicative inverse; raises DivisionByZero for 0."""
    return GaussianRational.coerce(x).inverse()


def to_qq_i(value):
    """Convert to an element of sympy's Gaussian rational field."""
    x = GaussianRational.coerce(value)
    return QQ_I(QQ(x.re.numerator, x.re.denominator),
                QQ(x.im.numerator, x.im.denominator))


def _qq_to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def from_qq_i(element) -> GaussianRational:
    return GaussianRational(_qq_to_fraction(element.x),
                            _qq_to_fraction(element.y))


def from_sympy(expr) -> GaussianRational:
    """Convert a sympy number of the form a + b*I, a and b rational."""
    try:
        return from_qq_i(QQ_I.from_sympy(sympy.sympify(expr)))
    except CoercionFailed:
        raise exceptions.ArithmeticDomainError(
            reason="%s is not an element of Q(i)" % (expr,))


def render_rational(q: Fraction) -> str:
    return str(q)


def _imaginary_term(magnitude: Fraction) -> str:
    return "i" if magnitude == 1 else "%si" % magnitude


def render_gaussian(x: GaussianRational) -> str:
    """Render as ``a/b+c/di``; the output is accepted by the parser."""
    if x.im == 0:
        return render_rational(x.re)
    if x.re == 0:
        sign = "-" if x.im < 0 else ""
        return sign + _imaginary_term(abs(x.im))
    sign = "-" if x.im < 0 else "+"
    return "%s%s%s" % (x.re, sign, _imaginary_term(abs(x.im)))
