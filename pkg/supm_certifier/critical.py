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

"""Critical structure of a polynomial.

With S the square-free part of P' the critical value polynomial
R(w) = Res_z(S(z), w - P(z)) has the distinct critical values as roots, and
D(w) = Res_z(P'(z), w - P(z)) repeats each value as often as P' vanishes on
its fiber. Injectivity and fiber counts are read off square-free
decompositions of R and D; root extraction is only used to name points.
"""

from __future__ import annotations

import dataclasses
import typing

from oslo_log import log as logging

from supm_certifier import exceptions
from supm_certifier.gaussian import GaussianRational
from supm_certifier import polynomial
from supm_certifier.polynomial import Poly
from supm_certifier import roots

LOG = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CriticalPoint:
    """A zero of P'.

    ``point`` is None when the zero is not in Q(i); ``factor`` is then the
    square-free factor of P' it is a root of, and ``critical_value`` is None
    unless every root of that factor maps to the same Q(i) value.
    """

    point: typing.Optional[GaussianRational]
    factor: Poly
    derivative_multiplicity: int
    critical_value: typing.Optional[GaussianRational]

    @property
    def value_order(self) -> int:
        return self.derivative_multiplicity + 1

    @property
    def is_explicit(self) -> bool:
        return self.point is not None

    @property
    def has_explicit_value(self) -> bool:
        return self.critical_value is not None


@dataclasses.dataclass(frozen=True)
class CriticalStructure:
    polynomial: Poly
    points: tuple
    critical_value_poly: Poly
    weighted_value_poly: Poly
    critically_injective: bool
    simple_zeros: bool
    derivative_decomposition: polynomial.SquareFreeDecomposition

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    @property
    def k(self) -> int:
        return len(self.points)

    @property
    def multiplicities(self) -> list:
        return [p.derivative_multiplicity for p in self.points]

    @property
    def explicit_values(self) -> list:
        """Distinct explicit critical values in deterministic order."""
        seen = []
        for p in self.points:
            if p.has_explicit_value and p.critical_value not in seen:
                seen.append(p.critical_value)
        return sorted(seen, key=GaussianRational.sort_key)

    @property
    def all_values_explicit(self) -> bool:
        return all(p.has_explicit_value for p in self.points)

    def tiers(self) -> list:
        """Square-free parts of P', highest multiplicity first."""
        return sorted(self.derivative_decomposition.parts,
                      key=lambda part: -part.multiplicity)

    def points_of(self, multiplicity: int) -> list:
        return [p for p in self.points
                if p.derivative_multiplicity == multiplicity]


@dataclasses.dataclass(frozen=True)
class FiberCount:
    """Number of distinct preimages of one critical value.

    Explicit entries carry ``value``. A symbolic entry carries ``factor``
    instead and stands for each of its ``factor.degree`` roots, which all
    share ``distinct_preimages``.
    """

    value: typing.Optional[GaussianRational]
    factor: Poly
    distinct_preimages: int

    @property
    def is_explicit(self) -> bool:
        return self.value is not None

    @property
    def value_count(self) -> int:
        return 1 if self.is_explicit else self.factor.degree


def _common_value(factor: Poly, p: Poly):
    """Q(i) value shared by P at every root of factor, if there is one."""
    values = polynomial.bivariate_resultant_in_w(factor, p)
    d = values.degree
    candidate = -values.coefficient(d - 1) / d
    if values == Poly.linear(candidate) ** d:
        return candidate
    return None


def _points_of_part(part, p):
    explicit, cofactor = roots.rational_roots(part.factor)
    points = [CriticalPoint(point=root, factor=Poly.linear(root),
                            derivative_multiplicity=part.multiplicity,
                            critical_value=p(root))
              for root in explicit]
    if cofactor.degree:
        value = _common_value(cofactor, p)
        points.extend(
            CriticalPoint(point=None, factor=cofactor.monic(),
                          derivative_multiplicity=part.multiplicity,
                          critical_value=value)
            for _ in range(cofactor.degree))
    return points


def analyze(p: Poly) -> CriticalStructure:
    """Compute the critical structure of a polynomial of degree >= 2."""
    if p.degree is None or p.degree < 2:
        raise exceptions.DegreeTooLow(degree=p.degree)
    dp = p.derivative()
    decomposition = polynomial.squarefree_decompose(dp)
    s = decomposition.squarefree_part
    r = polynomial.bivariate_resultant_in_w(s, p)
    d = polynomial.bivariate_resultant_in_w(dp, p)
    points = []
    for part in sorted(decomposition.parts,
                       key=lambda part: part.multiplicity):
        points.extend(_points_of_part(part, p))
    cs = CriticalStructure(
        polynomial=p,
        points=tuple(points),
        critical_value_poly=r,
        weighted_value_poly=d,
        critically_injective=r.is_squarefree(),
        simple_zeros=polynomial.gcd(p, dp).degree == 0,
        derivative_decomposition=decomposition)
    LOG.debug("Analyzed polynomial of degree %(n)d: k=%(k)d, q=%(q)s, "
              "injective=%(inj)s, simple zeros=%(simple)s",
              {'n': p.degree, 'k': cs.k, 'q': cs.multiplicities,
               'inj': cs.critically_injective, 'simple': cs.simple_zeros})
    return cs


def fiber_counts(cs: CriticalStructure) -> list:
    """One entry per distinct critical value (symbolic ones grouped)."""
    n = cs.degree
    explicit = []
    symbolic = []
    known = cs.explicit_values
    for part in polynomial.squarefree_decompose(
            cs.weighted_value_poly).parts:
        rest = part.factor
        for value in known:
            if rest(value).is_zero:
                explicit.append(FiberCount(
                    value=value, factor=Poly.linear(value),
                    distinct_preimages=n - part.multiplicity))
                rest = rest.exact_div(Poly.linear(value))
        if not rest.degree:
            continue
        found, rest = roots.rational_roots(rest)
        for value in found:
            explicit.append(FiberCount(
                value=value, factor=Poly.linear(value),
                distinct_preimages=n - part.multiplicity))
        if rest.degree:
            symbolic.append(FiberCount(
                value=None, factor=rest.monic(),
                distinct_preimages=n - part.multiplicity))
    explicit.sort(key=lambda fc: fc.value.sort_key())
    return explicit + symbolic


def fiber_count_at(cs: CriticalStructure, value) -> int:
    """Distinct preimages of any value, critical or not."""
    value = GaussianRational.coerce(value)
    d = cs.weighted_value_poly
    multiplicity = 0
    factor = Poly.linear(value)
    while d(value).is_zero:
        d = d.exact_div(factor)
        multiplicity += 1
    return cs.degree - multiplicity


def pairwise_value_sum_poly(cs: CriticalStructure) -> Poly:
    """Polynomial whose roots are P(d_l) + P(d_m) over pairs l < m."""
    if cs.k < 2:
        raise exceptions.InsufficientCriticalPoints(
            operation="pairwise_value_sum_poly", needed=2, found=cs.k)
    return polynomial.pair_sum_poly(cs.critical_value_poly)


def sum_of_critical_values(cs: CriticalStructure) -> GaussianRational:
    r = cs.critical_value_poly
    return -r.coefficient(r.degree - 1)
