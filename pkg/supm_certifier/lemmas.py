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

"""Exact checks on the auxiliary polynomial psi of the multiple zero family.

    psi(t) = lambda (t^(n-1) - A)^2 - 4 (t^(n-2) - A)(t^n - A)

with lambda = 4(1 - 1/(n-1)^2).
"""

from __future__ import annotations

import dataclasses

from oslo_log import log as logging

from supm_certifier import certifier
from supm_certifier import exceptions
from supm_certifier.gaussian import GaussianRational
from supm_certifier.gaussian import render_gaussian
from supm_certifier import parser
from supm_certifier import polynomial
from supm_certifier.polynomial import Poly

LOG = logging.getLogger(__name__)

LEMMAS = ('l3_1', 'l3_2', 'l3_3')


@dataclasses.dataclass(frozen=True)
class LemmaResult:
    lemma_id: str
    holds: bool
    witnesses: dict = dataclasses.field(default_factory=dict)

    def to_dict(self) -> dict:
        return {'lemma_id': self.lemma_id, 'holds': self.holds,
                'witnesses': self.witnesses}

    @classmethod
    def from_dict(cls, data: dict) -> LemmaResult:
        return cls(lemma_id=data['lemma_id'], holds=data['holds'],
                   witnesses=dict(data.get('witnesses') or {}))


def _render_t(f: Poly) -> str:
    return parser.render_poly(f, variable='t')


def psi_poly(n: int, a) -> Poly:
    """psi as a polynomial in t; degree 2n-2 with leading term lambda-4."""
    if n < 3:
        raise exceptions.LemmaPreconditionError(
            lemma='psi', reason="n >= 3 is required, got n=%s" % n)
    a = Poly.constant(GaussianRational.coerce(a))
    lam = certifier.lambda_thm23(n)
    t = Poly.monomial
    return ((t(n - 1) - a) ** 2).scale(lam) - (
        (t(n - 2) - a) * (t(n) - a)).scale(4)


def _check_a(lemma, a, enforce):
    if not enforce:
        return
    if a.is_zero or a == 1:
        raise exceptions.LemmaPreconditionError(
            lemma=lemma, reason="A must not be 0 or 1, got A=%s"
                                % render_gaussian(a))


def verify_lemma_3_1(n: int, a, enforce_preconditions=True) -> LemmaResult:
    """psi has no multiple roots when A is not 0 or 1."""
    a = GaussianRational.coerce(a)
    _check_a('l3_1', a, enforce_preconditions)
    psi = psi_poly(n, a)
    g = polynomial.gcd(psi, psi.derivative())
    value_at_one = psi(GaussianRational(1))
    # ψ(1) is (λ-4)(1-A)^2, not (1-A)^2; both vanish only at A = 1
    stated = (1 - a) ** 2
    witnesses = {'n': n, 'A': render_gaussian(a),
                 'psi_degree': psi.degree,
                 'gcd': _render_t(g),
                 'psi_at_1': render_gaussian(value_at_one),
                 'psi_at_1_stated': render_gaussian(stated),
                 'psi_at_1_matches_stated': value_at_one == stated}
    holds = g.degree == 0
    LOG.debug("Lemma 3.1 at n=%(n)d A=%(a)s: %(holds)s",
              {'n': n, 'a': a, 'holds': holds})
    return LemmaResult('l3_1', holds, witnesses)


def verify_lemma_3_2_structure(n: int) -> LemmaResult:
    """At A = 1, psi = unit * g * (t-1)^4 with g square-free of degree 2n-6."""
    if n < 5:
        raise exceptions.LemmaPreconditionError(
            lemma='l3_2', reason="n >= 5 is required, got n=%s" % n)
    psi = psi_poly(n, 1)
    decomposition = polynomial.squarefree_decompose(psi)
    parts = decomposition.parts
    t_minus_one = Poly.linear(1)
    witnesses = {
        'n': n,
        'decomposition': [{'factor': _render_t(p.factor),
                           'multiplicity': p.multiplicity} for p in parts],
    }
    holds = False
    if len(parts) == 2:
        simple, quartic = parts
        g = simple.factor
        holds = (simple.multiplicity == 1 and quartic.multiplicity == 4
                 and quartic.factor == t_minus_one
                 and not g(GaussianRational(1)).is_zero
                 and g.degree == 2 * n - 6)
        witnesses.update(g=_render_t(g), g_degree=g.degree)
    return LemmaResult('l3_2', holds, witnesses)


def verify_lemma_3_3(n: int, a, enforce_preconditions=True) -> LemmaResult:
    """psi and t^n - A have no common root when A is not 0 or 1."""
    a = GaussianRational.coerce(a)
    _check_a('l3_3', a, enforce_preconditions)
    psi = psi_poly(n, a)
    g = polynomial.gcd(psi, Poly.monomial(n) - a)
    return LemmaResult('l3_3', g.degree == 0,
                       {'n': n, 'A': render_gaussian(a), 'gcd': _render_t(g)})


def verify(lemma_id: str, n: int, a=None) -> LemmaResult:
    """Dispatch used by the command line; preconditions always enforced."""
    if lemma_id == 'l3_2':
        return verify_lemma_3_2_structure(n)
    if a is None:
        raise exceptions.LemmaPreconditionError(
            lemma=lemma_id, reason="parameter A is required")
    if lemma_id == 'l3_1':
        return verify_lemma_3_1(n, a)
    if lemma_id == 'l3_3':
        if n < 3:
            raise exceptions.LemmaPreconditionError(
                lemma=lemma_id, reason="n >= 3 is required, got n=%s" % n)
        return verify_lemma_3_3(n, a)
    raise exceptions.LemmaPreconditionError(
        lemma=lemma_id, reason="unknown lemma; expected one of %s"
                               % ', '.join(LEMMAS))
