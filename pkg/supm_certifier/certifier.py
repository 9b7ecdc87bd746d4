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

"""Uniqueness and strong uniqueness certifiers.

Each ``check_*`` function evaluates every hypothesis of one criterion
exactly and returns a :class:`Certificate`. A false hypothesis is never an
exception: it yields ``HypothesisFailed`` naming the first failing
condition. ``Inconclusive`` is reserved for conditions that depend on a
critical value outside Q(i).
"""

from __future__ import annotations

import dataclasses
import enum
from fractions import Fraction
import itertools
import typing

from oslo_log import log as logging

from supm_certifier import config
from supm_certifier import critical
from supm_certifier import exceptions
from supm_certifier.gaussian import GaussianRational
from supm_certifier.gaussian import render_gaussian
from supm_certifier import parser
from supm_certifier import polynomial
from supm_certifier.polynomial import Poly

CONF = config.CONF
LOG = logging.getLogger(__name__)


class TheoremId(str, enum.Enum):
    FUJIMOTO_A = 'FujimotoA'
    FUJIMOTO_B = 'FujimotoB'
    FUJIMOTO_C = 'FujimotoC'
    FUJIMOTO_D = 'FujimotoD'
    THM_2_1 = 'Thm2_1'
    THM_2_2 = 'Thm2_2'
    COR_2_1 = 'Cor2_1'
    THM_2_3_FAMILY = 'Thm2_3_family'
    COR_2_3_FAMILY = 'Cor2_3_family'
    URS_E = 'URS_E'
    URS_F = 'URS_F'
    URS_G = 'URS_G'
    URS_2_4 = 'URS_2_4'
    URS_2_5 = 'URS_2_5'


class Verdict(str, enum.Enum):
    CERTIFIED = 'Certified'
    HYPOTHESIS_FAILED = 'HypothesisFailed'
    INCONCLUSIVE = 'Inconclusive'


class Conclusion(str, enum.Enum):
    UPM = 'UPM'
    SUPM = 'SUPM'
    URSM_L = 'URSM_l'
    URSE_L = 'URSE_l'
    NONE = 'none'


@dataclasses.dataclass(frozen=True)
class Certificate:
    theorem_id: TheoremId
    verdict: Verdict
    conclusion: Conclusion
    failed_hypothesis: typing.Optional[str] = None
    reason: typing.Optional[str] = None
    witnesses: dict = dataclasses.field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED

    def to_dict(self) -> dict:
        return {
            'theorem_id': self.theorem_id.value,
            'verdict': self.verdict.value,
            'conclusion': self.conclusion.value,
            'failed_hypothesis': self.failed_hypothesis,
            'reason': self.reason,
            'witnesses': self.witnesses,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Certificate:
        return cls(theorem_id=TheoremId(data['theorem_id']),
                   verdict=Verdict(data['verdict']),
                   conclusion=Conclusion(data['conclusion']),
                   failed_hypothesis=data.get('failed_hypothesis'),
                   reason=data.get('reason'),
                   witnesses=dict(data.get('witnesses') or {}))


class Hypotheses(object):
    """Ordered record of evaluated hypotheses."""

    def __init__(self):
        self._results = []

    def check(self, name, holds):
        holds = bool(holds)
        LOG.debug("Hypothesis %(name)s: %(holds)s",
                  {'name': name, 'holds': holds})
        self._results.append((name, holds))
        return holds

    @property
    def failed(self) -> list:
        return [name for name, holds in self._results if not holds]

    def as_dict(self) -> dict:
        return dict(self._results)


def _render_value(value):
    if value is None:
        return 'symbolic'
    return render_gaussian(value)


def _render_w(f: Poly) -> str:
    return parser.render_poly(f, variable='w')


def _render_point(point: critical.CriticalPoint) -> str:
    if point.is_explicit:
        return render_gaussian(point.point)
    return 'root of %s' % parser.render_poly(point.factor)


def finish(theorem, hyps, witnesses, conclusion) -> Certificate:
    """Turn an evaluated hypothesis record into a certificate."""
    witnesses['hypotheses'] = hyps.as_dict()
    failed = hyps.failed
    if failed:
        witnesses['failed_hypotheses'] = failed
        LOG.debug("%(thm)s: hypothesis %(name)s failed",
                  {'thm': theorem.value, 'name': failed[0]})
        return Certificate(theorem_id=theorem,
                           verdict=Verdict.HYPOTHESIS_FAILED,
                           conclusion=Conclusion.NONE,
                           failed_hypothesis=failed[0],
                           witnesses=witnesses)
    return Certificate(theorem_id=theorem, verdict=Verdict.CERTIFIED,
                       conclusion=conclusion, witnesses=witnesses)


def inconclusive(theorem, reason, witnesses=None, hyps=None) -> Certificate:
    witnesses = witnesses if witnesses is not None else {}
    if hyps is not None:
        witnesses['hypotheses'] = hyps.as_dict()
    LOG.warning("%(thm)s is inconclusive: %(reason)s",
                {'thm': theorem.value, 'reason': reason})
    return Certificate(theorem_id=theorem, verdict=Verdict.INCONCLUSIVE,
                       conclusion=Conclusion.NONE, reason=reason,
                       witnesses=witnesses)


def _structure_witnesses(cs):
    return {'n': cs.degree, 'k': cs.k,
            'q': sorted(cs.multiplicities, reverse=True)}


def check_fujimoto_A(cs: critical.CriticalStructure) -> Certificate:
    """Uniqueness criterion for critically injective polynomials."""
    witnesses = _structure_witnesses(cs)
    q = cs.multiplicities
    total = sum(q)
    pair_products = sum(a * b for a, b in itertools.combinations(q, 2))
    witnesses.update(sum_q=total, sum_pair_products=pair_products)
    if not cs.critically_injective:
        return inconclusive(TheoremId.FUJIMOTO_A, 'not critically injective',
                            witnesses)
    hyps = Hypotheses()
    holds = hyps.check('sum q_l q_m > sum q_l', pair_products > total)
    # the criterion is an equivalence, so failure refutes UPM
    witnesses['not_upm'] = not holds
    return finish(TheoremId.FUJIMOTO_A, hyps, witnesses, Conclusion.UPM)


def _upm_via_a(cs, hyps, witnesses):
    upm = check_fujimoto_A(cs)
    witnesses['upm_chain'] = {'theorem_id': upm.theorem_id.value,
                              'verdict': upm.verdict.value}
    hyps.check('UPM (Theorem A)', upm.certified)


def check_fujimoto_B(cs: critical.CriticalStructure) -> Certificate:
    witnesses = _structure_witnesses(cs)
    value_sum = critical.sum_of_critical_values(cs)
    witnesses['value_sum'] = render_gaussian(value_sum)
    hyps = Hypotheses()
    hyps.check('critically injective', cs.critically_injective)
    hyps.check('k >= 4', cs.k >= 4)
    hyps.check('value sum != 0', not value_sum.is_zero)
    return finish(TheoremId.FUJIMOTO_B, hyps, witnesses, Conclusion.SUPM)


def theorem_c_value_conditions(r: Poly):
    """Value conditions of the three point criterion read from monic R.

    Returns ``(conditions, witnesses)``. With e3 the product of the values,
    the product over permutations of P(d_m)^2 - P(d_l)P(d_n) equals
    Res(R, w^3 - e3)^2 / e3^2.
    """
    r = r.monic()
    if r.degree != 3:
        raise exceptions.InsufficientCriticalPoints(
            operation='theorem_c_value_conditions', needed=3, found=r.degree)
    e3 = -r.coefficient(0)
    pair_sums = polynomial.pair_sum_poly(r)
    conditions = {
        'critical values nonzero': not e3.is_zero,
        'ratio != 1': r.is_squarefree(),
        'ratio != -1': not pair_sums.coefficient(0).is_zero,
    }
    witnesses = {'value_product': render_gaussian(e3),
                 'pair_sum_poly': _render_w(pair_sums)}
    if e3.is_zero:
        conditions['permutation condition'] = False
        witnesses['permutation_product'] = 'undefined'
    else:
        res = polynomial.resultant(r, Poly.monomial(3) - e3)
        conditions['permutation condition'] = not res.is_zero
        witnesses['permutation_product'] = render_gaussian(
            res * res / (e3 * e3))
    return conditions, witnesses


def check_fujimoto_C(cs: critical.CriticalStructure) -> Certificate:
    witnesses = _structure_witnesses(cs)
    hyps = Hypotheses()
    hyps.check('critically injective', cs.critically_injective)
    hyps.check('k = 3', cs.k == 3)
    if cs.k == 3:
        hyps.check('max q >= 2', max(cs.multiplicities) >= 2)
        conditions, extra = theorem_c_value_conditions(cs.critical_value_poly)
        witnesses.update(extra)
        for name, holds in conditions.items():
            hyps.check(name, holds)
    return finish(TheoremId.FUJIMOTO_C, hyps, witnesses, Conclusion.SUPM)


def check_fujimoto_D(cs: critical.CriticalStructure) -> Certificate:
    witnesses = _structure_witnesses(cs)
    hyps = Hypotheses()
    hyps.check('critically injective', cs.critically_injective)
    hyps.check('k = 2', cs.k == 2)
    if cs.k == 2:
        q1, q2 = sorted(cs.multiplicities)
        value_sum = critical.sum_of_critical_values(cs)
        clause1 = q1 >= 3 and not value_sum.is_zero
        clause2 = q1 >= 2 and q2 >= q1 + 3
        witnesses.update(q1=q1, q2=q2, value_sum=render_gaussian(value_sum),
                         clause_1=clause1, clause_2=clause2)
        hyps.check('clause (1) or clause (2)', clause1 or clause2)
    return finish(TheoremId.FUJIMOTO_D, hyps, witnesses, Conclusion.SUPM)


def _tier_values(cs, tier):
    return polynomial.bivariate_resultant_in_w(tier.factor, cs.polynomial)


def _explicit_pair(alphas, betas):
    """First pair with nonzero value sum, else the first pair."""
    first = None
    for a in alphas:
        for b in betas:
            if a is b:
                continue
            if first is None:
                first = (a, b)
            if not (a.critical_value + b.critical_value).is_zero:
                return a, b, True
    return first[0], first[1], False


def _maximal_pair(cs):
    """Evaluate the pair of maximal multiplicities.

    Returns (p, t, sum_nonzero, witnesses); p belongs to alpha.
    """
    tiers = cs.tiers()
    top = tiers[0]
    alphas = cs.points_of(top.multiplicity)
    if top.factor.degree >= 2:
        second, betas = top, alphas
    else:
        second = tiers[1]
        betas = cs.points_of(second.multiplicity)
    p, t = top.multiplicity + 1, second.multiplicity + 1
    witnesses = {}
    if all(pt.has_explicit_value for pt in alphas + betas):
        alpha, beta, sum_ok = _explicit_pair(alphas, betas)
        witnesses.update(
            alpha=_render_point(alpha), beta=_render_point(beta),
            alpha_value=render_gaussian(alpha.critical_value),
            beta_value=render_gaussian(beta.critical_value),
            value_sum=render_gaussian(alpha.critical_value
                                      + beta.critical_value))
        return p, t, sum_ok, witnesses
    if second is top:
        sums = polynomial.pair_sum_poly(_tier_values(cs, top))
    else:
        sums = polynomial.root_sum_poly(_tier_values(cs, top),
                                        _tier_values(cs, second))
    witnesses.update(alpha=_render_point(alphas[0]),
                     beta=_render_point(betas[0]),
                     value_sum_poly=_render_w(sums))
    return p, t, not polynomial.is_power_of_variable(sums), witnesses


def _scan_pairs(cs):
    """Extended mode: every pair of multiplicity tiers."""
    n = cs.degree
    tiers = cs.tiers()
    for i, first in enumerate(tiers):
        for second in tiers[i:]:
            if second is first and first.factor.degree < 2:
                continue
            p, t = first.multiplicity + 1, second.multiplicity + 1
            if max(t, p) + t + p < 5 + n:
                continue
            r1 = _tier_values(cs, first)
            if second is first:
                sums = polynomial.pair_sum_poly(r1)
            else:
                sums = polynomial.root_sum_poly(r1, _tier_values(cs, second))
            if not polynomial.is_power_of_variable(sums):
                return p, t, {'alpha_multiplicity': first.multiplicity,
                              'beta_multiplicity': second.multiplicity,
                              'value_sum_poly': _render_w(sums)}
    return None


def check_thm_2_1(cs: critical.CriticalStructure,
                  pair_mode=None) -> Certificate:
    """Two critical points of large order with nonzero value sum."""
    pair_mode = pair_mode or CONF.certifier.pair_mode
    n = cs.degree
    witnesses = _structure_witnesses(cs)
    witnesses['pair_mode'] = pair_mode
    witnesses['extension'] = False
    hyps = Hypotheses()
    hyps.check('k >= 2', cs.k >= 2)
    hyps.check('simple zeros', cs.simple_zeros)
    hyps.check('critically injective', cs.critically_injective)
    if cs.k >= 2:
        p, t, sum_ok, extra = _maximal_pair(cs)
        inequality = max(t, p) + t + p >= 5 + n
        if pair_mode == 'any' and not (inequality and sum_ok):
            found = _scan_pairs(cs)
            if found is not None:
                p, t, extra = found
                inequality = sum_ok = True
                witnesses['extension'] = True
        witnesses.update(extra)
        witnesses.update(t=t, p=p, lhs=max(t, p) + t + p, rhs=5 + n)
        hyps.check('inequality', inequality)
        hyps.check('value sum != 0', sum_ok)
    _upm_via_a(cs, hyps, witnesses)
    return finish(TheoremId.THM_2_1, hyps, witnesses, Conclusion.SUPM)


def _value_slots(counts):
    slots = []
    for fc in counts:
        if fc.is_explicit:
            slots.append((render_gaussian(fc.value), fc.value,
                          fc.distinct_preimages))
        else:
            label = parser.render_poly(fc.factor, variable='w')
            for j in range(fc.value_count):
                slots.append(('root %d of %s' % (j + 1, label), None,
                              fc.distinct_preimages))
    return slots


def _evaluate_2_2_pair(n, slots, i, j):
    gamma, delta = slots[i], slots[j]
    p, q = gamma[2], delta[2]
    low = min(p, q)
    others = [s[2] for idx, s in enumerate(slots) if idx not in (i, j)]
    return {'gamma': gamma[0], 'delta': delta[0], 'p': p, 'q': q,
            '|p-q| >= 3': abs(p - q) >= 3,
            'n >= min(p,q)+3': n >= low + 3,
            'other values >= min(p,q)+3': all(c >= low + 3 for c in others)}


_PAIR_CONDITIONS_2_2 = ('|p-q| >= 3', 'n >= min(p,q)+3',
                        'other values >= min(p,q)+3')


def check_thm_2_2(cs: critical.CriticalStructure,
                  gamma_value_order_pair=None) -> Certificate:
    """Fiber count gap criterion.

    ``gamma_value_order_pair`` optionally restricts the check to a pair of
    explicit critical values; by default every pair is evaluated. Values
    outside Q(i) still carry exact fiber counts, so they never make the
    check inconclusive.
    """
    n = cs.degree
    witnesses = _structure_witnesses(cs)
    hyps = Hypotheses()
    hyps.check('k >= 2', cs.k >= 2)
    hyps.check('simple zeros', cs.simple_zeros)
    hyps.check('critically injective', cs.critically_injective)
    if cs.k >= 2:
        slots = _value_slots(critical.fiber_counts(cs))
        if gamma_value_order_pair is not None:
            wanted = [GaussianRational.coerce(v)
                      for v in gamma_value_order_pair]
            index = {s[1]: idx for idx, s in enumerate(slots)
                     if s[1] is not None}
            missing = [v for v in wanted if v not in index]
            if missing or len(set(wanted)) != 2:
                raise exceptions.StructureError(
                    reason="%s is not a pair of distinct explicit critical "
                           "values" % ', '.join(render_gaussian(v)
                                                 for v in wanted))
            pairs = [tuple(sorted(index[v] for v in wanted))]
        else:
            pairs = list(itertools.combinations(range(len(slots)), 2))
        evaluated = [_evaluate_2_2_pair(n, slots, i, j) for i, j in pairs]
        witnesses['pairs'] = evaluated
        passing = [e for e in evaluated
                   if all(e[c] for c in _PAIR_CONDITIONS_2_2)]
        chosen = passing[0] if passing else max(
            evaluated, key=lambda e: abs(e['p'] - e['q']))
        witnesses['chosen_pair'] = {'gamma': chosen['gamma'],
                                    'delta': chosen['delta']}
        for name in _PAIR_CONDITIONS_2_2:
            hyps.check(name, chosen[name])
    _upm_via_a(cs, hyps, witnesses)
    return finish(TheoremId.THM_2_2, hyps, witnesses, Conclusion.SUPM)


def check_cor_2_1(cs: critical.CriticalStructure) -> Certificate:
    """Fiber count criterion with a critical value equal to 1."""
    n = cs.degree
    theorem = TheoremId.COR_2_1
    witnesses = _structure_witnesses(cs)
    hyps = Hypotheses()
    hyps.check('k >= 2', cs.k >= 2)
    hyps.check('simple zeros', cs.simple_zeros)
    hyps.check('critically injective', cs.critically_injective)
    one = GaussianRational(1)
    if not hyps.check('P(delta) = 1',
                      cs.critical_value_poly(one).is_zero):
        return finish(theorem, hyps, witnesses, Conclusion.SUPM)
    q = critical.fiber_count_at(cs, one)
    witnesses.update(delta_value='1', q=q)
    if not cs.all_values_explicit:
        return inconclusive(
            theorem, 'P(gamma) is a critical value outside Q(i)',
            witnesses, hyps)
    others = [v for v in cs.explicit_values if v != one]
    counts = {v: critical.fiber_count_at(cs, v) for v in others}
    witnesses['fiber_counts'] = {render_gaussian(v): c
                                 for v, c in counts.items()}
    gammas = [v for v in others if (v * v) not in (0, 1)]
    if gammas:
        gamma = next((g for g in gammas
                      if all(c >= q + 3 for v, c in counts.items()
                             if v != g)), gammas[0])
        witnesses['gamma_value'] = render_gaussian(gamma)
    hyps.check('P(gamma)^2 not in {0, 1}', bool(gammas))
    hyps.check('n >= q+3', n >= q + 3)
    if gammas:
        hyps.check('other values >= q+3',
                   all(c >= q + 3 for v, c in counts.items() if v != gamma))
    _upm_via_a(cs, hyps, witnesses)
    return finish(theorem, hyps, witnesses, Conclusion.SUPM)


def lambda_thm23(n: int) -> Fraction:
    """4(1 - 1/(n-1)^2)."""
    return 4 * (1 - Fraction(1, (n - 1) ** 2))


def _thm_2_3_hypotheses(n, a, b):
    a = GaussianRational.coerce(a)
    b = GaussianRational.coerce(b)
    lam = lambda_thm23(n) if n >= 2 else None
    witnesses = {'n': n, 'a': render_gaussian(a), 'b': render_gaussian(b),
                 'lambda_thm23': str(lam)}
    hyps = Hypotheses()
    hyps.check('n >= 6', n >= 6)
    hyps.check('ab != 0', not (a * b).is_zero)
    hyps.check('a^2 = lambda*b', lam is not None and a * a == lam * b)
    return hyps, witnesses


def check_thm_2_3_family(n: int, a, b) -> Certificate:
    """z^n + a z^(n-1) + b z^(n-2) with a^2 = lambda*b."""
    hyps, witnesses = _thm_2_3_hypotheses(n, a, b)
    return finish(TheoremId.THM_2_3_FAMILY, hyps, witnesses,
                  Conclusion.SUPM)


def check_cor_2_3_family(n: int, a, b, c) -> Certificate:
    """The same family shifted by a constant c is a uniqueness polynomial."""
    hyps, witnesses = _thm_2_3_hypotheses(n, a, b)
    witnesses['c'] = render_gaussian(GaussianRational.coerce(c))
    return finish(TheoremId.COR_2_3_FAMILY, hyps, witnesses, Conclusion.UPM)


def match_thm_2_3(p: Poly):
    """Return (n, a, b, c) when p = L*(z^n + a z^(n-1) + b z^(n-2) + c)."""
    n = p.degree
    if n is None or n < 3:
        return None
    q = p.monic()
    if any(not q.coefficient(j).is_zero for j in range(1, n - 2)):
        return None
    return n, q.coefficient(n - 1), q.coefficient(n - 2), q.coefficient(0)


def _thm_2_3_shape_failure(theorem, p, name, conclusion):
    hyps = Hypotheses()
    hyps.check(name, False)
    return finish(theorem, hyps, {'polynomial': parser.render_poly(p)},
                  conclusion)


def check_thm_2_3(p: Poly) -> Certificate:
    matched = match_thm_2_3(p)
    shape = 'form z^n + a z^(n-1) + b z^(n-2)'
    if matched is None or not matched[3].is_zero:
        return _thm_2_3_shape_failure(TheoremId.THM_2_3_FAMILY, p, shape,
                                      Conclusion.SUPM)
    n, a, b, _c = matched
    return check_thm_2_3_family(n, a, b)


def check_cor_2_3(p: Poly) -> Certificate:
    matched = match_thm_2_3(p)
    if matched is None:
        return _thm_2_3_shape_failure(
            TheoremId.COR_2_3_FAMILY, p,
            'form z^n + a z^(n-1) + b z^(n-2) + c', Conclusion.UPM)
    return check_cor_2_3_family(*matched)


_STRUCTURE_CHECKS = {
    'A': check_fujimoto_A,
    'B': check_fujimoto_B,
    'C': check_fujimoto_C,
    'D': check_fujimoto_D,
    'thm2_1': check_thm_2_1,
    'thm2_2': check_thm_2_2,
    'cor2_1': check_cor_2_1,
}

_POLYNOMIAL_CHECKS = {
    'thm2_3': check_thm_2_3,
    'cor2_3': check_cor_2_3,
}

KNOWN_THEOREMS = list(_STRUCTURE_CHECKS) + list(_POLYNOMIAL_CHECKS)


def run_chain(p: Poly, theorems=None, pair_mode=None,
              structure=None) -> list:
    """Run the selected certifiers in chain order.

    Every selected certifier runs; a success never short-circuits the
    chain. ``structure`` may carry an already computed analysis.
    """
    theorems = list(theorems or CONF.certifier.theorems)
    unknown = [t for t in theorems if t not in KNOWN_THEOREMS]
    if unknown:
        raise exceptions.SupmException(
            reason="unknown theorem(s) %s; known: %s"
                   % (', '.join(unknown), ', '.join(KNOWN_THEOREMS)))
    certificates = []
    cs = structure
    for name in KNOWN_THEOREMS:
        if name not in theorems:
            continue
        if name in _POLYNOMIAL_CHECKS:
            certificates.append(_POLYNOMIAL_CHECKS[name](p))
            continue
        if cs is None:
            cs = critical.analyze(p)
        if name == 'thm2_1':
            certificates.append(check_thm_2_1(cs, pair_mode=pair_mode))
        else:
            certificates.append(_STRUCTURE_CHECKS[name](cs))
    return certificates
