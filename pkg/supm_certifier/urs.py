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

"""Unique range set thresholds for zero sets of strong uniqueness polynomials.

These are pure inequalities in the degree n, the number k of critical
points, the truncation level l and a lower bound on the pole deficiency.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
import typing

from oslo_log import log as logging

from supm_certifier import certifier
from supm_certifier.certifier import Conclusion
from supm_certifier.certifier import Hypotheses
from supm_certifier.certifier import TheoremId
from supm_certifier import exceptions

LOG = logging.getLogger(__name__)

INFINITY = 'inf'


@dataclasses.dataclass(frozen=True)
class UrsParams:
    """Truncation level ``l`` (None for infinity) and deficiency bound."""

    l: typing.Optional[int] = None
    theta_min: Fraction = Fraction(0)

    def __post_init__(self):
        if self.l is not None and self.l < 1:
            raise exceptions.UrsParamsError(
                reason="l must be a positive integer or infinity, got %s"
                       % self.l)
        theta = Fraction(self.theta_min)
        if not 0 <= theta <= 1:
            raise exceptions.UrsParamsError(
                reason="theta_min must lie in [0, 1], got %s" % theta)
        object.__setattr__(self, 'theta_min', theta)

    @property
    def level(self) -> str:
        return INFINITY if self.l is None else str(self.l)

    @property
    def level_band(self) -> int:
        """1, 2, or 3 for l >= 3 and infinity."""
        return 3 if self.l is None else min(self.l, 3)


def _conclusion(entire):
    return Conclusion.URSE_L if entire else Conclusion.URSM_L


def cardinality_bound(k: int, params: UrsParams, entire: bool) -> int:
    """B such that n > B is the degree condition of Theorem F."""
    band = params.level_band
    if band == 3:
        return 2 * k + (2 if entire else 6)
    if band == 2:
        return 2 * k + (2 if entire else 7)
    return 2 * k + (4 if entire else 10)


def deficiency_bound(n: int, k: int, params: UrsParams) -> Fraction:
    """theta_min must exceed this value for Theorem G."""
    band = params.level_band
    if band == 3:
        return Fraction(6 + 2 * k - n, 4)
    if band == 2:
        return Fraction(14 + 4 * k - 2 * n, 9)
    return Fraction(10 + 2 * k - n, 6)


def _standing(theorem, n, k, cs, witnesses):
    """Standing hypotheses shared by the range set criteria.

    Returns a Hypotheses record, or an Inconclusive certificate when k is
    too small for any of them to apply. Without ``cs`` P is taken to be a
    strong uniqueness polynomial; with it the certifier chain must show so.
    """
    witnesses.update(n=n, k=k)
    if n < 1 or k < 1:
        raise exceptions.UrsParamsError(
            reason="n and k must be positive, got n=%s k=%s" % (n, k))
    if k < 2:
        return certifier.inconclusive(
            theorem, 'standing hypotheses need k >= 3, or k = 2 without '
                     'simple zeros of the derivative', witnesses)
    hyps = Hypotheses()
    if cs is not None:
        hyps.check('simple zeros', cs.simple_zeros)
        hyps.check('critically injective', cs.critically_injective)
        hyps.check('k matches structure', cs.k == k)
    if k == 2:
        if cs is None:
            witnesses['derivative_without_simple_zero'] = 'asserted'
        else:
            no_simple = all(part.multiplicity >= 2 for part
                            in cs.derivative_decomposition.parts)
            hyps.check('derivative has no simple zero', no_simple)
    if cs is None:
        witnesses['supm'] = 'asserted'
    else:
        _check_supm(cs, hyps, witnesses)
    return hyps


def _check_supm(cs, hyps, witnesses):
    chain = certifier.run_chain(cs.polynomial,
                                theorems=certifier.KNOWN_THEOREMS,
                                structure=cs)
    supm = [c for c in chain
            if c.certified and c.conclusion is Conclusion.SUPM]
    if supm:
        witnesses['supm_certificate'] = supm[0].theorem_id.value
    hyps.check('P is SUPM', bool(supm))


def check_urs_theorem_e(n: int, k: int, entire: bool = False,
                        cs=None) -> certifier.Certificate:
    theorem = TheoremId.URS_E
    witnesses = {'entire': entire, 'l': INFINITY}
    hyps = _standing(theorem, n, k, cs, witnesses)
    if isinstance(hyps, certifier.Certificate):
        return hyps
    bound = 2 * k + (2 if entire else 6)
    im_bound = 2 * k + (5 if entire else 12)
    witnesses.update(bound=bound, im_bound=im_bound,
                     ignoring_multiplicities=n > im_bound)
    hyps.check('n > %d' % bound, n > bound)
    return certifier.finish(theorem, hyps, witnesses, _conclusion(entire))


def check_urs_cardinality(n: int, k: int, params: UrsParams,
                          entire: bool = False,
                          cs=None) -> certifier.Certificate:
    theorem = TheoremId.URS_F
    witnesses = {'entire': entire, 'l': params.level}
    hyps = _standing(theorem, n, k, cs, witnesses)
    if isinstance(hyps, certifier.Certificate):
        return hyps
    bound = cardinality_bound(k, params, entire)
    witnesses['bound'] = bound
    hyps.check('n > %d' % bound, n > bound)
    return certifier.finish(theorem, hyps, witnesses, _conclusion(entire))


def check_urs_deficiency(n: int, k: int, params: UrsParams,
                         entire: bool = False,
                         cs=None) -> certifier.Certificate:
    """Theorem G; an entire function has no poles, so theta is 1."""
    theorem = TheoremId.URS_G
    theta = Fraction(1) if entire else params.theta_min
    witnesses = {'entire': entire, 'l': params.level, 'theta_min': str(theta)}
    hyps = _standing(theorem, n, k, cs, witnesses)
    if isinstance(hyps, certifier.Certificate):
        return hyps
    bound = deficiency_bound(n, k, params)
    witnesses['bound'] = str(bound)
    hyps.check('theta_min > %s' % bound, theta > bound)
    return certifier.finish(theorem, hyps, witnesses, _conclusion(entire))


def check_urs_thresholds(n: int, k: int, params: UrsParams,
                         entire: bool = False,
                         cs=None) -> certifier.Certificate:
    """Combined cardinality and deficiency criteria.

    Certified when either criterion concludes; both results are kept in
    the witnesses.
    """
    cardinality = check_urs_cardinality(n, k, params, entire, cs)
    deficiency = check_urs_deficiency(n, k, params, entire, cs)
    witnesses = {'n': n, 'k': k, 'l': params.level, 'entire': entire,
                 'cardinality': cardinality.to_dict(),
                 'deficiency': deficiency.to_dict()}
    concluded = [c.theorem_id.value for c in (cardinality, deficiency)
                 if c.certified]
    witnesses['concluded_by'] = concluded
    if concluded:
        return certifier.Certificate(
            theorem_id=TheoremId.URS_F, verdict=certifier.Verdict.CERTIFIED,
            conclusion=_conclusion(entire), witnesses=witnesses)
    if cardinality.verdict is certifier.Verdict.INCONCLUSIVE:
        return cardinality
    return certifier.Certificate(
        theorem_id=TheoremId.URS_F,
        verdict=certifier.Verdict.HYPOTHESIS_FAILED,
        conclusion=Conclusion.NONE,
        failed_hypothesis=cardinality.failed_hypothesis,
        witnesses=witnesses)


def _profile(m, n, witnesses):
    witnesses.update(m=m, n=n, degree=m + n + 1, k=2)
    hyps = Hypotheses()
    hyps.check('m+n >= 5', m + n >= 5)
    hyps.check('max(m,n) >= 3', max(m, n) >= 3)
    hyps.check('min(m,n) >= 2', min(m, n) >= 2)
    return hyps


def _on_profile(theorem, m, n, inner):
    witnesses = {}
    hyps = _profile(m, n, witnesses)
    result = inner(m + n + 1, 2)
    witnesses['criterion'] = result.to_dict()
    for name, holds in result.witnesses.get('hypotheses', {}).items():
        hyps.check(name, holds)
    witnesses['entire'] = result.witnesses.get('entire')
    witnesses['l'] = result.witnesses.get('l')
    return certifier.finish(theorem, hyps, witnesses, result.conclusion
                            if result.certified else Conclusion.NONE)


def check_thm_2_4(m: int, n: int, params: UrsParams,
                  entire: bool = False) -> certifier.Certificate:
    """Cardinality criterion on the two point profile of degree m+n+1."""
    return _on_profile(
        TheoremId.URS_2_4, m, n,
        lambda deg, k: check_urs_cardinality(deg, k, params, entire))


def check_thm_2_5(m: int, n: int, params: UrsParams,
                  entire: bool = False) -> certifier.Certificate:
    return _on_profile(
        TheoremId.URS_2_5, m, n,
        lambda deg, k: check_urs_deficiency(deg, k, params, entire))
