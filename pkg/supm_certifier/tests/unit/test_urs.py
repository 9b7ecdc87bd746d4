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
from unittest import mock

from supm_certifier import certifier
from supm_certifier.certifier import Conclusion
from supm_certifier.certifier import TheoremId
from supm_certifier.certifier import Verdict
from supm_certifier import critical
from supm_certifier import exceptions
from supm_certifier import families
from supm_certifier.tests.unit import base
from supm_certifier.tests.unit.base import poly
from supm_certifier import urs

# Smallest m+n certified by the cardinality criterion, per level band:
# (meromorphic, entire).
_PROFILE_THRESHOLDS = {None: (10, 6), 3: (10, 6), 2: (11, 6), 1: (14, 8)}


class TestUrsParams(base.TestCase):

    def test_levels(self):
        self.assertEqual('inf', urs.UrsParams().level)
        self.assertEqual(3, urs.UrsParams().level_band)
        self.assertEqual(3, urs.UrsParams(l=7).level_band)
        self.assertEqual(2, urs.UrsParams(l=2).level_band)
        self.assertEqual('1', urs.UrsParams(l=1).level)

    def test_invalid(self):
        self.assertRaises(exceptions.UrsParamsError, urs.UrsParams, l=0)
        self.assertRaises(exceptions.UrsParamsError, urs.UrsParams,
                          theta_min=Fraction(3, 2))
        self.assertRaises(exceptions.UrsParamsError, urs.UrsParams,
                          theta_min=-1)


class TestTheoremE(base.TestCase):

    def test_meromorphic(self):
        cert = urs.check_urs_theorem_e(11, 2)
        self.assertEqual(Verdict.CERTIFIED, cert.verdict)
        self.assertEqual(Conclusion.URSM_L, cert.conclusion)
        self.assertFalse(cert.witnesses['ignoring_multiplicities'])
        self.assertEqual('asserted',
                         cert.witnesses['derivative_without_simple_zero'])
        self.assertTrue(urs.check_urs_theorem_e(
            17, 2).witnesses['ignoring_multiplicities'])
        self.assertEqual('n > 10',
                         urs.check_urs_theorem_e(10, 2).failed_hypothesis)

    def test_entire(self):
        cert = urs.check_urs_theorem_e(7, 2, entire=True)
        self.assertEqual(Conclusion.URSE_L, cert.conclusion)

    def test_supm_hypothesis_from_chain(self):
        cs = critical.analyze(families.FrankReindersFamily().construct(
            {'n': 6, 'c': 2}))
        cert = urs.check_urs_theorem_e(12, 2, cs=cs)
        self.assertTrue(cert.certified)
        self.assertEqual('Thm2_1', cert.witnesses['supm_certificate'])
        self.assertTrue(cert.witnesses['hypotheses']['P is SUPM'])
        with mock.patch.object(certifier, 'run_chain', return_value=[]):
            cert = urs.check_urs_theorem_e(12, 2, cs=cs)
        self.assertEqual(Verdict.HYPOTHESIS_FAILED, cert.verdict)
        self.assertEqual('P is SUPM', cert.failed_hypothesis)
        self.assertEqual('asserted',
                         urs.check_urs_theorem_e(12, 2).witnesses['supm'])

    def test_upm_only_structure_is_not_urs(self):
        p = families.get_family('upm').construct({'n': 7, 'r': 3, 'a': 2})
        cs = critical.analyze(p)
        cert = urs.check_urs_cardinality(7, 4, urs.UrsParams(), cs=cs)
        self.assertFalse(cert.certified)
        self.assertFalse(cert.witnesses['hypotheses']['P is SUPM'])

    def test_one_critical_point(self):
        cert = urs.check_urs_theorem_e(20, 1)
        self.assertEqual(Verdict.INCONCLUSIVE, cert.verdict)

    def test_nonpositive_degree(self):
        self.assertRaises(exceptions.UrsParamsError,
                          urs.check_urs_theorem_e, 0, 2)


class TestCardinality(base.TestCase):

    def test_bounds(self):
        self.assertEqual(10, urs.cardinality_bound(2, urs.UrsParams(), False))
        self.assertEqual(11, urs.cardinality_bound(2, urs.UrsParams(l=2),
                                                   False))
        self.assertEqual(14, urs.cardinality_bound(2, urs.UrsParams(l=1),
                                                   False))
        self.assertEqual(8, urs.cardinality_bound(2, urs.UrsParams(l=1),
                                                  True))
        self.assertEqual(12, urs.cardinality_bound(3, urs.UrsParams(l=3),
                                                   False))

    def test_check(self):
        params = urs.UrsParams(l=3)
        self.assertTrue(urs.check_urs_cardinality(12, 2, params).certified)
        self.assertFalse(urs.check_urs_cardinality(10, 2, params).certified)
        self.assertTrue(urs.check_urs_cardinality(10, 2, params,
                                                  entire=True).certified)

    def test_structure_hypotheses(self):
        cs = critical.analyze(families.FrankReindersFamily().construct(
            {'n': 6, 'c': 2}))
        cert = urs.check_urs_cardinality(6, 2, urs.UrsParams(), cs=cs)
        hypotheses = cert.witnesses['hypotheses']
        self.assertTrue(hypotheses['simple zeros'])
        self.assertTrue(hypotheses['derivative has no simple zero'])
        self.assertEqual('n > 10', cert.failed_hypothesis)

        cs = critical.analyze(poly('z^3-3z+1'))
        cert = urs.check_urs_cardinality(30, 2, urs.UrsParams(), cs=cs)
        self.assertEqual('derivative has no simple zero',
                         cert.failed_hypothesis)
        cert = urs.check_urs_cardinality(30, 3, urs.UrsParams(), cs=cs)
        self.assertEqual('k matches structure', cert.failed_hypothesis)


class TestDeficiency(base.TestCase):

    def test_bound(self):
        self.assertEqual(Fraction(0),
                         urs.deficiency_bound(10, 2, urs.UrsParams()))
        self.assertEqual(Fraction(2, 9),
                         urs.deficiency_bound(10, 2, urs.UrsParams(l=2)))
        self.assertEqual(Fraction(2, 3),
                         urs.deficiency_bound(10, 2, urs.UrsParams(l=1)))

    def test_check(self):
        params = urs.UrsParams(l=3, theta_min=Fraction(1, 2))
        self.assertTrue(urs.check_urs_deficiency(10, 2, params).certified)
        cert = urs.check_urs_deficiency(10, 2, urs.UrsParams(l=3))
        self.assertEqual('theta_min > 0', cert.failed_hypothesis)

    def test_entire_has_full_deficiency(self):
        cert = urs.check_urs_deficiency(8, 2, urs.UrsParams(), entire=True)
        self.assertEqual('1', cert.witnesses['theta_min'])
        self.assertTrue(cert.certified)


class TestThresholds(base.TestCase):

    def test_combined(self):
        params = urs.UrsParams(theta_min=Fraction(1, 2))
        cert = urs.check_urs_thresholds(10, 2, params)
        self.assertEqual(Verdict.CERTIFIED, cert.verdict)
        self.assertEqual(['URS_G'], cert.witnesses['concluded_by'])
        cert = urs.check_urs_thresholds(10, 2, urs.UrsParams())
        self.assertEqual(Verdict.HYPOTHESIS_FAILED, cert.verdict)
        self.assertEqual('n > 10', cert.failed_hypothesis)

    def test_inconclusive_passes_through(self):
        cert = urs.check_urs_thresholds(10, 1, urs.UrsParams())
        self.assertEqual(Verdict.INCONCLUSIVE, cert.verdict)


class TestProfiles(base.TestCase):

    def _profiles(self):
        for m in range(2, 10):
            for n in range(2, 10):
                if max(m, n) >= 3:
                    yield m, n

    def test_theorem_2_4_table(self):
        for level, (merom, entire) in _PROFILE_THRESHOLDS.items():
            params = urs.UrsParams(l=level)
            for m, n in self._profiles():
                cert = urs.check_thm_2_4(m, n, params)
                self.assertEqual(TheoremId.URS_2_4, cert.theorem_id)
                self.assertEqual(m + n >= merom, cert.certified,
                                 (level, m, n))
                cert = urs.check_thm_2_4(m, n, params, entire=True)
                self.assertEqual(m + n >= entire, cert.certified,
                                 (level, m, n))
                if cert.certified:
                    self.assertEqual(Conclusion.URSE_L, cert.conclusion)

    def test_profile_conditions(self):
        cert = urs.check_thm_2_4(1, 9, urs.UrsParams())
        self.assertEqual('min(m,n) >= 2', cert.failed_hypothesis)
        cert = urs.check_thm_2_4(2, 2, urs.UrsParams(), entire=True)
        self.assertEqual('m+n >= 5', cert.failed_hypothesis)

    def test_theorem_2_5(self):
        for m, n in self._profiles():
            bound = Fraction(9 - m - n, 4)
            for theta in (Fraction(0), Fraction(1, 4), Fraction(1, 2), 1):
                cert = urs.check_thm_2_5(m, n, urs.UrsParams(theta_min=theta))
                self.assertEqual(theta > bound, cert.certified,
                                 (m, n, theta))
