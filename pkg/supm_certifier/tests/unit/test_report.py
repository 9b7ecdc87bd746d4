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

import json

from supm_certifier import certifier
from supm_certifier.certifier import Certificate
from supm_certifier.certifier import Conclusion
from supm_certifier.certifier import TheoremId
from supm_certifier.certifier import Verdict
from supm_certifier import critical
from supm_certifier import lemmas
from supm_certifier import report
from supm_certifier.tests.unit import base
from supm_certifier.tests.unit.base import poly


def _cert(theorem, conclusion, certified=True):
    if certified:
        return Certificate(theorem_id=theorem, verdict=Verdict.CERTIFIED,
                           conclusion=conclusion)
    return Certificate(theorem_id=theorem,
                       verdict=Verdict.HYPOTHESIS_FAILED,
                       conclusion=Conclusion.NONE,
                       failed_hypothesis='k >= 2')


class TestOverall(base.TestCase):

    def test_strongest_conclusion_wins(self):
        certs = [_cert(TheoremId.FUJIMOTO_A, Conclusion.UPM),
                 _cert(TheoremId.FUJIMOTO_B, Conclusion.SUPM, False),
                 _cert(TheoremId.THM_2_2, Conclusion.SUPM)]
        self.assertEqual({'conclusion': 'SUPM', 'theorem_id': 'Thm2_2'},
                         report.overall_of(certs))

    def test_nothing(self):
        self.assertEqual({'conclusion': 'none', 'theorem_id': None},
                         report.overall_of([]))

    def test_exit_codes(self):
        rep = report.Report(command='check')
        self.assertEqual(report.EXIT_NOTHING, rep.exit_code())
        rep.certificates.append(_cert(TheoremId.FUJIMOTO_A, Conclusion.UPM))
        self.assertEqual(report.EXIT_UPM, rep.exit_code())
        rep.certificates.append(_cert(TheoremId.THM_2_1, Conclusion.SUPM))
        self.assertEqual(report.EXIT_SUPM, rep.exit_code())

        rep = report.Report(command='urs', certificates=[
            _cert(TheoremId.URS_F, Conclusion.URSM_L)])
        self.assertEqual(report.EXIT_SUPM, rep.exit_code())
        rep = report.Report(command='lemma', lemma_results=[
            lemmas.LemmaResult('l3_1', False)])
        self.assertEqual(report.EXIT_NOTHING, rep.exit_code())


class TestReport(base.TestCase):

    def _report(self):
        p = poly('10z^6 - 24z^5 + 15z^4 - 2')
        cs = critical.analyze(p)
        return report.Report(
            command='check', input_echo='10z^6 - 24z^5 + 15z^4 - 2',
            structure_summary=report.summarize_structure(cs),
            certificates=certifier.run_chain(p, structure=cs))

    def test_summary(self):
        summary = self._report().structure_summary
        self.assertEqual(6, summary['degree'])
        self.assertEqual([3, 2], summary['q'])
        self.assertEqual(
            [{'value': '-2', 'values': 1, 'distinct_preimages': 3},
             {'value': '-1', 'values': 1, 'distinct_preimages': 4}],
            summary['fiber_counts'])

    def test_symbolic_summary(self):
        summary = report.summarize_structure(critical.analyze(
            poly('z^7+z^4+1')))
        self.assertIn('symbolic', [p['critical_value']
                                   for p in summary['points']])
        self.assertTrue(summary['fiber_counts'][1]['value'].startswith(
            'root of w^3'))

    def test_json_round_trip(self):
        rep = self._report()
        data = json.loads(rep.to_json())
        self.assertEqual(report.SCHEMA, data['schema'])
        self.assertEqual({'conclusion': 'SUPM', 'theorem_id': 'Thm2_1'},
                         data['overall'])
        again = report.Report.from_dict(data)
        self.assertEqual(data, json.loads(again.to_json()))
        self.assertEqual(rep.render_text(), again.render_text())

    def test_unknown_schema(self):
        self.assertRaises(ValueError, report.Report.from_dict,
                          {'schema': 'supm-cert/v0', 'command': 'check'})

    def test_json_indent(self):
        self.cfg.config(json_indent=0, group='report')
        self.assertNotIn('\n  ', self._report().to_json())

    def test_render_text(self):
        text = self._report().render_text()
        self.assertIn('Polynomial: 10z^6 - 24z^5 + 15z^4 - 2', text)
        self.assertIn('Thm2_1: Certified (SUPM)', text)
        self.assertIn('FujimotoB: HypothesisFailed [k >= 4]', text)
        self.assertTrue(text.endswith('Overall: SUPM via Thm2_1'))

    def test_render_lemma(self):
        rep = report.Report(command='lemma', lemma_results=[
            lemmas.verify('l3_1', 6, 2)])
        text = rep.render_text()
        self.assertTrue(text.startswith('Lemma l3_1: holds'))
        self.assertNotIn('Overall', text)
