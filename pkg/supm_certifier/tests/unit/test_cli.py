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

import io
import json

import fixtures

from supm_certifier import cli
from supm_certifier import report
from supm_certifier.tests.unit import base


class TestCli(base.TestCase):

    def setUp(self):
        super(TestCli, self).setUp()
        self.stdout = io.StringIO()
        self.stderr = io.StringIO()
        self.useFixture(fixtures.MonkeyPatch('sys.stdout', self.stdout))
        self.useFixture(fixtures.MonkeyPatch('sys.stderr', self.stderr))

    def run_cli(self, *argv):
        self.stdout.seek(0)
        self.stdout.truncate()
        self.stderr.seek(0)
        self.stderr.truncate()
        code = cli.main(list(argv))
        return code, self.stdout.getvalue()

    def run_json(self, *argv):
        code, out = self.run_cli(*(argv + ('--json',)))
        return code, json.loads(out)


class TestCheck(TestCli):

    def test_thm23_polynomial(self):
        code, data = self.run_json('check', 'z^6+4z^5+25/6z^4',
                                   '--theorems', 'thm2_3')
        self.assertEqual(report.EXIT_SUPM, code)
        self.assertEqual('Thm2_3_family', data['overall']['theorem_id'])
        self.assertEqual('z^6 + 4z^5 + 25/6 z^4', data['input_echo'])

    def test_upm_only(self):
        code, data = self.run_json('check', 'z^6+4z^5+25/6z^4+1',
                                   '--theorems', 'cor2_3')
        self.assertEqual(report.EXIT_UPM, code)
        self.assertEqual('UPM', data['overall']['conclusion'])

    def test_not_injective(self):
        code, data = self.run_json('check', 'z^4-2z^2+1')
        self.assertEqual(report.EXIT_NOTHING, code)
        self.assertTrue(any('Not critically injective' in note
                            for note in data['notes']))

    def test_degree_one(self):
        code, data = self.run_json('check', '3z+1')
        self.assertEqual(report.EXIT_NOTHING, code)
        self.assertIn(cli.LOW_DEGREE_NOTE, data['notes'])
        self.assertEqual([], data['certificates'])

    def test_parse_errors(self):
        for text in ('z^', 'x+y', 'z^-2', '1/0'):
            code, _ = self.run_cli('check', text)
            self.assertEqual(report.EXIT_INPUT_ERROR, code, text)
            self.assertIn('error:', self.stderr.getvalue())

    def test_variable(self):
        code, data = self.run_json('check', 't^3-3t', '--variable', 't')
        self.assertEqual('t^3 - 3t', data['input_echo'])
        code, _ = self.run_cli('check', 'z^3', '--variable', 't')
        self.assertEqual(report.EXIT_INPUT_ERROR, code)

    def test_unknown_theorem(self):
        code, _ = self.run_cli('check', 'z^6+1', '--theorems', 'E')
        self.assertEqual(report.EXIT_INPUT_ERROR, code)

    def test_text_matches_json(self):
        argv = ('check', 'z^5 - 5/3 z^3 + 1')
        _, text = self.run_cli(*argv)
        _, data = self.run_json(*argv)
        self.assertEqual(report.Report.from_dict(data).render_text(),
                         text.rstrip('\n'))

    def test_deterministic(self):
        argv = ('check', 'z^7+z^4+1', '--json')
        self.assertEqual(self.run_cli(*argv), self.run_cli(*argv))


class TestFamily(TestCli):

    def test_frank_reinders_frontier(self):
        for n in range(6, 13):
            code, data = self.run_json('family', 'pfr', '--n', str(n),
                                       '--c', '2')
            self.assertEqual(report.EXIT_SUPM, code, n)
            self.assertEqual('Thm2_1', data['overall']['theorem_id'])
            thm21 = [c for c in data['certificates']
                     if c['theorem_id'] == 'Thm2_1'][0]
            self.assertEqual(n - 2, thm21['witnesses']['p'])
            self.assertEqual('-3', thm21['witnesses']['value_sum'])
        code, data = self.run_json('family', 'pfr', '--n', '5', '--c', '2')
        self.assertEqual(report.EXIT_NOTHING, code)
        thm21 = [c for c in data['certificates']
                 if c['theorem_id'] == 'Thm2_1'][0]
        self.assertEqual('inequality', thm21['failed_hypothesis'])

    def test_banerjee(self):
        for n, m, expected in ((3, 2, 0), (2, 3, 0), (2, 2, 2)):
            code, _ = self.run_cli('family', 'pb', '--n', str(n),
                                   '--m', str(m), '--c', '1')
            self.assertEqual(expected, code, (n, m))

    def test_shifted_banerjee(self):
        code, data = self.run_json('family', 'spb', '--n', '3', '--m', '2',
                                   '--b', '1', '--c', '1',
                                   '--theorems', 'cor2_1')
        self.assertEqual(report.EXIT_SUPM, code)
        self.assertEqual('Cor2_1', data['overall']['theorem_id'])
        self.assertEqual('family Shifted_PB', data['notes'][0])

    def test_excluded_parameter(self):
        code, _ = self.run_cli('family', 'pfr', '--n', '6', '--c', '1/2')
        self.assertEqual(report.EXIT_INPUT_ERROR, code)
        self.assertIn('c: {0, 1, 1/2}', self.stderr.getvalue())

    def test_generic_params(self):
        code, _ = self.run_cli('family', 'FrankReinders_PFR',
                               '--param', 'n=6', '--param', 'c=2')
        self.assertEqual(report.EXIT_SUPM, code)
        code, _ = self.run_cli('family', 'pfr', '--param', 'n6')
        self.assertEqual(report.EXIT_INPUT_ERROR, code)

    def test_unknown_family(self):
        code, _ = self.run_cli('family', 'nope', '--n', '3')
        self.assertEqual(report.EXIT_INPUT_ERROR, code)


class TestLemma(TestCli):

    def test_holds(self):
        code, data = self.run_json('lemma', 'l3_1', '--n', '6', '--A', '2')
        self.assertEqual(0, code)
        self.assertTrue(data['lemma_results'][0]['holds'])

    def test_structure(self):
        code, out = self.run_cli('lemma', 'l3_2', '--n', '6')
        self.assertEqual(0, code)
        self.assertIn("'t - 1'", out)

    def test_precondition(self):
        code, _ = self.run_cli('lemma', 'l3_3', '--n', '6', '--A', '1')
        self.assertEqual(report.EXIT_INPUT_ERROR, code)

    def test_unknown_lemma(self):
        code, _ = self.run_cli('lemma', 'l4_1', '--n', '6')
        self.assertEqual(report.EXIT_INPUT_ERROR, code)


class TestUrs(TestCli):

    def test_certified(self):
        code, data = self.run_json('urs', '--n', '12', '--k', '2',
                                   '--l', '3')
        self.assertEqual(0, code)
        self.assertEqual(['URS_E', 'URS_F', 'URS_G'],
                         [c['theorem_id'] for c in data['certificates']])

    def test_nothing(self):
        code, _ = self.run_cli('urs', '--n', '5', '--k', '2', '--l', '1')
        self.assertEqual(report.EXIT_NOTHING, code)

    def test_deficiency(self):
        code, data = self.run_json('urs', '--n', '10', '--k', '2',
                                   '--theta', '1/2')
        self.assertEqual(0, code)
        self.assertEqual('URSM_l', data['overall']['conclusion'])

    def test_entire(self):
        code, data = self.run_json('urs', '--n', '10', '--k', '2',
                                   '--l', '3', '--entire')
        self.assertEqual(0, code)
        self.assertEqual('URSE_l', data['overall']['conclusion'])

    def test_bad_params(self):
        for extra in (('--l', '0'), ('--l', 'many'), ('--theta', '2'),
                      ('--theta', 'i')):
            code, _ = self.run_cli('urs', '--n', '12', '--k', '2', *extra)
            self.assertEqual(report.EXIT_INPUT_ERROR, code, extra)


class TestMisc(TestCli):

    def test_list_families(self):
        code, out = self.run_cli('list-families')
        self.assertEqual(0, code)
        self.assertIn('FrankReinders_PFR (pfr)', out)
        self.assertIn('Thm2_3 (thm23)', out)
        self.assertIn('UPM_not_SUPM (upm)', out)

    def test_usage_error(self):
        code, _ = self.run_cli('frobnicate')
        self.assertEqual(report.EXIT_INPUT_ERROR, code)
        code, _ = self.run_cli('urs', '--n', '12')
        self.assertEqual(report.EXIT_INPUT_ERROR, code)
