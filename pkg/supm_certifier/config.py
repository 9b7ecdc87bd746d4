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

import itertools

from oslo_config import cfg
from oslo_log import log as logging

CONF = cfg.CONF
LOG = logging.getLogger(__name__)

# Chain order of the strong uniqueness certifiers.
DEFAULT_THEOREMS = ['A', 'B', 'C', 'D', 'thm2_1', 'thm2_2', 'cor2_1']

parser_opts = [
    cfg.StrOpt('variable',
               default='z',
               help='Indeterminate used when rendering polynomials. The '
                    'letter i is reserved for the imaginary unit.'),
    cfg.IntOpt('max_exponent',
               min=1,
               default=10000,
               help='Largest exponent literal accepted by the polynomial '
                    'parser.'),
]

analysis_opts = [
    cfg.IntOpt('max_factor_degree',
               min=1,
               default=64,
               help='Polynomials of higher degree are not factored over '
                    'Q(i) during rational root extraction. Critical '
                    'points of a skipped factor remain symbolic.'),
]

certifier_opts = [
    cfg.StrOpt('pair_mode',
               choices=['maximal', 'any'],
               default='maximal',
               help='How Theorem 2.1 chooses its pair of critical points. '
                    '"maximal" uses the two points of maximal multiplicity; '
                    '"any" scans every pair and is labelled as an '
                    'extension in the certificate.'),
    cfg.ListOpt('theorems',
                default=DEFAULT_THEOREMS,
                help='Certifiers run by the check and family commands, in '
                     'chain order. Known names: A, B, C, D, thm2_1, '
                     'thm2_2, cor2_1, thm2_3, cor2_3.'),
]

report_opts = [
    cfg.IntOpt('json_indent',
               min=0,
               default=2,
               help='Indentation of JSON reports.'),
]

CONF.register_opts(parser_opts, group='parser')
CONF.register_opts(analysis_opts, group='analysis')
CONF.register_opts(certifier_opts, group='certifier')
CONF.register_opts(report_opts, group='report')


def list_opts():
    """Return the options of this project for oslo-config-generator."""
    return [
        ('parser', itertools.chain(parser_opts)),
        ('analysis', itertools.chain(analysis_opts)),
        ('certifier', itertools.chain(certifier_opts)),
        ('report', itertools.chain(report_opts)),
    ]
