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

"""Reports shared by the human and JSON renderings."""

from __future__ import annotations

import dataclasses
import json
import typing

from supm_certifier.certifier import Certificate
from supm_certifier.certifier import Conclusion
from supm_certifier import config
from supm_certifier import critical
from supm_certifier.gaussian import render_gaussian
from supm_certifier.lemmas import LemmaResult
from supm_certifier import parser

CONF = config.CONF

SCHEMA = 'supm-cert/v1'

EXIT_SUPM = 0
EXIT_UPM = 1
EXIT_NOTHING = 2
EXIT_INPUT_ERROR = 3

# strongest first
_RANK = (Conclusion.SUPM, Conclusion.UPM, Conclusion.URSM_L,
         Conclusion.URSE_L)


def summarize_structure(cs: critical.CriticalStructure) -> dict:
    points = []
    for p in cs.points:
        points.append({
            'point': (render_gaussian(p.point) if p.is_explicit
                      else 'root of %s' % parser.render_poly(p.factor)),
            'derivative_multiplicity': p.derivative_multiplicity,
            'value_order': p.value_order,
            'critical_value': (render_gaussian(p.critical_value)
                               if p.has_explicit_value else 'symbolic'),
        })
    fibers = []
    for fc in critical.fiber_counts(cs):
        fibers.append({
            'value': (render_gaussian(fc.value) if fc.is_explicit
                      else 'root of %s' % parser.render_poly(fc.factor, 'w')),
            'values': fc.value_count,
            'distinct_preimages': fc.distinct_preimages,
        })
    return {
        'degree': cs.degree,
        'k': cs.k,
        'q': sorted(cs.multiplicities, reverse=True),
        'points': points,
        'fiber_counts': fibers,
        'simple_zeros': cs.simple_zeros,
        'critically_injective': cs.critically_injective,
        'critical_value_poly': parser.render_poly(cs.critical_value_poly,
                                                  'w'),
    }


def overall_of(certificates) -> dict:
    for conclusion in _RANK:
        for cert in certificates:
            if cert.certified and cert.conclusion is conclusion:
                return {'conclusion': conclusion.value,
                        'theorem_id': cert.theorem_id.value}
    return {'conclusion': Conclusion.NONE.value, 'theorem_id': None}


@dataclasses.dataclass
class Report:
    command: str
    input_echo: typing.Optional[str] = None
    structure_summary: typing.Optional[dict] = None
    certificates: list = dataclasses.field(default_factory=list)
    lemma_results: list = dataclasses.field(default_factory=list)
    notes: list = dataclasses.field(default_factory=list)

    @property
    def overall(self) -> dict:
        return overall_of(self.certificates)

    def exit_code(self) -> int:
        if self.command == 'lemma':
            return (EXIT_SUPM if self.lemma_results
                    and all(r.holds for r in self.lemma_results)
                    else EXIT_NOTHING)
        if self.command == 'urs':
            return (EXIT_SUPM if any(c.certified for c in self.certificates)
                    else EXIT_NOTHING)
        conclusion = self.overall['conclusion']
        if conclusion == Conclusion.SUPM.value:
            return EXIT_SUPM
        if conclusion == Conclusion.UPM.value:
            return EXIT_UPM
        return EXIT_NOTHING

    def to_dict(self) -> dict:
        return {
            'schema': SCHEMA,
            'command': self.command,
            'input_echo': self.input_echo,
            'structure_summary': self.structure_summary,
            'certificates': [c.to_dict() for c in self.certificates],
            'lemma_results': [r.to_dict() for r in self.lemma_results],
            'notes': list(self.notes),
            'overall': self.overall,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Report:
        if data.get('schema') != SCHEMA:
            raise ValueError("unsupported report schema %r"
                             % data.get('schema'))
        return cls(
            command=data['command'],
            input_echo=data.get('input_echo'),
            structure_summary=data.get('structure_summary'),
            certificates=[Certificate.from_dict(c)
                          for c in data.get('certificates', [])],
            lemma_results=[LemmaResult.from_dict(r)
                           for r in data.get('lemma_results', [])],
            notes=list(data.get('notes', [])))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=CONF.report.json_indent,
                          sort_keys=True)

    def render_text(self) -> str:
        lines = []
        if self.input_echo is not None:
            lines.append('Polynomial: %s' % self.input_echo)
        summary = self.structure_summary
        if summary:
            lines.append('Critical structure: degree %d, k = %d, q = %s'
                         % (summary['degree'], summary['k'],
                            summary['q']))
            lines.append('  simple zeros: %s, critically injective: %s'
                         % (_yes(summary['simple_zeros']),
                            _yes(summary['critically_injective'])))
            for p in summary['points']:
                lines.append('  critical point %s: q = %d, order %d, '
                             'value %s' % (p['point'],
                                           p['derivative_multiplicity'],
                                           p['value_order'],
                                           p['critical_value']))
            for fc in summary['fiber_counts']:
                lines.append('  fiber of %s: %d distinct preimages'
                             % (fc['value'], fc['distinct_preimages']))
        if self.certificates:
            lines.append('Certificates:')
            for cert in self.certificates:
                lines.append('  ' + _render_certificate(cert))
        for result in self.lemma_results:
            lines.append('Lemma %s: %s' % (
                result.lemma_id, 'holds' if result.holds else 'fails'))
            for key in sorted(result.witnesses):
                lines.append('  %s: %s' % (key, result.witnesses[key]))
        for note in self.notes:
            lines.append('Note: %s' % note)
        if self.command not in ('lemma',):
            overall = self.overall
            if overall['theorem_id']:
                lines.append('Overall: %s via %s' % (overall['conclusion'],
                                                    overall['theorem_id']))
            else:
                lines.append('Overall: nothing certified')
        return '\n'.join(lines)


def _yes(flag):
    return 'yes' if flag else 'no'


def _render_certificate(cert: Certificate) -> str:
    text = '%s: %s' % (cert.theorem_id.value, cert.verdict.value)
    if cert.certified:
        text += ' (%s)' % cert.conclusion.value
    if cert.failed_hypothesis:
        text += ' [%s]' % cert.failed_hypothesis
    if cert.reason:
        text += ' [%s]' % cert.reason
    if cert.witnesses.get('extension'):
        text += ' (extended pair mode)'
    return text
