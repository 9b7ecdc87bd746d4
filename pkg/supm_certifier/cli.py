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

"""supm-cert command line.

Exit codes of ``check`` and ``family``: 0 strong uniqueness certified,
1 uniqueness only, 2 nothing certified, 3 input error. ``lemma`` exits 0
when the lemma holds and 2 when it fails; ``urs`` exits 0 when some range
set conclusion follows and 2 otherwise.
"""

import sys

from oslo_config import cfg
from oslo_log import log as logging
from oslo_utils import timeutils

from supm_certifier._i18n import _
from supm_certifier import certifier
from supm_certifier import config
from supm_certifier import critical
from supm_certifier import exceptions
from supm_certifier import families
from supm_certifier import lemmas
from supm_certifier import parser
from supm_certifier import report
from supm_certifier import urs

CONF = config.CONF
LOG = logging.getLogger(__name__)

LOW_DEGREE_NOTE = _(
    "Polynomials of degree below 2 have no critical structure. A degree 1 "
    "polynomial is a uniqueness polynomial but never a strong one: for "
    "P(z) = z, P(f) = c P(g) holds with f = c g and f != g.")


def _theorem_list(value):
    if not value:
        return None
    return [t.strip() for t in value.split(',') if t.strip()]


def _add_certify_args(sub):
    sub.add_argument('--theorems',
                     help='Comma separated certifiers to run, in chain '
                          'order: %s.' % ', '.join(certifier.KNOWN_THEOREMS))
    sub.add_argument('--json', action='store_true',
                     help='Print the report as JSON.')
    sub.add_argument('--any-pair', action='store_true', dest='any_pair',
                     help='Let Theorem 2.1 scan every pair of critical '
                          'points (extension beyond the maximal pair).')


def add_command_parsers(subparsers):
    check = subparsers.add_parser('check', help='Certify a polynomial.')
    check.add_argument('polynomial')
    check.add_argument('--variable',
                       help='The only variable the polynomial may use.')
    _add_certify_args(check)
    check.set_defaults(func=cmd_check)

    family = subparsers.add_parser(
        'family', help='Construct and certify a catalog polynomial.')
    family.add_argument('family_id')
    for name in ('n', 'm', 'r', 'a', 'b', 'c'):
        family.add_argument('--%s' % name)
    family.add_argument('--param', action='append', default=[],
                        metavar='NAME=VALUE',
                        help='Any family parameter; may be repeated.')
    _add_certify_args(family)
    family.set_defaults(func=cmd_family)

    lemma = subparsers.add_parser('lemma',
                                  help='Verify a psi lemma at (n, A).')
    lemma.add_argument('lemma_id', choices=lemmas.LEMMAS)
    lemma.add_argument('--n', type=int, required=True)
    lemma.add_argument('--A', dest='A')
    lemma.add_argument('--json', action='store_true')
    lemma.set_defaults(func=cmd_lemma)

    urs_cmd = subparsers.add_parser(
        'urs', help='Unique range set thresholds for degree n and k '
                    'critical points.')
    urs_cmd.add_argument('--n', type=int, required=True)
    urs_cmd.add_argument('--k', type=int, required=True)
    urs_cmd.add_argument('--l', default='inf',
                         help='Truncation level: a positive integer or inf.')
    urs_cmd.add_argument('--theta', default='0',
                         help='Lower bound on the pole deficiency, in [0, 1].')
    urs_cmd.add_argument('--entire', action='store_true')
    urs_cmd.add_argument('--json', action='store_true')
    urs_cmd.set_defaults(func=cmd_urs)

    listing = subparsers.add_parser('list-families',
                                    help='List the family catalog.')
    listing.set_defaults(func=cmd_list_families)


command_opt = cfg.SubCommandOpt('command',
                                title='Commands',
                                help='Available commands',
                                handler=add_command_parsers)
CONF.register_cli_opt(command_opt)
logging.register_options(CONF)


def certify(poly, command, input_echo, theorems=None, any_pair=False):
    rep = report.Report(command=command, input_echo=input_echo)
    pair_mode = 'any' if any_pair else None
    try:
        cs = critical.analyze(poly)
    except exceptions.DegreeTooLow as exc:
        LOG.info("No critical structure: %s", exc)
        rep.notes.append(str(exc))
        rep.notes.append(LOW_DEGREE_NOTE)
        return rep
    with timeutils.StopWatch() as watch:
        rep.structure_summary = report.summarize_structure(cs)
        rep.certificates = certifier.run_chain(
            poly, theorems=theorems, pair_mode=pair_mode, structure=cs)
    LOG.debug("Certification chain took %.3fs", watch.elapsed())
    if not cs.critically_injective:
        rep.notes.append(_("Not critically injective: the uniqueness "
                           "criteria that need distinct critical values "
                           "do not apply."))
    return rep


def cmd_check():
    args = CONF.command
    expr = parser.parse_expr(args.polynomial, variable=args.variable)
    return certify(expr.parsed, 'check',
                   parser.render_poly(expr.parsed, expr.variable),
                   theorems=_theorem_list(args.theorems),
                   any_pair=args.any_pair)


def _family_params(args):
    params = {}
    for name in ('n', 'm', 'r', 'a', 'b', 'c'):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    for item in args.param:
        name, sep, value = item.partition('=')
        if not sep:
            raise exceptions.FamilyError(
                reason="--param expects NAME=VALUE, got %r" % item)
        params[name.strip()] = value.strip()
    return params


def cmd_family():
    args = CONF.command
    definition = families.get_family(args.family_id)
    poly = definition.construct(_family_params(args))
    rep = certify(poly, 'family', parser.render_poly(poly),
                  theorems=_theorem_list(args.theorems),
                  any_pair=args.any_pair)
    rep.notes.insert(0, 'family %s' % definition.family_id)
    return rep


def cmd_lemma():
    args = CONF.command
    a = parser.parse_gaussian(args.A) if args.A is not None else None
    result = lemmas.verify(args.lemma_id, args.n, a)
    return report.Report(command='lemma', lemma_results=[result])


def _urs_params(args):
    level = args.l.strip().lower()
    if level in ('inf', 'infinity', 'oo'):
        l_value = None
    else:
        try:
            l_value = int(level)
        except ValueError:
            raise exceptions.UrsParamsError(
                reason="l must be a positive integer or inf, got %r" % args.l)
    theta = parser.parse_gaussian(args.theta)
    if not theta.is_real:
        raise exceptions.UrsParamsError(
            reason="theta must be real, got %s" % args.theta)
    return urs.UrsParams(l=l_value, theta_min=theta.re)


def cmd_urs():
    args = CONF.command
    params = _urs_params(args)
    certificates = [
        urs.check_urs_theorem_e(args.n, args.k, args.entire),
        urs.check_urs_cardinality(args.n, args.k, params, args.entire),
        urs.check_urs_deficiency(args.n, args.k, params, args.entire),
    ]
    return report.Report(command='urs', certificates=certificates)


def cmd_list_families():
    lines = []
    for definition in families.list_families():
        params = ', '.join(p.name for p in definition.parameters)
        lines.append('%s (%s): %s' % (definition.family_id, definition.alias,
                                      definition.description))
        lines.append('    parameters: %s' % params)
        lines.append('    constraints: %s' % definition.constraints)
    print('\n'.join(lines))
    return None


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    # stdout carries the report
    CONF.set_default('use_stderr', True)
    try:
        CONF(argv, project='supm-certifier')
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else report.EXIT_INPUT_ERROR
    logging.setup(CONF, 'supm-cert')
    args = CONF.command
    LOG.info("Running %s", args.name)
    try:
        rep = args.func()
    except exceptions.SupmException as exc:
        LOG.error("%s", exc)
        sys.stderr.write('error: %s\n' % exc)
        return report.EXIT_INPUT_ERROR
    if rep is None:
        return 0
    if getattr(args, 'json', False):
        print(rep.to_json())
    else:
        print(rep.render_text())
    code = rep.exit_code()
    LOG.info("%(cmd)s finished: %(overall)s, exit code %(code)d",
             {'cmd': args.name, 'overall': rep.overall['conclusion'],
              'code': code})
    return code


if __name__ == '__main__':
    sys.exit(main())
