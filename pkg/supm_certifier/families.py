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

"""Catalog of named polynomial families.

Families are expanded from their closed-form coefficient sums. Extra
families can be registered by other packages in the
``supm_certifier.families`` entry point namespace; each entry point must
name a :class:`FamilyDefinition` subclass.
"""

from __future__ import annotations

import abc
import dataclasses
from fractions import Fraction
import math

from oslo_log import log as logging
from stevedore import extension

from supm_certifier import certifier
from supm_certifier import exceptions
from supm_certifier.gaussian import GaussianRational
from supm_certifier.gaussian import render_gaussian
from supm_certifier import parser
from supm_certifier.polynomial import Poly

LOG = logging.getLogger(__name__)

PLUGIN_NAMESPACE = 'supm_certifier.families'

INT = 'int'
GAUSSIAN = 'gaussian'


@dataclasses.dataclass(frozen=True)
class Parameter:
    name: str
    kind: str
    default: object = None
    help: str = ''

    def coerce(self, value):
        if self.kind == INT:
            try:
                return int(value)
            except (TypeError, ValueError):
                raise exceptions.FamilyError(
                    reason="parameter %s must be an integer, got %r"
                           % (self.name, value))
        if isinstance(value, str):
            return parser.parse_gaussian(value)
        return GaussianRational.coerce(value)


class FamilyDefinition(object, metaclass=abc.ABCMeta):
    """A parametric polynomial family with its validity constraints."""

    family_id = None
    alias = None
    parameters = ()
    description = ''
    constraints = ''

    def coerce_params(self, raw: dict) -> dict:
        known = {p.name for p in self.parameters}
        unknown = sorted(set(raw) - known)
        if unknown:
            raise exceptions.FamilyParameterError(
                family=self.family_id,
                constraint="unknown parameter(s) %s; expected %s"
                           % (', '.join(unknown),
                              ', '.join(p.name for p in self.parameters)))
        params = {}
        for p in self.parameters:
            value = raw.get(p.name)
            if value is None:
                value = p.default
            if value is None:
                raise exceptions.FamilyParameterError(
                    family=self.family_id,
                    constraint="missing parameter %s" % p.name)
            params[p.name] = p.coerce(value)
        return params

    def excluded(self, params: dict) -> dict:
        """Forbidden values per parameter, given the other parameters."""
        return {}

    def side_conditions(self, params: dict) -> list:
        """(description, holds) pairs of arithmetic conditions."""
        return []

    def validate(self, params: dict):
        excluded = self.excluded(params)
        for name, values in sorted(excluded.items()):
            if params[name] in values:
                raise exceptions.FamilyParameterError(
                    family=self.family_id,
                    constraint="%s = %s is excluded"
                               % (name, render_gaussian(params[name])),
                    excluded=excluded)
        for description, holds in self.side_conditions(params):
            if not holds:
                raise exceptions.FamilyParameterError(
                    family=self.family_id, constraint=description,
                    excluded=excluded)

    @abc.abstractmethod
    def build(self, params: dict) -> Poly:
        """Expand the family's closed form for valid parameters."""

    def construct(self, raw: dict) -> Poly:
        params = self.coerce_params(raw)
        self.validate(params)
        poly = self.build(params)
        LOG.debug("Constructed %(family)s%(params)s of degree %(deg)s",
                  {'family': self.family_id, 'params': params,
                   'deg': poly.degree})
        return poly


def binomial_lambda(n: int, m: int, b=1) -> GaussianRational:
    """sum_i C(m,i) (-1)^i b^i / (n+m+1-i), the value gap P(b) - P(0)."""
    b = GaussianRational.coerce(b)
    total = GaussianRational(0)
    for i in range(m + 1):
        total = total + b ** i * Fraction((-1) ** i * math.comb(m, i),
                                          n + m + 1 - i)
    return total


def _binomial_sum(n, m, b=1):
    b = GaussianRational.coerce(b)
    degree = n + m + 1
    out = Poly()
    for i in range(m + 1):
        coeff = b ** i * Fraction((-1) ** i * math.comb(m, i), degree - i)
        out = out + Poly.monomial(degree - i, coeff)
    return out


def generalized_q(m: int, n: int, a, b) -> Poly:
    """Antiderivative of (z-b)^m (z-a)^n vanishing at 0."""
    a = GaussianRational.coerce(a)
    b = GaussianRational.coerce(b)
    degree = n + m + 1
    out = Poly()
    for i in range(m + 1):
        for j in range(n + 1):
            coeff = (Fraction((-1) ** (i + j) * math.comb(m, i)
                              * math.comb(n, j), degree - i - j)
                     * a ** j * b ** i)
            out = out + Poly.monomial(degree - i - j, coeff)
    return out


class YiFamily(FamilyDefinition):
    family_id = 'Yi_PY'
    alias = 'py'
    description = 'z^n + a z^(n-r) + b'
    constraints = 'gcd(n,r) = 1, 2 <= r < n, ab != 0, n >= 6'
    parameters = (Parameter('n', INT), Parameter('r', INT),
                  Parameter('a', GAUSSIAN), Parameter('b', GAUSSIAN))

    def excluded(self, params):
        return {'a': {GaussianRational(0)}, 'b': {GaussianRational(0)}}

    def side_conditions(self, params):
        n, r = params['n'], params['r']
        return [('n >= 6', n >= 6),
                ('2 <= r < n', 2 <= r < n),
                ('gcd(n, r) = 1', math.gcd(n, r) == 1)]

    def build(self, params):
        n, r = params['n'], params['r']
        return (Poly.monomial(n) + Poly.monomial(n - r, params['a'])
                + Poly.constant(params['b']))


class FrankReindersFamily(FamilyDefinition):
    family_id = 'FrankReinders_PFR'
    alias = 'pfr'
    description = ('(n-1)(n-2)/2 z^n - n(n-2) z^(n-1) '
                   '+ n(n-1)/2 z^(n-2) - c')
    constraints = 'n >= 5, c not in {0, 1, 1/2}'
    parameters = (Parameter('n', INT), Parameter('c', GAUSSIAN))

    def excluded(self, params):
        return {'c': {GaussianRational(0), GaussianRational(1),
                      GaussianRational(Fraction(1, 2))}}

    def side_conditions(self, params):
        return [('n >= 5', params['n'] >= 5)]

    def build(self, params):
        n = params['n']
        return (Poly.monomial(n, Fraction((n - 1) * (n - 2), 2))
                - Poly.monomial(n - 1, n * (n - 2))
                + Poly.monomial(n - 2, Fraction(n * (n - 1), 2))
                - Poly.constant(params['c']))


class BanerjeeFamily(FamilyDefinition):
    family_id = 'Banerjee_PB'
    alias = 'pb'
    description = 'sum_i C(m,i) (-1)^i / (n+m+1-i) z^(n+m+1-i) + c'
    constraints = 'n, m >= 1, c not in {0, -lambda_PB, -lambda_PB/2}'
    parameters = (Parameter('n', INT), Parameter('m', INT),
                  Parameter('c', GAUSSIAN))

    def excluded(self, params):
        lam = binomial_lambda(params['n'], params['m'])
        return {'c': {GaussianRational(0), -lam, -lam / 2}}

    def side_conditions(self, params):
        return [('n, m >= 1', params['n'] >= 1 and params['m'] >= 1)]

    def build(self, params):
        return (_binomial_sum(params['n'], params['m'])
                + Poly.constant(params['c']))


class GeneralizedFamily(FamilyDefinition):
    family_id = 'Generalized_P'
    alias = 'gp'
    description = 'Q(z) + c with Q\' = (z-b)^m (z-a)^n and Q(0) = 0'
    constraints = ('m, n >= 1, b != 0, a != b, '
                   'c not in {0, -Q(a), -Q(b), -(Q(a)+Q(b))/2}')
    parameters = (Parameter('m', INT), Parameter('n', INT),
                  Parameter('a', GAUSSIAN), Parameter('b', GAUSSIAN),
                  Parameter('c', GAUSSIAN))

    def excluded(self, params):
        q = generalized_q(params['m'], params['n'], params['a'], params['b'])
        qa, qb = q(params['a']), q(params['b'])
        return {'b': {GaussianRational(0), params['a']},
                'c': {GaussianRational(0), -qa, -qb, -(qa + qb) / 2}}

    def side_conditions(self, params):
        return [('m, n >= 1', params['m'] >= 1 and params['n'] >= 1)]

    def build(self, params):
        return (generalized_q(params['m'], params['n'], params['a'],
                              params['b'])
                + Poly.constant(params['c']))


class ShiftedBanerjeeFamily(FamilyDefinition):
    family_id = 'Shifted_PB'
    alias = 'spb'
    description = 'sum_i C(m,i) (-1)^i b^i / (n+m+1-i) z^(n+m+1-i) + c'
    constraints = ('n, m >= 1, bc != 0, '
                   'c not in {-b^(n+m+1) lambda_PB, -b^(n+m+1) lambda_PB/2}')
    parameters = (Parameter('n', INT), Parameter('m', INT),
                  Parameter('b', GAUSSIAN), Parameter('c', GAUSSIAN))

    def excluded(self, params):
        gap = binomial_lambda(params['n'], params['m'], params['b'])
        return {'b': {GaussianRational(0)},
                'c': {GaussianRational(0), -gap, -gap / 2}}

    def side_conditions(self, params):
        return [('n, m >= 1', params['n'] >= 1 and params['m'] >= 1)]

    def build(self, params):
        return (_binomial_sum(params['n'], params['m'], params['b'])
                + Poly.constant(params['c']))


class PowerGapFamily(FamilyDefinition):
    family_id = 'PowerGap'
    alias = 'powergap'
    description = 'z^n - (n/m) z^m + b'
    constraints = ('gcd(m,n) = 1, n-m >= 2, n >= 5, m >= 1, '
                   'b not in {0, (n-m)/m, (n-m)/(2m)}')
    parameters = (Parameter('n', INT), Parameter('m', INT),
                  Parameter('b', GAUSSIAN))

    def excluded(self, params):
        n, m = params['n'], params['m']
        if m < 1:
            return {'b': {GaussianRational(0)}}
        return {'b': {GaussianRational(0),
                      GaussianRational(Fraction(n - m, m)),
                      GaussianRational(Fraction(n - m, 2 * m))}}

    def side_conditions(self, params):
        n, m = params['n'], params['m']
        return [('m >= 1', m >= 1),
                ('n >= 5', n >= 5),
                ('n - m >= 2', n - m >= 2),
                ('gcd(m, n) = 1', math.gcd(m, n) == 1)]

    def build(self, params):
        n, m = params['n'], params['m']
        return (Poly.monomial(n) - Poly.monomial(m, Fraction(n, m))
                + Poly.constant(params['b']))


class Thm23Family(FamilyDefinition):
    family_id = 'Thm2_3'
    alias = 'thm23'
    description = 'z^n + a z^(n-1) + b z^(n-2) + c'
    constraints = ('n >= 6, ab != 0, a^2 = lambda_thm23 b with '
                   'lambda_thm23 = 4(1 - 1/(n-1)^2); c defaults to 0')
    parameters = (Parameter('n', INT), Parameter('a', GAUSSIAN),
                  Parameter('b', GAUSSIAN),
                  Parameter('c', GAUSSIAN, default=0))

    def excluded(self, params):
        return {'a': {GaussianRational(0)}, 'b': {GaussianRational(0)}}

    def side_conditions(self, params):
        cert = certifier.check_thm_2_3_family(params['n'], params['a'],
                                              params['b'])
        return list(cert.witnesses['hypotheses'].items())

    def build(self, params):
        n = params['n']
        return (Poly.monomial(n) + Poly.monomial(n - 1, params['a'])
                + Poly.monomial(n - 2, params['b'])
                + Poly.constant(params['c']))


class RootOfUnityTwistFamily(FamilyDefinition):
    """A uniqueness polynomial that is never a strong one.

    P(w z) = w^(n-r) P(z) for an r-th root of unity w, so f = w g solves
    P(f) = c P(g) with c = w^(n-r) != 1 while f != g.
    """

    family_id = 'UPM_not_SUPM'
    alias = 'upm'
    description = 'z^(n-r) (z^r + a)'
    constraints = 'gcd(n,r) = 1, 2 <= r < n, n >= 5, a != 0'
    parameters = (Parameter('n', INT), Parameter('r', INT),
                  Parameter('a', GAUSSIAN))

    def excluded(self, params):
        return {'a': {GaussianRational(0)}}

    def side_conditions(self, params):
        n, r = params['n'], params['r']
        return [('n >= 5', n >= 5),
                ('2 <= r < n', 2 <= r < n),
                ('gcd(n, r) = 1', math.gcd(n, r) == 1)]

    def build(self, params):
        n, r = params['n'], params['r']
        return Poly.monomial(n) + Poly.monomial(n - r, params['a'])


BUILTIN_FAMILIES = {cls.family_id: cls() for cls in (
    YiFamily, FrankReindersFamily, BanerjeeFamily, GeneralizedFamily,
    ShiftedBanerjeeFamily, PowerGapFamily, Thm23Family,
    RootOfUnityTwistFamily)}


def _on_load_failure(manager, entrypoint, exc):
    LOG.warning("Could not load polynomial family plugin %(ep)s: %(exc)s",
                {'ep': entrypoint, 'exc': exc})


def load_plugin_families() -> dict:
    manager = extension.ExtensionManager(
        namespace=PLUGIN_NAMESPACE,
        invoke_on_load=True,
        on_load_failure_callback=_on_load_failure)
    plugins = {}
    for ext in manager:
        definition = ext.obj
        if not isinstance(definition, FamilyDefinition):
            LOG.warning("Ignoring family plugin %(name)s: not a "
                        "FamilyDefinition", {'name': ext.name})
            continue
        if definition.family_id in BUILTIN_FAMILIES:
            LOG.warning("Family plugin %(name)s shadows built-in family "
                        "%(id)s and is ignored",
                        {'name': ext.name, 'id': definition.family_id})
            continue
        plugins[definition.family_id] = definition
    return plugins


def list_families(include_plugins=True) -> list:
    families = dict(BUILTIN_FAMILIES)
    if include_plugins:
        for family_id, definition in load_plugin_families().items():
            families.setdefault(family_id, definition)
    return [families[k] for k in sorted(families)]


def get_family(name: str) -> FamilyDefinition:
    """Look a family up by identifier or CLI alias."""
    families = list_families()
    for definition in families:
        if name in (definition.family_id, definition.alias):
            return definition
    lowered = name.lower()
    for definition in families:
        if lowered in (definition.family_id.lower(),
                       (definition.alias or '').lower()):
            return definition
    raise exceptions.UnknownFamily(
        family=name,
        known=', '.join('%s (%s)' % (d.family_id, d.alias)
                        for d in families))


@dataclasses.dataclass(frozen=True)
class FamilySpec:
    family_id: str
    parameters: dict

    @property
    def definition(self) -> FamilyDefinition:
        return get_family(self.family_id)

    @property
    def excluded_set(self) -> dict:
        definition = self.definition
        return definition.excluded(definition.coerce_params(self.parameters))


def construct_family(spec: FamilySpec) -> Poly:
    return spec.definition.construct(spec.parameters)
