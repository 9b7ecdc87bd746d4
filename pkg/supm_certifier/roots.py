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

"""Exact extraction of Q(i)-rational roots of square-free polynomials.

The roots are read off the linear factors of the irreducible factorization
over Q(i). Nothing numeric is involved.
"""

from oslo_log import log as logging

from supm_certifier import config
from supm_certifier.gaussian import GaussianRational

CONF = config.CONF
LOG = logging.getLogger(__name__)


def rational_roots(f):
    """Return (roots, cofactor) for a square-free polynomial f.

    ``roots`` are the distinct Q(i) roots of f in a deterministic order and
    ``cofactor`` is f divided by the corresponding linear factors. Above
    ``[analysis] max_factor_degree`` f is not factored: only a zero root is
    split off and the rest stays in the cofactor.
    """
    roots = []
    cofactor = f
    if f.degree is None or f.degree == 0:
        return roots, cofactor
    if f.degree > CONF.analysis.max_factor_degree:
        LOG.warning("Rational root search skipped for a polynomial of "
                    "degree %(deg)d: above the configured limit %(limit)d",
                    {'deg': f.degree,
                     'limit': CONF.analysis.max_factor_degree})
        if f.coefficient(0).is_zero:
            roots.append(GaussianRational(0))
            cofactor = cofactor.exact_div(cofactor.monomial(1))
        return roots, cofactor
    _, factors = f.factor_list()
    for factor, _multiplicity in factors:
        if factor.degree == 1:
            roots.append(-factor.coefficient(0))
            cofactor = cofactor.exact_div(factor)
    roots.sort(key=GaussianRational.sort_key)
    return roots, cofactor
