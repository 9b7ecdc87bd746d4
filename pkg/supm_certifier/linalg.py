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

"""Exact linear algebra over Q(i) used by the elimination helpers.

Matrices are square lists of rows of ``QQ_I`` elements; characteristic
polynomials come from :class:`DomainMatrix`.
"""

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix


def zeros(size):
    return [[QQ_I.zero] * size for _ in range(size)]


def charpoly(rows):
    """Monic det(xI - M), coefficients in descending powers."""
    n = len(rows)
    return DomainMatrix([list(row) for row in rows], (n, n), QQ_I).charpoly()


def kronecker_sum(a, b):
    """A (x) I + I (x) B; its eigenvalues are the sums of eigenvalues."""
    n, m = len(a), len(b)
    out = zeros(n * m)
    for i in range(n):
        for j in range(m):
            row = i * m + j
            for k in range(n):
                out[row][k * m + j] += a[i][k]
            for k in range(m):
                out[row][i * m + k] += b[j][k]
    return out


def exterior_square_derivation(a):
    """Matrix of A^(1) on the exterior square, basis e_p ^ e_q with p < q.

    Its eigenvalues are a_p + a_q over p < q, where a_* are those of A.
    """
    n = len(a)
    pairs = [(p, q) for p in range(n) for q in range(p + 1, n)]
    index = {pair: idx for idx, pair in enumerate(pairs)}
    out = zeros(len(pairs))

    def add(p, q, value, col):
        if p == q:
            return
        if p < q:
            out[index[(p, q)]][col] += value
        else:
            out[index[(q, p)]][col] -= value

    for col, (p, q) in enumerate(pairs):
        for c in range(n):
            # A e_p ^ e_q + e_p ^ A e_q
            add(c, q, a[c][p], col)
            add(p, c, a[c][q], col)
    return out
