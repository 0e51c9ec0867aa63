# -*- coding: utf-8 -*-
"""Exact dense linear algebra over the rationals

QMatrix holds Fraction entries.  Row reduction is done by exact
Gauss-Jordan elimination; characteristic polynomials come from sympy
and their rational roots from :func:`planarlie.polyrat.rational_roots`.

>>> m = QMatrix.from_rows([[1, 2], [2, 4]])
>>> r, pivots = rref(m)
>>> r.to_rows(), pivots
([[Fraction(1, 1), Fraction(2, 1)], [Fraction(0, 1), Fraction(0, 1)]], [0])

"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
from fractions import Fraction

import attr
import sympy

from planarlie.exceptions import NonSquare, NotInSpan, UsageError
from planarlie.polyrat import Poly, format_rational, rational_roots

_logger = logging.getLogger(__name__)


@attr.s(slots=True, frozen=True, repr=False, eq=True, hash=True)
class QMatrix(object):
    rows = attr.ib()
    cols = attr.ib()
    entries = attr.ib(converter=lambda es: tuple(Fraction(e) for e in es))

    def __attrs_post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise UsageError(
                "{r}x{c} matrix needs {n} entries, got {k}".format(
                    r=self.rows, c=self.cols, n=self.rows * self.cols, k=len(self.entries)
                )
            )

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows(zip(*columns), len(columns)) if columns else cls(rows, 0, [])

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, values):
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def is_zero(self):
        return not any(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def column(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def transpose(self):
        return QMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return QMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return QMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return QMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c):
        c = Fraction(c)
        return QMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __mul__(self, other):
        if not isinstance(other, QMatrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise UsageError("cannot multiply {}x{} by {}x{}".format(
                self.rows, self.cols, other.rows, other.cols))
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append([sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols])
        return QMatrix.from_rows(out, other.cols)

    __rmul__ = scale

    def apply(self, v):
        """matrix-vector product"""
        return [sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
                for i in range(self.rows)]

    def __pow__(self, k):
        _require_square(self)
        out = QMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def trace(self):
        _require_square(self)
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def format(self, conf=None):
        return "[" + ", ".join(
            "[" + ", ".join(format_rational(e) for e in self.row(i)) + "]"
            for i in range(self.rows)) + "]"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "{0}({1})".format(self.__class__.__name__, self.format())


def _require_square(m):
    if not m.is_square:
        raise NonSquare("{}x{} matrix is not square".format(m.rows, m.cols))


def _rref_rows(rows, ncols):
    """Gauss-Jordan elimination in place; returns pivot columns"""
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        k = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [e / p for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def rref(m):
    """reduced row echelon form and strictly increasing pivot columns"""
    rows = m.to_rows()
    pivots = _rref_rows(rows, m.cols)
    return QMatrix.from_rows(rows, m.cols), pivots


def rank(m):
    return len(rref(m)[1])


def row_basis(vectors, length=None):
    """echelon basis (nonzero rref rows) of the span of `vectors`"""
    vectors = [list(map(Fraction, v)) for v in vectors]
    if not vectors:
        return []
    length = len(vectors[0]) if length is None else length
    pivots = _rref_rows(vectors, length)
    return vectors[: len(pivots)]


def kernel(m):
    """basis of the right null space {v : m v = 0}, one vector per free column"""
    r, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -r[i, f]
        basis.append(v)
    return basis


def solve(m, b):
    """one solution x of m x = b; NotInSpan if the system is inconsistent"""
    aug = [row + [Fraction(bi)] for row, bi in zip(m.to_rows(), b)]
    pivots = _rref_rows(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        raise NotInSpan("inconsistent linear system")
    x = [Fraction(0)] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = aug[i][m.cols]
    return x


def det(m):
    _require_square(m)
    rows = m.to_rows()
    d = Fraction(1)
    n = m.rows
    for c in range(n):
        k = next((i for i in range(c, n) if rows[i][c]), None)
        if k is None:
            return Fraction(0)
        if k != c:
            rows[c], rows[k] = rows[k], rows[c]
            d = -d
        p = rows[c][c]
        d *= p
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return d


def inverse(m):
    _require_square(m)
    n = m.rows
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m.to_rows())]
    pivots = _rref_rows(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise NotInSpan("matrix is singular")
    return QMatrix.from_rows([r[n:] for r in aug], n)


def commutator(a, b):
    return a * b - b * a


def is_nilpotent(m):
    _require_square(m)
    return (m ** m.rows).is_zero


def charpoly(m):
    """characteristic polynomial det(t I - m) as a Poly in x"""
    _require_square(m)
    if m.rows == 0:
        return Poly.constant(1)
    sm = sympy.Matrix(m.rows, m.cols, [sympy.Rational(e.numerator, e.denominator) for e in m.entries])
    coeffs = sm.charpoly().all_coeffs()
    n = len(coeffs) - 1
    return Poly.from_terms(
        {(n - k, 0): Fraction(int(c.p), int(c.q)) for k, c in enumerate(coeffs)}
    )


def rational_eigen(m):
    """rational eigenvalues with algebraic multiplicity and generalized eigenspace

    Returns ``(eigen, split)`` where eigen is a list of
    ``(value, multiplicity, basis)`` ordered by value and split is True
    when the characteristic polynomial factors into linear factors.

    >>> eigen, split = rational_eigen(QMatrix.from_rows([[0, -1], [1, 0]]))
    >>> eigen, split
    ([], False)
    """
    _require_square(m)
    n = m.rows
    roots = rational_roots(charpoly(m)) if n else []
    eigen = []
    for value, mult in roots:
        shifted = m - QMatrix.identity(n).scale(value)
        eigen.append((value, mult, kernel(shifted ** mult)))
    split = sum(mult for _, mult, _ in eigen) == n
    _logger.debug("rational_eigen: {n}x{n}, eigenvalues {e}, split={s}".format(
        n=n, e=[format_rational(v) for v, _, _ in eigen], s=split))
    return eigen, split


def eigenspace(m, value):
    """ordinary eigenspace ker(m - value I)"""
    return kernel(m - QMatrix.identity(m.rows).scale(value))


# <LICENSE>
# Copyright 2018 Planar-Lie Contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# </LICENSE>
