# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import random
import unittest
from fractions import Fraction

import pytest

from planarlie.exceptions import NonSquare, NotInSpan, UsageError
from planarlie.linalg import (
    QMatrix,
    charpoly,
    commutator,
    det,
    eigenspace,
    inverse,
    is_nilpotent,
    kernel,
    rank,
    rational_eigen,
    row_basis,
    rref,
    solve,
)


@pytest.mark.quick
@pytest.mark.models
class Test_QMatrix(unittest.TestCase):
    def test_construction(self):
        m = QMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        self.assertEqual((m.rows, m.cols), (2, 3))
        self.assertEqual(m[1, 2], 6)
        self.assertEqual(m.transpose(), QMatrix.from_columns([[1, 2, 3], [4, 5, 6]]))
        self.assertEqual(str(m), "[[1, 2, 3], [4, 5, 6]]")
        with self.assertRaises(UsageError):
            QMatrix(2, 2, [1, 2, 3])

    def test_arithmetic(self):
        a = QMatrix.from_rows([[1, 2], [3, 4]])
        b = QMatrix.from_rows([[0, 1], [1, 0]])
        self.assertEqual(a * b, QMatrix.from_rows([[2, 1], [4, 3]]))
        self.assertEqual(a + b - b, a)
        self.assertEqual(a.scale(Fraction(1, 2))[1, 1], 2)
        self.assertEqual(a ** 2, a * a)
        self.assertEqual(a ** 0, QMatrix.identity(2))
        self.assertEqual(a.trace(), 5)
        self.assertEqual(commutator(b, b), QMatrix.zeros(2))
        self.assertEqual(a.apply([1, 1]), [3, 7])

    def test_non_square(self):
        m = QMatrix.from_rows([[1, 2, 3]])
        with self.assertRaises(NonSquare):
            m.trace()
        with self.assertRaises(NonSquare):
            det(m)
        with self.assertRaises(NonSquare):
            charpoly(m)


@pytest.mark.quick
class Test_Elimination(unittest.TestCase):
    def test_rref_and_rank(self):
        m = QMatrix.from_rows([[2, 4, 2], [1, 2, 3], [0, 0, 4]])
        r, pivots = rref(m)
        self.assertEqual(pivots, [0, 2])
        self.assertEqual(r.row(0), [1, 2, 0])
        self.assertEqual(rank(m), 2)

    def test_kernel(self):
        m = QMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
        basis = kernel(m)
        self.assertEqual(len(basis), 2)
        for v in basis:
            self.assertEqual(m.apply(v), [0, 0])
        self.assertEqual(kernel(QMatrix.identity(3)), [])

    def test_solve(self):
        m = QMatrix.from_rows([[1, 1], [1, -1]])
        self.assertEqual(solve(m, [3, 1]), [2, 1])
        with self.assertRaises(NotInSpan):
            solve(QMatrix.from_rows([[1, 1], [2, 2]]), [1, 3])

    def test_det_and_inverse(self):
        m = QMatrix.from_rows([[2, 1], [7, 4]])
        self.assertEqual(det(m), 1)
        self.assertEqual(inverse(m) * m, QMatrix.identity(2))
        self.assertEqual(det(QMatrix.from_rows([[1, 2], [2, 4]])), 0)
        with self.assertRaises(NotInSpan):
            inverse(QMatrix.from_rows([[1, 2], [2, 4]]))

    def test_row_basis(self):
        rows = row_basis([[0, 2, 2], [0, 1, 1], [1, 0, 0]])
        self.assertEqual(rows, [[1, 0, 0], [0, 1, 1]])
        self.assertEqual(row_basis([]), [])


@pytest.mark.quick
class Test_Spectrum(unittest.TestCase):
    def test_charpoly(self):
        m = QMatrix.from_rows([[2, 1], [0, 3]])
        self.assertEqual(str(charpoly(m)), "x^2 - 5*x + 6")

    def test_rational_eigen(self):
        m = QMatrix.from_rows([[2, 1, 0], [0, 2, 0], [0, 0, -1]])
        eigen, split = rational_eigen(m)
        self.assertTrue(split)
        self.assertEqual([(v, k) for v, k, _ in eigen], [(-1, 1), (2, 2)])
        self.assertEqual(len(eigen[1][2]), 2)
        self.assertEqual(eigenspace(m, 2), [[1, 0, 0]])

    def test_partial_split(self):
        m = QMatrix.from_rows([[0, -1, 0], [1, 0, 0], [0, 0, 5]])
        eigen, split = rational_eigen(m)
        self.assertFalse(split)
        self.assertEqual([v for v, _, _ in eigen], [5])

    def test_nilpotent(self):
        self.assertTrue(is_nilpotent(QMatrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])))
        self.assertFalse(is_nilpotent(QMatrix.identity(2)))


@pytest.mark.properties
class Test_LinalgProperties(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.rng = random.Random(20180601)

    def random_matrix(self, n, m=None):
        m = n if m is None else m
        return QMatrix.from_rows(
            [[Fraction(self.rng.randint(-4, 4), self.rng.randint(1, 3)) for _ in range(m)]
             for _ in range(n)])

    def test_rank_nullity(self):
        for _ in range(40):
            m = self.random_matrix(self.rng.randint(1, 4), self.rng.randint(1, 5))
            self.assertEqual(rank(m) + len(kernel(m)), m.cols)

    def test_inverse_and_det(self):
        for _ in range(40):
            m = self.random_matrix(3)
            if det(m):
                self.assertEqual(m * inverse(m), QMatrix.identity(3))
                self.assertEqual(det(inverse(m)), 1 / det(m))

    def test_jacobi_for_commutator(self):
        for _ in range(20):
            a, b, c = self.random_matrix(3), self.random_matrix(3), self.random_matrix(3)
            total = (commutator(a, commutator(b, c)) + commutator(b, commutator(c, a))
                     + commutator(c, commutator(a, b)))
            self.assertTrue(total.is_zero)


if __name__ == "__main__":
    unittest.main()
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
