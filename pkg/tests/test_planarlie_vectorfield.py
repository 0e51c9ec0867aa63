# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import random
import unittest

import pytest

from planarlie.exceptions import UsageError
from planarlie.polyrat import RatFunc
from planarlie.vectorfield import (
    Derivation,
    apply,
    bracket,
    cross,
    r_coordinates,
    rank_over_R,
    ratio,
    scale,
)


def random_ratfunc(rng, degree=3):
    """a random rational function with numerator and denominator of total degree <= degree"""
    x, y = RatFunc.variable("x"), RatFunc.variable("y")

    def poly():
        p = RatFunc.zero()
        for _ in range(rng.randint(1, 3)):
            i = rng.randint(0, degree)
            j = rng.randint(0, degree - i)
            p = p + rng.randint(-3, 3) * x ** i * y ** j
        return p

    num = poly()
    if rng.random() < 0.5:
        return num
    den = poly()
    while den.is_zero:
        den = poly()
    return num / den


def random_derivation(rng):
    return Derivation(random_ratfunc(rng), random_ratfunc(rng))


@pytest.mark.quick
@pytest.mark.models
class Test_Derivation(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.x = RatFunc.variable("x")
        cls.y = RatFunc.variable("y")
        cls.dx = Derivation.dx()
        cls.dy = Derivation.dy()

    def test_format(self):
        x, y = self.x, self.y
        self.assertEqual(str(Derivation(y * y, -x / (y + 1))), "y^2 dx - x/(y + 1) dy")
        self.assertEqual(str(Derivation(-x, 1)), "-x dx + dy")
        self.assertEqual(str(Derivation(x + y, 0)), "(x + y) dx")
        self.assertEqual(str(Derivation(0, -2 * x)), "-2*x dy")
        self.assertEqual(str(Derivation()), "0")
        self.assertEqual(repr(self.dx), "Derivation(coef_x=1, coef_y=0)")

    def test_apply(self):
        x, y = self.x, self.y
        euler = Derivation(x, y)
        self.assertEqual(apply(euler, x * x * y), 3 * x * x * y)
        self.assertEqual(euler(x / y), RatFunc.zero())
        self.assertEqual(apply(self.dy, 5), RatFunc.zero())

    def test_bracket(self):
        x, y = self.x, self.y
        self.assertEqual(bracket(Derivation(-x, 1), self.dx), self.dx)
        self.assertEqual(bracket(self.dx, Derivation(x * x, 0)), Derivation(2 * x, 0))
        self.assertEqual(bracket(Derivation(y, 0), self.dy), -self.dx)
        self.assertTrue(bracket(self.dx, self.dy).is_zero)

    def test_scale_and_cross(self):
        x, y = self.x, self.y
        self.assertEqual(scale(y, self.dx), Derivation(y, 0))
        self.assertEqual(cross(self.dx, self.dy), RatFunc.one())
        self.assertTrue(cross(Derivation(x, y), Derivation(x * x, x * y)).is_zero)

    def test_rank_over_R(self):
        x, y = self.x, self.y
        self.assertEqual(rank_over_R([self.dx, Derivation(y, 0), Derivation(x * x, 0)]), 1)
        self.assertEqual(rank_over_R([self.dx, Derivation(x, y)]), 2)
        self.assertEqual(rank_over_R([Derivation()]), 0)
        with self.assertRaises(UsageError):
            rank_over_R([])

    def test_ratio(self):
        x, y = self.x, self.y
        self.assertEqual(ratio(Derivation(x * y, 0), self.dx), x * y)
        self.assertEqual(ratio(Derivation(0, y), Derivation(0, x)), y / x)
        self.assertIsNone(ratio(self.dy, self.dx))
        with self.assertRaises(UsageError):
            ratio(self.dx, Derivation())

    def test_r_coordinates(self):
        x, y = self.x, self.y
        D = Derivation(x + y, x * y)
        a, b = r_coordinates(D, self.dx, Derivation(1, 1))
        self.assertEqual(scale(a, self.dx) + scale(b, Derivation(1, 1)), D)
        with self.assertRaises(UsageError):
            r_coordinates(D, self.dx, Derivation(y, 0))

    def test_nonconstant_functions_are_moved(self):
        # a nonconstant c is moved by dx or by dy
        rng = random.Random(7)
        for _ in range(30):
            c = random_ratfunc(rng)
            if c.is_constant:
                continue
            self.assertFalse(apply(self.dx, c).is_zero and apply(self.dy, c).is_zero)


@pytest.mark.properties
class Test_BracketIdentities(unittest.TestCase):
    """exact bracket identities on random derivations with coefficient degree <= 3"""

    @classmethod
    def setUpClass(cls):
        cls.rng = random.Random(314159)

    def test_jacobi(self):
        for _ in range(200):
            D, E, F = (random_derivation(self.rng) for _ in range(3))
            total = (bracket(D, bracket(E, F)) + bracket(E, bracket(F, D))
                     + bracket(F, bracket(D, E)))
            self.assertTrue(total.is_zero, "Jacobi fails for {}, {}, {}".format(D, E, F))

    def test_antisymmetry(self):
        for _ in range(50):
            D, E = random_derivation(self.rng), random_derivation(self.rng)
            self.assertEqual(bracket(D, E), -bracket(E, D))

    def test_bracket_of_multiples(self):
        for _ in range(200):
            a, b = random_ratfunc(self.rng), random_ratfunc(self.rng)
            D1, D2 = random_derivation(self.rng), random_derivation(self.rng)
            lhs = bracket(scale(a, D1), scale(b, D2))
            rhs = (scale(a * b, bracket(D1, D2)) + scale(a * apply(D1, b), D2)
                   - scale(b * apply(D2, a), D1))
            self.assertEqual(lhs, rhs)

    def test_bracket_is_commutator_of_operators(self):
        for _ in range(30):
            D, E = random_derivation(self.rng), random_derivation(self.rng)
            f = random_ratfunc(self.rng)
            self.assertEqual(apply(bracket(D, E), f), apply(D, apply(E, f)) - apply(E, apply(D, f)))


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
