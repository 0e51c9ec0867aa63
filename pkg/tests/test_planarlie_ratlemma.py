# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import random
import unittest
from fractions import Fraction
from math import gcd

import pytest

from planarlie.exceptions import ConstantInput, MultivariateInput, NotProportional, UsageError
from planarlie.polyrat import Poly, RatFunc, ord_p, partial
from planarlie.ratlemma import (
    affine_pattern,
    eigen_ratio,
    exponent_pattern,
    log_derivative_obstruction,
    power_decompose,
    proportionality_ratio,
    rational_gcd,
)

t = RatFunc.variable("t")


def random_univariate(rng, degree):
    """a nonconstant rational function of t with numerator and denominator degree <= degree"""

    def poly():
        p = RatFunc.constant(rng.randint(-5, 5))
        for k in range(1, rng.randint(1, degree) + 1):
            p = p + rng.randint(-5, 5) * t ** k
        return p

    while True:
        num, den = poly(), poly()
        if den.is_zero or rng.random() < 0.4:
            den = RatFunc.one()
        f = num / den
        if not f.is_constant:
            return f


def random_rational(rng):
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))


@pytest.mark.quick
class Test_Proportionality(unittest.TestCase):
    def test_ratio(self):
        self.assertEqual(proportionality_ratio(t ** 3, t ** 2), Fraction(2, 3))
        self.assertEqual(proportionality_ratio(t + 1, 1 / (t + 1)), -1)
        with self.assertRaises(NotProportional):
            proportionality_ratio(t, t + 1)
        with self.assertRaises(NotProportional):
            proportionality_ratio(t, RatFunc.variable("y"))
        with self.assertRaises(ConstantInput):
            proportionality_ratio(RatFunc.constant(3), t)
        with self.assertRaises(MultivariateInput):
            proportionality_ratio(t + RatFunc.variable("y"), t)

    def test_decompose(self):
        r = power_decompose(t ** 4 * (t + 1) ** 2, t ** 6 * (t + 1) ** 3)
        self.assertEqual((str(r.theta), r.s, r.t, r.c1, r.c2, r.mu), ("x^3 + x^2", 2, 3, 1, 1, Fraction(3, 2)))
        r = power_decompose(2 * t ** 2, 5 / t ** 2)
        self.assertEqual((r.theta, r.s, r.t, r.c1, r.c2), (t * t, 1, -1, 2, 5))
        self.assertEqual(r.as_dict()["mu"], "-1")

    def test_obstruction(self):
        p, k = log_derivative_obstruction(t ** 3 / (t - 1))
        self.assertEqual((str(p), k), ("x", -1))
        p, k = log_derivative_obstruction((t * t + 1) ** 2)
        self.assertEqual(str(p), "x^2 + 1")
        with self.assertRaises(ConstantInput):
            log_derivative_obstruction(RatFunc.constant(5))


@pytest.mark.quick
class Test_ExponentPatterns(unittest.TestCase):
    def test_rational_gcd(self):
        self.assertEqual(rational_gcd([Fraction(1, 2), Fraction(3, 4)]), Fraction(1, 4))
        self.assertEqual(rational_gcd([0, -6, 4]), 2)
        self.assertEqual(rational_gcd([]), 0)

    def test_exponent_pattern(self):
        self.assertEqual(exponent_pattern([1, 3, 2]), (1, [0, 2, 1]))
        self.assertEqual(exponent_pattern([2, 3, 5]), (Fraction(1, 2), [0, 1, 3]))
        self.assertEqual(exponent_pattern([-1, 1], reference=1), (2, [-1, 0]))
        with self.assertRaises(UsageError):
            exponent_pattern([0, 1])
        with self.assertRaises(UsageError):
            exponent_pattern([2, 2])

    def test_affine_pattern(self):
        self.assertEqual(affine_pattern([1, 4, 7]), (3, [0, 1, 2]))
        self.assertEqual(affine_pattern([1, 4, 7], orientation=-1), (3, [0, -1, -2]))
        with self.assertRaises(UsageError):
            affine_pattern([1, 1])

    def test_eigen_ratio(self):
        self.assertEqual(eigen_ratio(1, 3, 5), 2)
        with self.assertRaises(UsageError):
            eigen_ratio(1, 1, 2)


@pytest.mark.properties
class Test_RandomDecompositions(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.rng = random.Random(4242)

    def test_obstructions(self):
        for _ in range(60):
            phi = random_univariate(self.rng, 4)
            p, k = log_derivative_obstruction(phi)
            self.assertEqual(k, -1)
            self.assertNotEqual(ord_p(phi, p), 0)
            self.assertEqual(ord_p(partial(phi, "t") / phi, p), -1)

    def test_power_decompositions(self):
        rng = self.rng
        done = 0
        while done < 60:
            theta = random_univariate(rng, 3)
            s, u = rng.randint(1, 4), rng.choice([-4, -3, -2, -1, 1, 2, 3, 4])
            if gcd(s, abs(u)) != 1:
                continue
            c1, c2 = random_rational(rng), random_rational(rng)
            phi, psi = c1 * theta ** s, c2 * theta ** u
            r = power_decompose(phi, psi)
            self.assertEqual(r.reconstruct(), (phi, psi))
            self.assertEqual((r.s, r.t), (s, u))
            self.assertEqual(r.mu, Fraction(u, s))
            a, b, c = r.power_relation()
            self.assertEqual(phi ** a, c * psi ** b)
            done += 1

    def test_not_proportional(self):
        rng = self.rng
        for _ in range(20):
            r1, r2 = rng.sample(range(-6, 7), 2)
            a, b, c = rng.randint(1, 3), rng.choice([-2, -1, 1, 2]), rng.randint(0, 2)
            phi = (t - r1) ** a
            psi = (t - r2) ** b * (t - r1) ** c
            with self.assertRaises(NotProportional):
                power_decompose(phi, psi)


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
