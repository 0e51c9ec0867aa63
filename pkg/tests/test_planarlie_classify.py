# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import unittest
from fractions import Fraction

import pytest

from planarlie.catalog import SL2, TheoremType, abstract_table, realize, verify_realization
from planarlie.classify import characteristic_ideals, classify, nilpotent_shape, round_trip
from planarlie.enums import TypeKind
from planarlie.exceptions import NotInCatalog, UsageError
from planarlie.structure import (
    Subspace,
    close,
    coordinates,
    is_abelian,
    is_ideal,
    quotient,
    radical,
    subalgebra,
)
from planarlie.vectorfield import Derivation


@pytest.mark.usefixtures("parser_setup")
class Test_Classify(unittest.TestCase):
    def classify(self, text):
        return classify(close(self.pp.parse_derivation_list(text)))

    def test_small_solvable(self):
        c = self.classify("dx; y dx; dy")
        self.assertEqual(str(c), "T3{n=1, lambda=0}")
        self.assertEqual([str(d) for d in c.fields()], ["dx", "y dx", "dy"])
        self.assertEqual(str(self.classify("dx; x dx")), "T2{n=1}")
        self.assertEqual(str(self.classify("dx; dy; x dx + y dy")), "T2{n=2}")
        self.assertEqual(str(self.classify("dx; y dx; y^2 dx")), "T1{n=3}")

    def test_report(self):
        report = self.classify("dx; y dx; dy").report()
        self.assertEqual(report["type"], "T3")
        self.assertEqual(report["params"], {"n": 1, "lambda": 0})
        self.assertEqual(report["dim"], 3)
        self.assertEqual(report["witnesses"]["d1"], "dx")
        self.assertEqual(report["witnesses"]["ideal"], ["dx", "y dx"])
        self.assertEqual(report["witnesses"]["multipliers"], {"e0": "1", "e1": "y"})
        self.assertEqual(report["adjustment"], {})

    def test_small_nonsolvable(self):
        c = self.classify("dx; x dx; x^2 dx")
        self.assertEqual(c.ttype, TheoremType.make("T9", variant=SL2))
        self.assertEqual(c.radical.dim, 0)
        c = self.classify("dx; x dx; x^2 dx; dy")
        self.assertEqual(str(c), "T11{m=0}")

    def test_abstract_algebras(self):
        c = classify(abstract_table(TheoremType.make("T9", variant=SL2)))
        self.assertEqual(str(c), "T9{variant=sl2}")
        self.assertEqual(set(c.report()["witnesses"]["basis"]), {"e", "f", "h"})
        self.assertEqual(str(classify(abstract_table(TheoremType.make("T2", n=3)))), "T2{n=3}")

    def test_not_in_catalog(self):
        with self.assertRaises(NotInCatalog):
            classify(close([Derivation()]))

    def test_nilpotent_shape(self):
        self.assertEqual(nilpotent_shape(close(self.pp.parse_derivation_list("dx; y dx"))), 1)
        self.assertEqual(nilpotent_shape(close(self.pp.parse_derivation_list("dx; dy"))), 2)
        self.assertEqual(nilpotent_shape(close(self.pp.parse_derivation_list("dx; x dy"))), 3)
        self.assertIsNone(nilpotent_shape(close(self.pp.parse_derivation_list("dx; x dx"))))

    def test_round_trip_relations(self):
        self.assertEqual(round_trip(TheoremType.make("T3", n=1, lam=0)).relation, "exact")
        self.assertEqual(round_trip(TheoremType.make("T3", n=0, lam=1)).relation, "equivalent")
        rt = round_trip(TheoremType.make("T4", n=1, beta=1, m=(0, 2)))
        self.assertEqual(rt.relation, "normalized")
        self.assertEqual(str(rt.found), "T4{n=1, beta=2/3, m=(0,-1)}")

    def test_round_trip_of_overlapping_forms(self):
        rt = round_trip(TheoremType.make("T5", n=0, beta=Fraction(1, 2), gamma=1))
        self.assertEqual(rt.relation, "equivalent")
        self.assertEqual(rt.found.kind, TypeKind.T4)
        self.assertEqual(rt.expected, TheoremType.make("T5", n=0, beta=Fraction(1, 2)))
        self.assertEqual(str(round_trip(TheoremType.make("T5", n=0, beta=1, gamma=1)).found),
                         "T3{n=1, lambda=1}")
        self.assertEqual(round_trip(TheoremType.make("T6", n=0)).found.kind, TypeKind.T4)
        rt = round_trip(TheoremType.make("T8", n=0, alpha=1, beta=1))
        self.assertEqual((rt.relation, rt.found.kind), ("equivalent", TypeKind.T7))

    def test_sl3(self):
        c = self.classify("dx; dy; x dx; x dy; y dx; y dy; x^2 dx + x y dy; x y dx + y^2 dy")
        self.assertEqual(str(c), "T10{}")
        self.assertEqual(c.algebra.dim, 8)
        self.assertEqual(c.report()["witnesses"]["radical"], 0)
        self.assertEqual(round_trip(TheoremType.make("T10")).relation, "exact")

    def test_isomorphic_realizations_agree(self):
        """r2 + K has one type however it is realized"""
        algebras = [
            close(self.pp.parse_derivation_list("dx; dy; x dx")),
            close(realize(TheoremType.make("T6", n=0))),
            close(realize(TheoremType.make("T5", n=0, beta=0))),
            close(realize(TheoremType.make("T4", n=1, beta=1, m=(0, -1)))),
        ]
        found = [str(classify(L).ttype) for L in algebras]
        self.assertTrue(found[0].startswith("T4{"), found[0])
        self.assertEqual(found, [found[0]] * len(found))

    def test_earliest_family_wins(self):
        # realized as type 5, and L' + Z(L) = <dx, dy> also makes it type 4
        t = TheoremType.make("T5", n=0, beta=0)
        L = close(realize(t))
        self.assertTrue(verify_realization(t))
        plane = Subspace.span(L, [coordinates(L, Derivation.dx()), coordinates(L, Derivation.dy())])
        self.assertIn(plane, characteristic_ideals(L))
        c = classify(L)
        self.assertEqual(c.ttype.kind, TypeKind.T4)
        self.assertIsNone(c.d1)
        self.assertEqual(c.report()["witnesses"]["ideal"], ["dx", "dy"])

    def test_abstract_solvable(self):
        for t in (TheoremType.make("T3", n=2, lam=0),
                  TheoremType.make("T3", n=2, lam=1),
                  TheoremType.make("T4", n=1, beta=1, m=(0, 2))):
            self.assertEqual(classify(abstract_table(t)).ttype, t.canonical(), str(t))
        with self.assertRaises(UsageError):
            classify(abstract_table(TheoremType.make("T5", n=1, beta=2)))


@pytest.mark.catalog
class Test_CatalogClassification(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        from planarlie.catalog import standard_grid

        cls.grid = standard_grid()

    def test_round_trip(self):
        failures = []
        for t in self.grid:
            rt = round_trip(t)
            if not rt:
                failures.append((str(t), str(rt.found)))
        self.assertEqual(failures, [])

    def test_solvable_witness_ideals(self):
        for t in self.grid:
            if not TypeKind.T3 <= t.kind <= TypeKind.T8:
                continue
            c = classify(close(realize(t)))
            if c.ideal is None:
                continue
            L, I = c.algebra, c.ideal
            self.assertTrue(is_ideal(L, I), str(t))
            self.assertLessEqual(L.dim - I.dim, 2, str(t))
            if L.dim - I.dim == 2:
                self.assertFalse(is_abelian(quotient(L, I)[0]), str(t))

    def test_nonsolvable_fingerprints(self):
        expected = {TypeKind.T9: lambda t: (3, 0) if t.variant == SL2 else (6, 0),
                    TypeKind.T10: lambda t: (8, 0),
                    TypeKind.T11: lambda t: (t.m + 4, t.m + 1),
                    TypeKind.T12: lambda t: (t.m + 5, t.m + 2)}
        for t in self.grid:
            if t.kind not in expected:
                continue
            L = close(realize(t))
            c = classify(L)
            R = radical(L)
            self.assertEqual((L.dim, R.dim), expected[c.ttype.kind](c.ttype), str(t))
            if R.dim:
                self.assertEqual(is_abelian(subalgebra(L, R)), c.ttype.kind is TypeKind.T11, str(t))
                # nonzero radical only next to a three-dimensional Levi factor
                self.assertEqual(L.dim - R.dim, 3, str(t))


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
