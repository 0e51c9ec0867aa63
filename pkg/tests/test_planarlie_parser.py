# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import re
import unittest
from fractions import Fraction

import pkg_resources
import pytest

import planarlie.parser
from planarlie.catalog import realize
from planarlie.exceptions import DivisionByZero, ParseError
from planarlie.polyrat import RatFunc
from planarlie.vectorfield import Derivation

x, y = RatFunc.variable("x"), RatFunc.variable("y")


def test_parser_derivations(parser):
    assert parser.parse("dx") == Derivation.dx()
    assert parser.parse("-dy") == Derivation(0, -1)
    assert parser.parse("y^2 dx - (x/(y+1)) dy") == Derivation(y * y, -x / (y + 1))
    assert parser.parse("3 x^2 y dx") == Derivation(3 * x * x * y, 0)
    assert parser.parse("x^-1 dx") == Derivation(1 / x, 0)
    assert parser.parse("  dx + dy  ") == Derivation(1, 1)
    assert parser.parse("dx - dx") == Derivation()
    assert parser.parse("t dy") == Derivation(0, x)


def test_parser_ratfuncs(parser):
    assert parser.parse_ratfunc("(t^2 - 1)/(t + 1)") == x - 1
    assert parser.parse_ratfunc("1/2*x") == x / 2
    assert parser.parse_ratfunc("2/3") == RatFunc.constant(Fraction(2, 3))
    assert parser.parse_ratfunc("-x + y") == y - x
    assert parser.parse_ratfunc("x/y/x") == 1 / y
    assert parser.parse_ratfunc("(x + y)^2") == x * x + 2 * x * y + y * y

    with pytest.raises(DivisionByZero):
        parser.parse_ratfunc("x/(y - y)")


def test_parser_sums_and_signs(parser):
    assert parser.parse_derivation("x^2 dx + x y dy") == Derivation(x * x, x * y)
    assert parser.parse_derivation("+dx - x dy") == Derivation(1, -x)
    assert parser.parse_derivation("-x dx + y dx - dy") == Derivation(y - x, -1)
    assert parser.parse_ratfunc("-(x - y) + 2") == y - x + 2
    assert parser.parse_ratfunc("+x - 1 - y") == x - y - 1


def test_parser_lists(parser):
    gens = parser.parse_derivation_list("dx; x dx ;x^2 dx")
    assert gens == [Derivation.dx(), Derivation(x, 0), Derivation(x * x, 0)]
    assert parser.parse_derivation_list("dy") == [Derivation.dy()]


@pytest.mark.parametrize(
    "text",
    [
        "x dz",
        "dx +",
        "x",
        "dx dy",
        "(x dx",
        "xy dx",
        "dx;",
        "",
    ],
)
def test_parser_rejects(parser, text):
    with pytest.raises(ParseError):
        parser.parse(text)


def test_parse_error_position(parser):
    with pytest.raises(ParseError, match=r"^x dz: char \d+"):
        parser.parse("x dz")


@pytest.mark.quick
class Test_ParserRules(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.pp = planarlie.parser.Parser()

    def test_exposed_rules(self):
        for name in ("parse_derivation", "parse_derivation_list", "parse_ratfunc"):
            self.assertTrue(callable(getattr(self.pp, name)))
        self.assertFalse(hasattr(self.pp, "parse_atom"))

    def test_expose_all_rules(self):
        pp = planarlie.parser.Parser(expose_all_rules=True)
        self.assertEqual(pp.parse_basis("dy"), "y")
        self.assertEqual(pp.parse_exponent("-3"), -3)
        self.assertEqual(pp.parse_addop(" +"), "add")
        self.assertEqual(pp.parse_addop("-"), "sub")
        self.assertEqual(pp.parse_sign("+"), 1)
        self.assertEqual(pp.parse_sign(" -"), -1)

    def test_grammar_rules_are_documented(self):
        """every rule in the grammar file is exposed when asked"""
        grammar_fn = pkg_resources.resource_filename("planarlie", "_data/planarlie.pymeta")
        rule_re = re.compile(r"^(\w+) =")
        with open(grammar_fn, "r") as f:
            rules = set(m.group(1) for m in map(rule_re.match, f) if m)
        pp = planarlie.parser.Parser(expose_all_rules=True)
        for rule in rules:
            self.assertTrue(hasattr(pp, "parse_" + rule), rule)

    def test_round_trip_of_realizations(self):
        """rendering then parsing a catalog realization gives identical coefficients"""
        from planarlie.catalog import standard_grid

        for t in standard_grid():
            for D in realize(t):
                self.assertEqual(self.pp.parse(str(D)), D, "{}: {}".format(t, D))


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
