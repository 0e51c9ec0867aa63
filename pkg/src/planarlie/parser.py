# -*- coding: utf-8 -*-
"""Provides the parser for planar derivations and rational functions

"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import operator
import re
from fractions import Fraction

import ometa.runtime
import parsley
from pkg_resources import resource_filename

# The following imports are referenced by fully-qualified name in the
# planarlie grammar.
import planarlie
import planarlie.polyrat
from planarlie.exceptions import ParseError
from planarlie.polyrat import RatFunc
from planarlie.vectorfield import Derivation

_OPERATIONS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def combine(first, rest):
    """fold [(op, value), ...] into first, left to right"""
    for op, value in rest:
        first = _OPERATIONS[op](first, value)
    return first


def signed(sign, value):
    return -value if sign == -1 else value


def along(coefficient, basis):
    """coefficient * dx or coefficient * dy"""
    c = RatFunc.one() if coefficient is None else coefficient
    return Derivation(c, 0) if basis == "x" else Derivation(0, c)


class Parser(object):
    """Parses planar vector fields written ``a dx + b dy`` and the
    rational functions appearing as their coefficients.  The class wraps
    a Parsing Expression Grammar, exposing rules of that grammar as
    methods (prefixed with `parse_`) that parse an input string according
    to the rule.

    >>> pp = Parser()
    >>> D = pp.parse_derivation("y^2 dx - (x/(y+1)) dy")
    >>> str(D)
    'y^2 dx - x/(y + 1) dy'
    >>> [str(d) for d in pp.parse_derivation_list("dx; x dx; x^2 dx")]
    ['dx', 'x dx', 'x^2 dx']
    >>> str(pp.parse_ratfunc("(t^2 - 1)/(t + 1)"))
    'x - 1'

    Input the grammar does not accept raises ParseError with the
    position of the failure:

    >>> pp.parse_derivation("x dz")  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ...
    planarlie.exceptions.ParseError: x dz: char 3: ...

    As a convenience, `parse` is a shorthand for `parse_derivation`.

    """

    def __init__(self, grammar_fn=None, expose_all_rules=False):
        bindings = {"planarlie": planarlie, "Fraction": Fraction}
        if grammar_fn is None:
            grammar_fn = resource_filename(__name__, "_data/planarlie.pymeta")
        with open(grammar_fn, "r") as grammar_file:
            self._grammar = parsley.makeGrammar(grammar_file.read(), bindings)
        self._logger = logging.getLogger(__name__)
        self._expose_rule_functions(expose_all_rules)

    def parse(self, s):
        """parse the derivation `s`

        :param str s: a derivation such as "x dx - y dy"
        :rtype: Derivation

        """
        return self.parse_derivation(s)

    def _expose_rule_functions(self, expose_all_rules=False):
        """add parse functions for public grammar rules

        Defines a function for each public grammar rule, based on
        introspecting the grammar. For example, the `derivation_list`
        rule is exposed as a method `parse_derivation_list`.

        """

        def make_parse_rule_function(rule_name):
            "builds a wrapper function that parses a string with the specified rule"

            def rule_fxn(s):
                try:
                    return self._grammar(s).__getattr__(rule_name)()
                except ometa.runtime.ParseError as exc:
                    raise ParseError(
                        "{s}: char {exc.position}: {reason}".format(
                            s=s, exc=exc, reason=exc.formatReason()
                        )
                    )

            rule_fxn.__doc__ = "parse string s using `%s' rule" % rule_name
            return rule_fxn

        exposed_rule_re = re.compile(r"^(derivation|derivation_list|ratfunc)$")
        exposed_rules = [
            m.replace("rule_", "", 1)
            for m in dir(self._grammar._grammarClass)
            if m.startswith("rule_")
        ]
        if not expose_all_rules:
            exposed_rules = [
                rule_name for rule_name in exposed_rules if exposed_rule_re.match(rule_name)
            ]
        for rule_name in exposed_rules:
            att_name = "parse_" + rule_name
            rule_fxn = make_parse_rule_function(rule_name)
            self.__setattr__(att_name, rule_fxn)
        self._logger.debug(
            "Exposed {n} rules ({rules})".format(
                n=len(exposed_rules), rules=", ".join(exposed_rules)
            )
        )


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
