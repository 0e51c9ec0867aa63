# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import io
import json
import os
import shlex
import unittest

import pytest

from planarlie.cli import main, parse_derivation, run
from planarlie.exceptions import ParseError
from planarlie.vectorfield import Derivation

#
# The golden script has one block per command:
#
#   $ <arguments as typed after planar-lie>
#   <expected stdout lines>
#   ! <error class name expected at the start of stderr>   (optional)
#   ? <exit status>
#
# Blocks are separated by blank lines; lines starting with # are comments.
#

_golden_fn = os.path.join(os.path.dirname(__file__), "data", "cli_golden.txt")


def _read_golden(fn):
    cases = []
    with open(fn, "r") as f:
        blocks = f.read().split("\n\n")
    for block in blocks:
        lines = [l for l in block.splitlines() if l and not l.startswith("#")]
        if not lines:
            continue
        case = {"argv": shlex.split(lines[0][2:]), "stdout": [], "error": None, "status": None}
        for l in lines[1:]:
            if l.startswith("! "):
                case["error"] = l[2:]
            elif l.startswith("? "):
                case["status"] = int(l[2:])
            else:
                case["stdout"].append(l)
        cases.append(case)
    return cases


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(argv, stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


@pytest.mark.cli
class Test_CliGolden(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.cases = _read_golden(_golden_fn)

    def test_script_coverage(self):
        self.assertGreaterEqual(len(self.cases), 20)
        commands = set(c["argv"][0] for c in self.cases)
        for name in ("bracket", "apply", "closure", "classify", "series", "killing", "radical",
                     "ideals", "rmul", "catalog", "decompose", "obstruct"):
            self.assertIn(name, commands)
        self.assertEqual(set(c["status"] for c in self.cases), {0, 1, 2})

    def test_golden(self):
        failures = []
        for case in self.cases:
            status, out, err = _run(case["argv"])
            expected = "".join(l + "\n" for l in case["stdout"])
            error = err.split(":", 1)[0] if err else None
            if (status, out, error) != (case["status"], expected, case["error"]):
                failures.append(pprint_case(case, status, out, err))
        self.assertEqual(failures, [])

    def test_deterministic(self):
        for case in self.cases:
            self.assertEqual(_run(case["argv"]), _run(case["argv"]))


def pprint_case(case, status, out, err):
    return "{argv}: status {status}, stdout {out!r}, stderr {err!r}".format(
        argv=" ".join(case["argv"]), status=status, out=out, err=err)


@pytest.mark.cli
@pytest.mark.quick
class Test_Cli(unittest.TestCase):
    def test_parse_derivation(self):
        self.assertEqual(parse_derivation("dx"), Derivation.dx())
        with self.assertRaises(ParseError):
            parse_derivation("x dz")

    def test_json_is_parseable(self):
        status, out, _ = _run(["classify", "dx; y dx; dy", "--json"])
        self.assertEqual(status, 0)
        doc = json.loads(out)
        self.assertEqual(doc["type"], "T3")
        self.assertEqual(doc["params"], {"n": 1, "lambda": 0})

    def test_error_stream(self):
        status, out, err = _run(["closure", "dx; x^3 dx", "--cap", "10"])
        self.assertEqual((status, out), (2, ""))
        self.assertTrue(err.startswith("DimensionCapExceeded: "))

    def test_main(self):
        self.assertEqual(main(["series", "dx; x dx"]), 0)
        self.assertEqual(main(["series", "dx; x dx", "--kind", "upper"]), 1)


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
