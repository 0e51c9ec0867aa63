# -*- coding: utf-8 -*-
"""Command-line front end for planar-lie

Usage::

  planar-lie bracket "dy - x dx" "dx"
  planar-lie closure "dx; x dx; x^2 dx" --json
  planar-lie classify "dx; y dx; dy"
  planar-lie catalog T4 n=1 beta=1 m=0,2 --verify

Generator lists are one argument, separated by ``;``.  Exit status is
0 on success, 1 for syntax and usage errors and 2 for every other
planarlie error; on failure the error class name and message go to
stderr.

"""

from __future__ import absolute_import, division, print_function, unicode_literals

import argparse
import json
import logging
import os
import sys

import planarlie
from planarlie.catalog import TheoremType, abstract_table, realize, verify_realization
from planarlie.classify import classify
from planarlie.config import global_config
from planarlie.exceptions import ParseError, PlanarLieError, UsageError
from planarlie.parser import Parser
from planarlie.polyrat import format_rational
from planarlie.ratlemma import log_derivative_obstruction, power_decompose
from planarlie.structure import (
    close,
    killing_form,
    one_dim_ideals,
    r_multiple_ideal,
    radical,
    series,
    to_json,
)
from planarlie.vectorfield import apply, bracket

_logger = logging.getLogger(__name__)

_parser = None


def _grammar():
    global _parser
    if _parser is None:
        _parser = Parser()
    return _parser


def parse_derivation(text):
    return _grammar().parse_derivation(text)


def parse_derivation_list(text):
    return _grammar().parse_derivation_list(text)


def parse_ratfunc(text):
    return _grammar().parse_ratfunc(text)


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting with status 2"""

    def error(self, message):
        raise UsageError(message)


############################################################################
# rendering helpers


def _combination(coords, names):
    """text of sum_k c_k names[k], e.g. "-b0 + 3/2 b2"; "0" if empty"""
    out = []
    for k in sorted(coords):
        c = coords[k]
        if not c:
            continue
        body = names[k] if abs(c) == 1 else "{0} {1}".format(format_rational(abs(c)), names[k])
        if not out:
            out.append("-" + body if c < 0 else body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out) if out else "0"


def _algebra_lines(L):
    lines = ["dim {}".format(L.dim)]
    lines += ["{0} = {1}".format(n, b) for n, b in zip(L.names, L.basis)]
    for (i, j) in sorted(L.sc):
        lines.append("[{0}, {1}] = {2}".format(
            L.names[i], L.names[j], _combination(L.sc[(i, j)], L.names)))
    return lines


def _subspace_lines(S, prefix):
    lines = ["dim {}".format(S.dim)]
    lines += ["{0}{1} = {2}".format(prefix, i, d) for i, d in enumerate(S.elements())]
    return lines


def _closure(args):
    return close(parse_derivation_list(args.gens), dim_cap=args.cap)


############################################################################
# subcommands; each returns (text lines, json document)


def _cmd_bracket(args):
    D = bracket(parse_derivation(args.D), parse_derivation(args.E))
    return [str(D)], {"bracket": str(D)}


def _cmd_apply(args):
    value = apply(parse_derivation(args.D), parse_ratfunc(args.f))
    return [str(value)], {"value": str(value)}


def _cmd_closure(args):
    L = _closure(args)
    return _algebra_lines(L), to_json(L)


def _cmd_classify(args):
    c = classify(_closure(args))
    lines = [str(c.ttype)]
    lines += ["{0} = {1}".format(n, d) for n, d in zip(c.names, c.fields())]
    lines += ["adjusted {0} by {1}".format(n, format_rational(v))
              for n, v in sorted(c.adjustment.items())]
    return lines, c.report()


def _cmd_series(args):
    dims = [S.dim for S in series(_closure(args), args.kind)]
    return (["{0}: {1}".format(args.kind, " ".join(str(d) for d in dims))],
            {"kind": args.kind, "dims": dims})


def _cmd_killing(args):
    rows = [[format_rational(c) for c in row] for row in killing_form(_closure(args)).to_rows()]
    return [" ".join(row) for row in rows], {"killing": rows}


def _cmd_radical(args):
    R = radical(_closure(args))
    return _subspace_lines(R, "r"), {"dim": R.dim, "basis": [str(d) for d in R.elements()]}


def _cmd_ideals(args):
    lines, all_lines = one_dim_ideals(_closure(args))
    elements = [str(S.elements()[0]) for S in lines]
    text = (["every line is an ideal"] if all_lines else []) + elements
    return text, {"lines": elements, "all_lines": all_lines}


def _cmd_rmul(args):
    I = r_multiple_ideal(_closure(args), parse_derivation(args.D1))
    return _subspace_lines(I, "i"), {"dim": I.dim, "basis": [str(d) for d in I.elements()]}


def _cmd_catalog(args):
    t = TheoremType.parse(args.type, args.params)
    if args.verify:
        report = verify_realization(t)
        lines = ["verified {}".format(t)]
        lines += ["adjusted {0} by {1}".format(n, format_rational(v))
                  for n, v in sorted(report.adjustment.items())]
        return lines, report.as_dict()
    lines = [str(t)]
    lines += ["{0} = {1}".format(n, d) for n, d in zip(t.names(), realize(t))]
    doc = to_json(abstract_table(t))
    doc.update({"type": t.kind.name, "params": t.params_json()})
    return lines, doc


def _cmd_decompose(args):
    r = power_decompose(parse_ratfunc(args.phi), parse_ratfunc(args.psi))
    d = r.as_dict()
    return ["{0} = {1}".format(k, d[k]) for k in ("theta", "s", "t", "c1", "c2", "mu")], d


def _cmd_obstruct(args):
    p, k = log_derivative_obstruction(parse_ratfunc(args.phi))
    return ["p = {}".format(p), "ord = {}".format(k)], {"p": str(p), "ord": k}


############################################################################
# argument parsing and dispatch


def _parse_args(argv):
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="render a JSON document")
    capped = _ArgumentParser(add_help=False)
    capped.add_argument("gens", help="generators separated by ';'")
    capped.add_argument("--cap", type=int, default=None, help="closure dimension cap")

    parser = _ArgumentParser(
        prog="planar-lie",
        description="Lie algebras of planar rational vector fields",
    )
    parser.add_argument("--version", action="version", version=str(planarlie.__version__))
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("bracket", parents=[common], help="[D, E]")
    p.add_argument("D")
    p.add_argument("E")
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("apply", parents=[common], help="D(f)")
    p.add_argument("D")
    p.add_argument("f")
    p.set_defaults(func=_cmd_apply)

    for name, func, helptext in (
        ("closure", _cmd_closure, "basis and structure constants of the generated algebra"),
        ("classify", _cmd_classify, "catalog type with a witness basis"),
        ("killing", _cmd_killing, "Killing form matrix"),
        ("radical", _cmd_radical, "solvable radical"),
        ("ideals", _cmd_ideals, "one-dimensional ideals"),
    ):
        p = sub.add_parser(name, parents=[common, capped], help=helptext)
        p.set_defaults(func=func)

    p = sub.add_parser("series", parents=[common, capped], help="derived or lower central series")
    p.add_argument("--kind", choices=("derived", "lower_central"), default="derived")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("rmul", parents=[common, capped], help="R-multiples of D1 in the algebra")
    p.add_argument("D1")
    p.set_defaults(func=_cmd_rmul)

    p = sub.add_parser("catalog", parents=[common], help="realization of a catalog type")
    p.add_argument("type", help="T1 ... T12")
    p.add_argument("params", nargs="*", help="key=value, e.g. n=1 beta=1/2 m=0,2")
    p.add_argument("--verify", action="store_true", help="check the realization against its table")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("decompose", parents=[common], help="phi = c1 theta^s, psi = c2 theta^t")
    p.add_argument("phi")
    p.add_argument("psi")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("obstruct", parents=[common], help="factor certifying phi'/phi has no rational integral")
    p.add_argument("phi")
    p.set_defaults(func=_cmd_obstruct)

    args = parser.parse_args(argv)
    if getattr(args, "cap", "absent") is None:
        args.cap = global_config.cli.default_cap
    return args


def run(argv, stdout=None, stderr=None):
    """execute one command; returns the exit status"""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = _parse_args(argv)
        lines, doc = args.func(args)
    except (ParseError, UsageError) as exc:
        stderr.write("{0}: {1}\n".format(type(exc).__name__, exc))
        return 1
    except PlanarLieError as exc:
        stderr.write("{0}: {1}\n".format(type(exc).__name__, exc))
        return 2
    if args.json:
        stdout.write(json.dumps(doc, sort_keys=True, indent=global_config.formatting.json_indent))
        stdout.write("\n")
    else:
        for line in lines:
            stdout.write(line + "\n")
    return 0


def main(argv=None):
    logging.basicConfig(level=os.environ.get("PLANARLIE_LOGGING_LEVEL", "WARNING"))
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    raise SystemExit(main())
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
