# -*- coding: utf-8 -*-
"""The twelve types of finite-dimensional Lie algebras of planar
rational vector fields

Classes:

  * :class:`TheoremType` -- a type tag (T1 ... T12) with its parameters
  * :class:`VerificationReport` -- outcome of matching a realization to its table

Every type has an abstract structure-constant table over named basis
elements (``e0 ... en, f, g, h``, ``e, f, h, v0 ... vm``, ...) and an
explicit realization by derivations, listed in the same order as the
table's names.

>>> t = TheoremType.parse("T4", ["n=1", "beta=1", "m=0,2"])
>>> str(t)
'T4{n=1, beta=1, m=(0,2)}'
>>> T = abstract_table(t)
>>> T.names
('e0', 'e1', 'f')
>>> T.bracket_basis(2, 1)
{1: Fraction(3, 1)}

"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
from fractions import Fraction
from math import factorial

import attr

from planarlie.enums import TypeKind, ValidationLevel
from planarlie.exceptions import BadParameters, NoMatchWithinFamily, UsageError
from planarlie.linalg import QMatrix, solve
from planarlie.polyrat import RatFunc, format_rational
from planarlie.ratlemma import affine_pattern, exponent_pattern
from planarlie.structure import close, from_table, to_json
from planarlie.vectorfield import Derivation

_logger = logging.getLogger(__name__)

PARAMETERS = {
    TypeKind.T1: ("n",),
    TypeKind.T2: ("n",),
    TypeKind.T3: ("n", "lam"),
    TypeKind.T4: ("n", "beta", "m"),
    TypeKind.T5: ("n", "beta", "gamma"),
    TypeKind.T6: ("n",),
    TypeKind.T7: ("n", "beta", "m"),
    TypeKind.T8: ("n", "alpha", "beta"),
    TypeKind.T9: ("variant",),
    TypeKind.T10: (),
    TypeKind.T11: ("m",),
    TypeKind.T12: ("m",),
}

_DISPLAY = {"lam": "lambda"}
_FROM_DISPLAY = {"lambda": "lam"}

SL2 = "sl2"
SL2_SL2 = "sl2+sl2"

# names of complement elements, tried first when fixing free scalings
COMPLEMENT_NAMES = ("f", "g", "h", "z")


def _format_value(v):
    if isinstance(v, tuple):
        return "(" + ",".join(str(i) for i in v) + ")"
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def _json_value(v):
    if isinstance(v, tuple):
        return list(v)
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else format_rational(v)
    return v


@attr.s(slots=True, frozen=True, repr=False, eq=True, hash=True)
class TheoremType(object):
    kind = attr.ib()
    n = attr.ib(default=None)
    lam = attr.ib(default=None)
    beta = attr.ib(default=None)
    m = attr.ib(default=None)
    gamma = attr.ib(default=None)
    alpha = attr.ib(default=None)
    variant = attr.ib(default=None)

    @classmethod
    def make(cls, kind, **params):
        """build and validate; rational parameters become Fractions"""
        if not isinstance(kind, TypeKind):
            try:
                kind = TypeKind[str(kind)]
            except KeyError:
                raise BadParameters("unknown type {!r}".format(kind))
        allowed = PARAMETERS[kind]
        for k in params:
            if k not in allowed:
                raise BadParameters("{kind} has no parameter {k!r}".format(kind=kind.name, k=k))
        for k in ("beta", "gamma", "alpha"):
            if params.get(k) is not None:
                params[k] = Fraction(params[k])
        if params.get("m") is not None and not isinstance(params["m"], int):
            params["m"] = tuple(int(i) for i in params["m"])
        if kind is TypeKind.T5 and params.get("gamma") is None:
            params["gamma"] = Fraction(0)
        t = cls(kind, **params)
        t.check()
        return t

    @classmethod
    def parse(cls, kind, assignments):
        """from command-line style `key=value` strings, e.g. ["n=1", "m=0,2"]"""
        params = {}
        for a in assignments:
            if "=" not in a:
                raise BadParameters("expected key=value, got {!r}".format(a))
            k, v = a.split("=", 1)
            k = _FROM_DISPLAY.get(k.strip(), k.strip())
            v = v.strip()
            try:
                if k == "variant":
                    params[k] = v
                elif k == "m" and kind in ("T4", "T7", TypeKind.T4, TypeKind.T7):
                    params[k] = tuple(int(i) for i in v.strip("()").split(",") if i.strip())
                elif k in ("n", "m", "lam"):
                    params[k] = int(v)
                else:
                    params[k] = Fraction(v)
            except ValueError:
                raise BadParameters("bad value for {k}: {v!r}".format(k=k, v=v))
        return cls.make(kind, **params)

    @property
    def index(self):
        return self.kind.value

    @property
    def params(self):
        return {k: getattr(self, k) for k in PARAMETERS[self.kind]}

    def params_json(self):
        return {_DISPLAY.get(k, k): _json_value(v) for k, v in self.params.items()}

    @property
    def derived_gamma(self):
        """gamma of type 8, forced by the Jacobi identity"""
        assert self.kind is TypeKind.T8
        return self.alpha * (self.beta + self.n + 1)

    def validate(self):
        k, p = self.kind, self.params
        missing = [name for name, v in p.items() if v is None]
        if missing:
            return (ValidationLevel.ERROR, "missing parameters: " + ", ".join(missing))
        n = p.get("n")
        if n is not None:
            low = 1 if k in (TypeKind.T1, TypeKind.T2, TypeKind.T4, TypeKind.T7) else 0
            if n < low:
                return (ValidationLevel.ERROR, "{k} needs n >= {low}".format(k=k.name, low=low))
        if k is TypeKind.T3 and self.lam not in (0, 1):
            return (ValidationLevel.ERROR, "lambda must be 0 or 1")
        if k in (TypeKind.T4, TypeKind.T7):
            if not self.beta:
                return (ValidationLevel.ERROR, "beta must be nonzero")
            if len(self.m) != n + 1:
                return (ValidationLevel.ERROR, "m needs n+1 = {} entries".format(n + 1))
            if len(set(self.m)) != len(self.m):
                return (ValidationLevel.ERROR, "m entries must be distinct")
        if k is TypeKind.T9 and self.variant not in (SL2, SL2_SL2):
            return (ValidationLevel.ERROR, "variant must be sl2 or sl2+sl2")
        if k in (TypeKind.T11, TypeKind.T12) and self.m < 0:
            return (ValidationLevel.ERROR, "m must be >= 0")
        return (ValidationLevel.VALID, None)

    def check(self):
        level, msg = self.validate()
        if level == ValidationLevel.ERROR:
            raise BadParameters("{t}: {msg}".format(t=self.kind.name, msg=msg))
        return self

    def dimension(self):
        k = self.kind
        if k is TypeKind.T1:
            return self.n
        if k is TypeKind.T2:
            return self.n + 1
        if k in (TypeKind.T3, TypeKind.T4):
            return self.n + 2
        if k in (TypeKind.T5, TypeKind.T6, TypeKind.T7):
            return self.n + 3
        if k is TypeKind.T8:
            return self.n + 4
        if k is TypeKind.T9:
            return 3 if self.variant == SL2 else 6
        if k is TypeKind.T10:
            return 8
        if k is TypeKind.T11:
            return self.m + 4
        return self.m + 5

    def names(self):
        k = self.kind
        if k in (TypeKind.T1, TypeKind.T2):
            es = ["e{}".format(i) for i in range(1, self.n + 1)]
            return tuple(es + (["f"] if k is TypeKind.T2 else []))
        if k in (TypeKind.T3, TypeKind.T4, TypeKind.T5, TypeKind.T6, TypeKind.T7, TypeKind.T8):
            es = ["e{}".format(i) for i in range(self.n + 1)]
            extra = {TypeKind.T3: ["f"], TypeKind.T4: ["f"], TypeKind.T8: ["f", "g", "h"]}
            return tuple(es + extra.get(k, ["f", "g"]))
        if k is TypeKind.T9:
            if self.variant == SL2:
                return ("e", "f", "h")
            return ("e1", "f1", "h1", "e2", "f2", "h2")
        if k is TypeKind.T10:
            return SL3_NAMES
        vs = ["v{}".format(i) for i in range(self.m + 1)]
        return tuple(["e", "f", "h"] + (["z"] if k is TypeKind.T12 else []) + vs)

    def canonical(self):
        """the normal form of the parameters within the isomorphism class of the form"""
        k = self.kind
        if k is TypeKind.T4:
            beta, m, _ = scaling_canonical_form([1 + self.beta * mi for mi in self.m])
            return TheoremType.make(k, n=self.n, beta=beta, m=m)
        if k is TypeKind.T5:
            beta, gamma = self.beta, 0
            if self.n == 0 and abs(beta) > 1:
                # e0 and f swap roles, g rescaled by 1/beta
                beta = 1 / beta
            if beta == self.n + 1 and self.gamma:
                gamma = 1
            return TheoremType.make(k, n=self.n, beta=beta, gamma=gamma)
        if k is TypeKind.T7:
            m, _, _ = affine_canonical_form([1 + self.beta * mi for mi in self.m])
            return TheoremType.make(k, n=self.n, beta=1, m=m)
        if k is TypeKind.T8:
            return TheoremType.make(k, n=self.n, alpha=0, beta=0)
        return self

    def format(self, conf=None):
        return "{k}{{{p}}}".format(
            k=self.kind.name,
            p=", ".join("{0}={1}".format(_DISPLAY.get(k, k), _format_value(v))
                        for k, v in self.params.items()),
        )

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "{0}({1})".format(self.__class__.__name__, self.format())


############################################################################
# normal forms of eigenvalue patterns


def scaling_canonical_form(eigenvalues):
    """(beta, m, order) for eigenvalues c (1 + beta m_i), least over references

    order lists eigenvalue indices in the order of the returned m:
    the reference first, then by ascending m.
    """
    best = None
    for r, v in enumerate(eigenvalues):
        if not v:
            continue
        beta, m = exponent_pattern(eigenvalues, r)
        order = [r] + sorted((i for i in range(len(m)) if i != r), key=lambda i: m[i])
        key = (beta, tuple(m[i] for i in order))
        if best is None or key < best[0]:
            best = (key, order)
    if best is None:
        raise UsageError("all eigenvalues are zero")
    (beta, m), order = best
    return beta, m, order


def affine_canonical_form(values):
    """(m, order, (reference, orientation, delta)) for values a + b m_i with gcd(m) = 1"""
    best = None
    for r in range(len(values)):
        for orientation in (1, -1):
            delta, m = affine_pattern(values, r, orientation)
            order = [r] + sorted((i for i in range(len(m)) if i != r), key=lambda i: m[i])
            key = tuple(m[i] for i in order)
            if best is None or key < best[0]:
                best = (key, order, (r, orientation, delta))
    return best


############################################################################
# abstract tables


def _e(i):
    return "e{}".format(i)


SL3_NAMES = ("e01", "e02", "e12", "e10", "e20", "e21", "h1", "h2")


def _matrix_unit(i, j):
    return [[Fraction(int((a, b) == (i, j))) for b in range(3)] for a in range(3)]


def _sl3_matrices():
    units = {"e{}{}".format(i, j): _matrix_unit(i, j) for i in range(3) for j in range(3) if i != j}
    diag = [_matrix_unit(i, i) for i in range(3)]
    units["h1"] = [[a - b for a, b in zip(r0, r1)] for r0, r1 in zip(diag[0], diag[1])]
    units["h2"] = [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(diag[1], diag[2])]
    return [QMatrix.from_rows(units[name]) for name in SL3_NAMES]


def table_from_matrices(names, matrices):
    """structure constants of a matrix Lie algebra spanned by `matrices`"""
    flat = QMatrix.from_columns([list(m.entries) for m in matrices])
    relations = {}
    for i in range(len(matrices)):
        for j in range(i + 1, len(matrices)):
            c = matrices[i] * matrices[j] - matrices[j] * matrices[i]
            coords = solve(flat, list(c.entries))
            relations[(names[i], names[j])] = {names[k]: v for k, v in enumerate(coords) if v}
    return from_table(names, relations)


def _relations(t):
    k, n = t.kind, t.n
    rel = {}
    if k is TypeKind.T1:
        pass
    elif k is TypeKind.T2:
        for i in range(1, n + 1):
            rel[("f", _e(i))] = {_e(i): 1}
    elif k is TypeKind.T3:
        for i in range(n + 1):
            rhs = {_e(i): t.lam} if t.lam else {}
            if i:
                rhs[_e(i - 1)] = 1
            rel[("f", _e(i))] = rhs
    elif k is TypeKind.T4:
        for i in range(n + 1):
            rel[("f", _e(i))] = {_e(i): 1 + t.beta * t.m[i]}
    elif k is TypeKind.T5:
        for i in range(n + 1):
            if i:
                rel[("f", _e(i))] = {_e(i - 1): 1}
            rel[("g", _e(i))] = {_e(i): i - t.beta}
        rel[("f", "g")] = {"f": 1, _e(n): -t.gamma}
    elif k is TypeKind.T6:
        for i in range(n + 1):
            rel[("f", _e(i))] = {_e(i): 1}
            if i:
                rel[("g", _e(i))] = {_e(i - 1): 1}
    elif k is TypeKind.T7:
        for i in range(n + 1):
            rel[("f", _e(i))] = {_e(i): 1}
            rel[("g", _e(i))] = {_e(i): 1 + t.beta * t.m[i]}
    elif k is TypeKind.T8:
        for i in range(n + 1):
            if i:
                rel[("f", _e(i))] = {_e(i - 1): 1}
            rel[("g", _e(i))] = {_e(i): 1}
            rel[("h", _e(i))] = {_e(i): -(t.beta + i)}
        rel[("g", "f")] = {_e(n): t.alpha}
        rel[("h", "f")] = {"f": 1, _e(n): -t.derived_gamma}
    elif k is TypeKind.T9:
        suffixes = [""] if t.variant == SL2 else ["1", "2"]
        for s in suffixes:
            e, f, h = "e" + s, "f" + s, "h" + s
            rel[(h, e)] = {e: 2}
            rel[(h, f)] = {f: -2}
            rel[(e, f)] = {h: 1}
    elif k in (TypeKind.T11, TypeKind.T12):
        m = t.m
        rel[("h", "e")] = {"e": 2}
        rel[("h", "f")] = {"f": -2}
        rel[("e", "f")] = {"h": 1}
        for j in range(m + 1):
            v = "v{}".format(j)
            rel[("h", v)] = {v: m - 2 * j}
            if j:
                rel[("e", v)] = {"v{}".format(j - 1): m - j + 1}
            if j < m:
                rel[("f", v)] = {"v{}".format(j + 1): j + 1}
            if k is TypeKind.T12:
                rel[("z", v)] = {v: 1}
    return rel


def abstract_table(t):
    """the structure constants of type t over its named basis"""
    if not isinstance(t, TheoremType):
        raise BadParameters("expected a TheoremType, got {!r}".format(t))
    t.check()
    if t.kind is TypeKind.T10:
        return table_from_matrices(SL3_NAMES, _sl3_matrices())
    rel = _relations(t)
    clean = {}
    for pair, rhs in rel.items():
        rhs = {c: Fraction(v) for c, v in rhs.items() if v}
        if rhs:
            clean[pair] = rhs
    return from_table(t.names(), clean)


############################################################################
# realizations


def _x():
    return RatFunc.variable("x")


def _y():
    return RatFunc.variable("y")


def _dx(a=1):
    return Derivation(a, 0)


def _dy(a=1):
    return Derivation(0, a)


def _euler(a=1):
    return Derivation(a * _x(), a * _y())


def _divided_powers(n):
    y = _y()
    return [_dx(y ** i / factorial(i)) for i in range(n + 1)]


def _sl2_in(var):
    v = _x() if var == "x" else _y()
    d = _dx if var == "x" else _dy
    return [d(), d(-v * v), d(-2 * v)]


def realize(t):
    """derivations realizing type t, listed in the order of its table names"""
    t = t.check()
    k, n = t.kind, t.n
    x, y = _x(), _y()
    if k is TypeKind.T1:
        return [_dx(y ** (i - 1)) for i in range(1, n + 1)]
    if k is TypeKind.T2:
        return [_dx(y ** (i - 1)) for i in range(1, n + 1)] + [_dx(-x)]
    if k is TypeKind.T3:
        f = _dy() if t.lam == 0 else Derivation(-x, 1)
        return _divided_powers(n) + [f]
    if k is TypeKind.T4:
        return [_dx(y ** mi) for mi in t.m] + [Derivation(-x, t.beta * y)]
    if k is TypeKind.T5:
        g = Derivation(t.beta * x + t.gamma * y ** (n + 1), y)
        return _divided_powers(n) + [_dy(), g]
    if k is TypeKind.T6:
        return _divided_powers(n) + [_dx(-x), _dy()]
    if k is TypeKind.T7:
        return [_dx(y ** mi) for mi in t.m] + [_dx(-x), Derivation(-x, t.beta * y)]
    if k is TypeKind.T8:
        top = y ** (n + 1) / factorial(n + 1)
        g = _dx(-x - t.alpha * top)
        h = Derivation(t.beta * x + t.derived_gamma * top, -y)
        return _divided_powers(n) + [_dy(), g, h]
    if k is TypeKind.T9:
        if t.variant == SL2:
            return _sl2_in("x")
        return _sl2_in("x") + _sl2_in("y")
    if k is TypeKind.T10:
        # projective action of the matrix units, in SL3_NAMES order
        return [
            _euler(-x),
            _euler(-y),
            _dx(y),
            _dx(),
            _dy(),
            _dy(x),
            Derivation(-2 * x, -y),
            Derivation(x, -y),
        ]
    if k is TypeKind.T11 or t.m:
        gl = [_dy(x), _dx(y), Derivation(x, -y)]
        vs = [_euler(x ** (t.m - j) * y ** j) for j in range(t.m + 1)]
        return gl + ([_euler()] if k is TypeKind.T12 else []) + vs
    # type 12 with m = 0: the Euler field would act trivially
    return _sl2_in("x") + [_dy(-y), _dy()]


############################################################################
# matching realizations against tables


def _equations(A, B):
    eqs = []
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            a, b = A.bracket_basis(i, j), B.bracket_basis(i, j)
            if set(a) != set(b):
                return None
            for k in a:
                exps = {i: 1, j: 1}
                exps[k] = exps.get(k, 0) - 1
                exps = {v: e for v, e in exps.items() if e}
                eqs.append((exps, b[k] / a[k]))
    return eqs


def _propagate(assign, eqs):
    changed = True
    while changed:
        changed = False
        for exps, ratio in eqs:
            unknown = [v for v in exps if v not in assign]
            known = Fraction(1)
            for v, e in exps.items():
                if v in assign:
                    known *= assign[v] ** e
            if not unknown:
                if known != ratio:
                    return False
            elif len(unknown) == 1:
                u = unknown[0]
                val = ratio / known
                assign[u] = val if exps[u] == 1 else 1 / val
                changed = True
    return True


def diagonal_adjustment(A, B, prefer=()):
    """scalings d with b_i -> d_i b_i carrying the constants of A onto those of B

    Returns {index: d_i} or None.  Unconstrained scalings are fixed by
    trying +1 and -1, indices in `prefer` first.
    """
    if A.dim != B.dim:
        return None
    eqs = _equations(A, B)
    if eqs is None:
        return None
    constrained = sorted({v for exps, _ in eqs for v in exps},
                         key=lambda v: (v not in prefer, v))

    def search(assign):
        if not _propagate(assign, eqs):
            return None
        free = [v for v in constrained if v not in assign]
        if not free:
            return assign
        for val in (1, -1):
            trial = dict(assign)
            trial[free[0]] = Fraction(val)
            found = search(trial)
            if found is not None:
                return found
        return None

    found = search({})
    if found is None:
        return None
    return {i: found.get(i, Fraction(1)) for i in range(A.dim)}


def preferred_indices(names):
    return [i for i, name in enumerate(names) if name in COMPLEMENT_NAMES]


@attr.s(slots=True, frozen=True, repr=False)
class VerificationReport(object):
    ttype = attr.ib()
    matched = attr.ib()
    adjustment = attr.ib(default=attr.Factory(dict))
    realized = attr.ib(default=None)
    expected = attr.ib(default=None)

    def __bool__(self):
        return bool(self.matched)

    __nonzero__ = __bool__

    def as_dict(self):
        return {
            "type": self.ttype.kind.name,
            "params": self.ttype.params_json(),
            "matched": self.matched,
            "adjustment": {k: format_rational(v) for k, v in self.adjustment.items()},
        }

    def __repr__(self):
        return "{0}(ttype={1}, matched={2}, adjustment={3})".format(
            self.__class__.__name__, self.ttype, self.matched,
            {k: format_rational(v) for k, v in self.adjustment.items()})


def verify_realization(t):
    """match the structure constants of realize(t) to abstract_table(t)

    >>> verify_realization(TheoremType.make("T3", n=1, lam=0)).adjustment
    {}
    """
    t = t.check()
    gens = realize(t)
    L = close(gens)
    T = abstract_table(t)
    names = t.names()
    realized, expected = to_json(L), to_json(T)
    if L.dim != t.dimension() or list(L.basis) != list(gens):
        raise NoMatchWithinFamily(
            "{t}: realization spans dimension {d}, expected {e}".format(
                t=t, d=L.dim, e=t.dimension()),
            realized=realized, expected=expected)
    scaling = diagonal_adjustment(L, T, prefer=preferred_indices(names))
    if scaling is None:
        raise NoMatchWithinFamily(
            "{t}: no diagonal rescaling matches the table".format(t=t),
            realized=realized, expected=expected)
    adjustment = {names[i]: d for i, d in scaling.items() if d != 1}
    _logger.debug("verified {t} with adjustment {a}".format(t=t, a=adjustment))
    return VerificationReport(t, True, adjustment, realized, expected)


############################################################################
# standard parameter grid


_BETAS = (Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2))
_SPREAD = (-3, 3, -1, 1, 2)


def _m_patterns(n):
    return [tuple(range(n + 1)), _SPREAD[: n + 1]]


def standard_grid():
    """the parameter grid exercised by the catalog suites"""
    grid = []
    for n in range(1, 5):
        grid.append(TheoremType.make("T1", n=n))
    for n in range(1, 5):
        grid.append(TheoremType.make("T2", n=n))
    for n in range(5):
        for lam in (0, 1):
            grid.append(TheoremType.make("T3", n=n, lam=lam))
    for kind in ("T4", "T7"):
        for n in range(1, 5):
            for beta in _BETAS:
                for m in _m_patterns(n):
                    grid.append(TheoremType.make(kind, n=n, beta=beta, m=m))
    for n in range(5):
        for beta in _BETAS:
            for gamma in (0, 1):
                grid.append(TheoremType.make("T5", n=n, beta=beta, gamma=gamma))
    for n in range(5):
        grid.append(TheoremType.make("T6", n=n))
    for n in range(5):
        for alpha in (0, 1, -1):
            for beta in _BETAS:
                grid.append(TheoremType.make("T8", n=n, alpha=alpha, beta=beta))
    grid.append(TheoremType.make("T9", variant=SL2))
    grid.append(TheoremType.make("T9", variant=SL2_SL2))
    grid.append(TheoremType.make("T10"))
    for kind in ("T11", "T12"):
        for m in range(4):
            grid.append(TheoremType.make(kind, m=m))
    return grid


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
