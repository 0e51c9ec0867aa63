# -*- coding: utf-8 -*-
"""Finite-dimensional Lie algebras of planar derivations

Classes:

  * :class:`LieAlgebra` -- a basis (optional) with exact structure constants
  * :class:`Subspace` -- a subspace of a LieAlgebra in coordinates
  * :class:`Predicates` -- abelian/solvable/nilpotent/perfect summary

A LieAlgebra built by :func:`close` carries its basis of derivations
and can locate any derivation in its span (:func:`coordinates`).
Algebras given only by structure constants (abstract tables,
quotients) have ``basis = None``.

Structure constants are stored as ``{(i, j): {k: c}}`` for ``i < j``
with only nonzero entries, meaning ``[b_i, b_j] = sum_k c b_k``.

>>> from planarlie.vectorfield import Derivation
>>> from planarlie.polyrat import RatFunc
>>> x, y = RatFunc.variable("x"), RatFunc.variable("y")
>>> L = close([Derivation(0, x), Derivation(y, 0)])
>>> L.dim
3
>>> str(L.basis[2])
'x dx - y dy'

"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
from fractions import Fraction

import attr

from planarlie.config import global_config
from planarlie.enums import SeriesKind
from planarlie.exceptions import (
    DimensionCapExceeded,
    InternalError,
    NonRationalSpectrum,
    NotInSpan,
    NotMember,
    UsageError,
)
from planarlie.linalg import (
    QMatrix,
    inverse,
    kernel,
    rational_eigen,
    row_basis,
    solve,
)
from planarlie.polyrat import RING, format_rational, to_fraction, to_ground
from planarlie.vectorfield import Derivation, bracket, cross

_logger = logging.getLogger(__name__)


############################################################################
# span of derivations over the rationals


def _lead(px, py):
    if px:
        return (1, px.LM), px.LC
    if py:
        return (0, py.LM), py.LC
    return None, None


class _SpanTracker(object):
    """incremental echelon form of derivations over the rationals

    Every derivation is lifted to a pair of polynomials by multiplying
    with the common denominator of everything seen so far.  Rows have
    distinct leading keys, so reduction by leading terms decides
    membership exactly.  Each row remembers its coordinates in terms of
    the elements added.
    """

    def __init__(self):
        self.denominator = RING.one
        self.rows = {}

    def _denominator_with(self, D):
        den = self.denominator
        for c in D.coefficients:
            if not c.is_zero and not c.den.is_constant:
                den = den.lcm(c.den.p).monic()
        return den

    def _rows_for(self, den):
        if den == self.denominator:
            return self.rows
        q = den.exquo(self.denominator)
        rows = {}
        for px, py, coords in self.rows.values():
            px, py = px * q, py * q
            rows[_lead(px, py)[0]] = (px, py, coords)
        return rows

    @staticmethod
    def _lift(D, den):
        return tuple(c.num.p * den.exquo(c.den.p) for c in D.coefficients)

    @staticmethod
    def _reduce(px, py, rows):
        coords = {}
        while True:
            key, lc = _lead(px, py)
            if key is None or key not in rows:
                return px, py, coords
            rx, ry, rc = rows[key]
            a = lc / _lead(rx, ry)[1]
            px, py = px - rx.mul_ground(a), py - ry.mul_ground(a)
            fa = to_fraction(a)
            for k, v in rc.items():
                coords[k] = coords.get(k, Fraction(0)) + fa * v

    def locate(self, D):
        """coordinates {index: c} of D, or None if D is outside the span"""
        den = self._denominator_with(D)
        px, py = self._lift(D, den)
        px, py, coords = self._reduce(px, py, self._rows_for(den))
        if px or py:
            return None
        return {k: v for k, v in coords.items() if v}

    def add(self, D, index):
        """add D as element `index` unless dependent; returns coords when dependent"""
        den = self._denominator_with(D)
        if den != self.denominator:
            self.rows = self._rows_for(den)
            self.denominator = den
        px, py = self._lift(D, den)
        px, py, coords = self._reduce(px, py, self.rows)
        if not (px or py):
            return {k: v for k, v in coords.items() if v}
        rc = {k: -v for k, v in coords.items() if v}
        rc[index] = Fraction(1)
        self.rows[_lead(px, py)[0]] = (px, py, rc)
        return None


############################################################################
# algebras and subspaces


def _clean_sc(sc):
    out = {}
    for (i, j), vec in sc.items():
        if i == j:
            continue
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        vec = {k: sign * Fraction(c) for k, c in vec.items() if c}
        if vec:
            out[(i, j)] = vec
    return out


@attr.s(slots=True, frozen=True, repr=False, eq=False)
class LieAlgebra(object):
    dim = attr.ib()
    sc = attr.ib(converter=_clean_sc)
    basis = attr.ib(default=None)
    names = attr.ib(default=None)
    tracker = attr.ib(default=None)
    _ad = attr.ib(default=attr.Factory(dict), init=False)

    def __attrs_post_init__(self):
        if self.names is None:
            object.__setattr__(self, "names", tuple("b{}".format(i) for i in range(self.dim)))
        if self.basis is not None:
            object.__setattr__(self, "basis", tuple(self.basis))

    def unit(self, i):
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v

    def element(self, v):
        """the derivation with coordinates v"""
        if self.basis is None:
            raise UsageError("abstract algebra has no derivation basis")
        D = Derivation()
        for c, b in zip(v, self.basis):
            if c:
                D = D + Derivation(b.coef_x * c, b.coef_y * c)
        return D

    def bracket_basis(self, i, j):
        """coordinates of [b_i, b_j] as a dict"""
        if i < j:
            return self.sc.get((i, j), {})
        if i > j:
            return {k: -c for k, c in self.sc.get((j, i), {}).items()}
        return {}

    def ad_basis(self, i):
        if i not in self._ad:
            cols = []
            for j in range(self.dim):
                col = [Fraction(0)] * self.dim
                for k, c in self.bracket_basis(i, j).items():
                    col[k] = c
                cols.append(col)
            self._ad[i] = QMatrix.from_columns(cols, self.dim) if cols else QMatrix.zeros(0)
        return self._ad[i]

    def format(self, conf=None):
        if self.basis is not None:
            return "<" + ", ".join(str(b) for b in self.basis) + ">"
        return "<" + ", ".join(self.names) + ">"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "{0}(dim={1}, {2})".format(self.__class__.__name__, self.dim, self.format())


@attr.s(slots=True, frozen=True, repr=False, eq=False)
class Subspace(object):
    """a subspace of `parent`, held as an echelon basis of coordinate vectors"""

    parent = attr.ib()
    coords = attr.ib(converter=lambda vs: tuple(tuple(v) for v in vs))

    @classmethod
    def span(cls, parent, vectors):
        return cls(parent, row_basis(vectors, parent.dim))

    @classmethod
    def whole(cls, parent):
        return cls(parent, [parent.unit(i) for i in range(parent.dim)])

    @classmethod
    def zero(cls, parent):
        return cls(parent, [])

    @property
    def dim(self):
        return len(self.coords)

    @property
    def vectors(self):
        return [list(v) for v in self.coords]

    @property
    def pivots(self):
        return [next(i for i, c in enumerate(v) if c) for v in self.coords]

    def reduce(self, v):
        """v minus its component along the pivots of this subspace"""
        v = [Fraction(c) for c in v]
        for row, p in zip(self.coords, self.pivots):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, v):
        return not any(self.reduce(v))

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.coords)

    def __eq__(self, other):
        return self.parent is other.parent and self.coords == other.coords

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def elements(self):
        return [self.parent.element(v) for v in self.coords]

    def complement(self):
        """unit vectors on the non-pivot columns, spanning a complement"""
        pivots = set(self.pivots)
        return [self.parent.unit(i) for i in range(self.parent.dim) if i not in pivots]

    def format(self, conf=None):
        if self.parent.basis is not None:
            return "<" + ", ".join(str(d) for d in self.elements()) + ">"
        return "<" + ", ".join(
            "(" + ", ".join(format_rational(c) for c in v) + ")" for v in self.coords) + ">"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "{0}(dim={1}, {2})".format(self.__class__.__name__, self.dim, self.format())


@attr.s(slots=True, frozen=True, repr=False)
class Predicates(object):
    abelian = attr.ib()
    solvable = attr.ib()
    nilpotent = attr.ib()
    perfect = attr.ib()
    center_dim = attr.ib()
    metabelian = attr.ib(default=False)

    def as_dict(self):
        return attr.asdict(self)

    def __repr__(self):
        return "{0}({1})".format(
            self.__class__.__name__,
            ", ".join((a.name + "=" + str(getattr(self, a.name))) for a in self.__attrs_attrs__),
        )


############################################################################
# closure and coordinates


def close(gens, dim_cap=None):
    """the smallest bracket-closed rational span containing gens

    Generators keep their order; dependent generators are dropped.
    Brackets of new elements with all earlier ones are taken until
    nothing new appears.

    >>> from planarlie.polyrat import RatFunc
    >>> x = RatFunc.variable("x")
    >>> close([Derivation.dx(), Derivation(x ** 3, 0)], dim_cap=10)  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ...
    planarlie.exceptions.DimensionCapExceeded: closure exceeds dimension cap 10
    """
    gens = list(gens)
    if not gens:
        raise UsageError("close needs at least one generator")
    if dim_cap is None:
        dim_cap = global_config.structure.dim_cap
    tracker = _SpanTracker()
    basis = []

    def adjoin(D):
        if D.is_zero:
            return {}
        coords = tracker.add(D, len(basis))
        if coords is None:
            basis.append(D)
            if len(basis) > dim_cap:
                raise DimensionCapExceeded("closure exceeds dimension cap {}".format(dim_cap))
            return {len(basis) - 1: Fraction(1)}
        return coords

    for g in gens:
        adjoin(g)
    sc = {}
    i = 0
    while i < len(basis):
        for j in range(i):
            sc[(j, i)] = adjoin(bracket(basis[j], basis[i]))
        i += 1
        _logger.debug("close: processed {i} of {n} basis elements".format(i=i, n=len(basis)))
    return LieAlgebra(len(basis), sc, basis=basis, tracker=tracker)


def coordinates(L, D):
    """exact coordinates of D in the basis of L; NotInSpan if outside"""
    if L.tracker is None:
        raise UsageError("coordinates need an algebra built by close")
    found = L.tracker.locate(D)
    if found is None:
        raise NotInSpan("{D} is not in {L}".format(D=D, L=L))
    v = [Fraction(0)] * L.dim
    for k, c in found.items():
        v[k] = c
    return v


def from_table(names, relations):
    """abstract algebra from named relations {(a, b): {c: coeff}} meaning [a, b] = sum coeff c"""
    index = {n: i for i, n in enumerate(names)}
    sc = {}
    for (a, b), rhs in relations.items():
        i, j = index[a], index[b]
        vec = {index[c]: Fraction(v) for c, v in rhs.items()}
        if i > j:
            i, j = j, i
            vec = {k: -v for k, v in vec.items()}
        sc[(i, j)] = vec
    return LieAlgebra(len(names), sc, names=tuple(names))


def bracket_coords(L, u, v):
    out = [Fraction(0)] * L.dim
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if not b or i == j:
                continue
            for k, c in L.bracket_basis(i, j).items():
                out[k] += a * b * c
    return out


def ad_matrix(L, v):
    """matrix of w -> [v, w] in the basis of L"""
    m = QMatrix.zeros(L.dim)
    for i, c in enumerate(v):
        if c:
            m = m + L.ad_basis(i).scale(c)
    return m


def jacobi_defects(L):
    """triples (i, j, k) on which the Jacobi identity fails"""
    bad = []
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = L.unit(i), L.unit(j), L.unit(k)
                total = [
                    a + b + c
                    for a, b, c in zip(
                        bracket_coords(L, ei, bracket_coords(L, ej, ek)),
                        bracket_coords(L, ej, bracket_coords(L, ek, ei)),
                        bracket_coords(L, ek, bracket_coords(L, ei, ej)),
                    )
                ]
                if any(total):
                    bad.append((i, j, k))
    return bad


def to_json(L):
    """structure constants as a JSON-ready document"""
    basis = [str(b) for b in L.basis] if L.basis is not None else list(L.names)
    sc = []
    for (i, j) in sorted(L.sc):
        for k in sorted(L.sc[(i, j)]):
            sc.append([i, j, k, format_rational(L.sc[(i, j)][k])])
    return {"dim": L.dim, "basis": basis, "sc": sc}


############################################################################
# subspace algebra


def span(L, vectors):
    return Subspace.span(L, vectors)


def bracket_span(L, A, B):
    """the subspace [A, B]"""
    return Subspace.span(L, [bracket_coords(L, a, b) for a in A.coords for b in B.coords])


def intersect(A, B):
    L = A.parent
    if not A.dim or not B.dim:
        return Subspace.zero(L)
    cols = A.vectors + [[-c for c in b] for b in B.vectors]
    sols = kernel(QMatrix.from_columns(cols, L.dim))
    vecs = []
    for s in sols:
        v = [Fraction(0)] * L.dim
        for a, row in zip(s[: A.dim], A.coords):
            if a:
                v = [x + a * y for x, y in zip(v, row)]
        vecs.append(v)
    return Subspace.span(L, vecs)


def subspace_sum(A, B):
    return Subspace.span(A.parent, A.vectors + B.vectors)


def is_subalgebra(L, S):
    return S.contains_subspace(bracket_span(L, S, S))


def is_ideal(L, S):
    return S.contains_subspace(bracket_span(L, Subspace.whole(L), S))


def ideal_closure(L, vectors):
    """the smallest ideal containing `vectors`"""
    S = Subspace.span(L, vectors)
    whole = Subspace.whole(L)
    while True:
        T = subspace_sum(S, bracket_span(L, whole, S))
        if T.dim == S.dim:
            return S
        S = T


def centralizer(L, S):
    """{x : [x, s] = 0 for all s in S}"""
    if not S.dim:
        return Subspace.whole(L)
    rows = []
    for s in S.coords:
        rows.extend(ad_matrix(L, s).to_rows())
    # [x, s] = -ad(s) x
    return Subspace.span(L, kernel(QMatrix.from_rows(rows, L.dim)))


def center(L):
    return centralizer(L, Subspace.whole(L))


def restricted_action(L, v, S):
    """matrix of ad(v) on the invariant subspace S, in the echelon basis of S"""
    cols = []
    for s in S.coords:
        w = bracket_coords(L, v, s)
        if any(S.reduce(w)):
            raise UsageError("subspace is not invariant under ad")
        cols.append(in_subspace_coords(S, w))
    return QMatrix.from_columns(cols, S.dim) if cols else QMatrix.zeros(0)


def in_subspace_coords(S, v):
    """coordinates of v (a member of S) in the echelon basis of S"""
    return [v[p] for p in S.pivots]


def from_subspace_coords(S, c):
    v = [Fraction(0)] * S.parent.dim
    for a, row in zip(c, S.coords):
        if a:
            v = [x + a * y for x, y in zip(v, row)]
    return v


def change_basis(L, vectors, names=None):
    """the algebra L written in a new basis given by coordinate vectors"""
    P = QMatrix.from_columns(vectors, L.dim)
    Pinv = inverse(P)
    sc = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            sc[(i, j)] = dict(enumerate(Pinv.apply(bracket_coords(L, vectors[i], vectors[j]))))
    basis = [L.element(v) for v in vectors] if L.basis is not None else None
    return LieAlgebra(L.dim, sc, basis=basis, names=tuple(names) if names else None)


def subalgebra(L, S, names=None):
    """the subalgebra S as a LieAlgebra in the echelon basis of S"""
    if not is_subalgebra(L, S):
        raise UsageError("subspace is not closed under bracket")
    sc = {}
    for a in range(S.dim):
        for b in range(a + 1, S.dim):
            w = bracket_coords(L, S.coords[a], S.coords[b])
            sc[(a, b)] = dict(enumerate(in_subspace_coords(S, w)))
    basis = S.elements() if L.basis is not None else None
    return LieAlgebra(S.dim, sc, basis=basis, names=names)


def quotient(L, I):
    """L/I on the complement spanned by the non-pivot unit vectors of I

    Returns ``(Q, project)`` where project maps coordinates in L to
    coordinates in Q.
    """
    if not is_ideal(L, I):
        raise UsageError("quotient by a subspace that is not an ideal")
    pivots = set(I.pivots)
    keep = [i for i in range(L.dim) if i not in pivots]

    def project(v):
        r = I.reduce(v)
        return [r[i] for i in keep]

    sc = {}
    for a in range(len(keep)):
        for b in range(a + 1, len(keep)):
            w = bracket_coords(L, L.unit(keep[a]), L.unit(keep[b]))
            sc[(a, b)] = dict(enumerate(project(w)))
    Q = LieAlgebra(len(keep), sc, names=tuple(L.names[i] for i in keep))
    return Q, project


############################################################################
# series and predicates


def series(L, kind="derived"):
    """the derived or lower central series, strictly descending until it stabilizes

    >>> from planarlie.polyrat import RatFunc
    >>> x = RatFunc.variable("x")
    >>> L = close([Derivation.dx(), Derivation(-x, 0)])
    >>> [S.dim for S in series(L, "derived")]
    [2, 1, 0]
    """
    kind = SeriesKind[kind] if not isinstance(kind, SeriesKind) else kind
    whole = Subspace.whole(L)
    out = [whole]
    while True:
        last = out[-1]
        if kind is SeriesKind.derived:
            nxt = bracket_span(L, last, last)
        else:
            nxt = bracket_span(L, whole, last)
        if nxt.dim == last.dim:
            return out
        out.append(nxt)
        if not nxt.dim:
            return out


def derived_subalgebra(L):
    whole = Subspace.whole(L)
    return bracket_span(L, whole, whole)


def is_abelian(L):
    return not L.sc


def predicates(L):
    derived = series(L, "derived")
    lower = series(L, "lower_central")
    solvable = derived[-1].dim == 0
    return Predicates(
        abelian=is_abelian(L),
        solvable=solvable,
        nilpotent=lower[-1].dim == 0,
        perfect=len(derived) == 1 and L.dim > 0,
        center_dim=center(L).dim,
        metabelian=solvable and len(derived) <= 3,
    )


############################################################################
# Killing form and radical


def killing_form(L):
    """symmetric matrix trace(ad b_i ad b_j)"""
    ads = [L.ad_basis(i) for i in range(L.dim)]
    rows = []
    for i in range(L.dim):
        rows.append([(ads[i] * ads[j]).trace() for j in range(L.dim)])
    return QMatrix.from_rows(rows, L.dim)


def radical(L):
    """the solvable radical, computed as the Killing-orthogonal of L'"""
    K = killing_form(L)
    Lp = derived_subalgebra(L)
    if not Lp.dim:
        return Subspace.whole(L)
    rows = [K.apply(w) for w in Lp.coords]
    return Subspace.span(L, kernel(QMatrix.from_rows(rows, L.dim)))


############################################################################
# ideals


def _joint_eigenspaces(L):
    """joint rational eigenspaces of ad b_0, ..., ad b_{n-1}; also whether all ad split"""
    spaces = [Subspace.whole(L)]
    all_split = True
    for j in range(L.dim):
        A = L.ad_basis(j)
        if A.is_zero:
            continue
        eigen, split = rational_eigen(A)
        all_split = all_split and split
        refined = []
        for W in spaces:
            for value, _, _ in eigen:
                shifted = A - QMatrix.identity(L.dim).scale(value)
                E = intersect(W, Subspace.span(L, kernel(shifted)))
                if E.dim:
                    refined.append(E)
        spaces = refined
        if not spaces:
            break
    return spaces, all_split


def one_dim_ideals(L):
    """lines spanned by simultaneous eigenvectors of the adjoint action

    Returns ``(lines, all_lines)``; all_lines is True when every line is
    an ideal (L abelian), in which case the basis lines are returned.
    Lines are ordered by pivot position.
    """
    if is_abelian(L):
        return [Subspace.span(L, [L.unit(i)]) for i in range(L.dim)], True
    spaces, all_split = _joint_eigenspaces(L)
    lines = [Subspace.span(L, [v]) for W in spaces for v in W.coords]
    lines.sort(key=lambda S: S.pivots)
    if not lines and not all_split and predicates(L).solvable:
        raise NonRationalSpectrum("no rational common eigenvector of the adjoint action")
    return lines, False


def _rational_linear_rows(funcs):
    """rows of the linear conditions sum_k c_k funcs[k] = 0 over the rationals"""
    den = RING.one
    for f in funcs:
        if not f.is_zero:
            den = den.lcm(f.den.p).monic()
    lifted = [f.num.p * den.exquo(f.den.p) if not f.is_zero else RING.zero for f in funcs]
    monoms = sorted({m for p in lifted for m in p.keys()})
    return [[to_fraction(p.get(m, 0)) for p in lifted] for m in monoms]


def r_multiple_ideal(L, D1):
    """I = all elements of L that are rational-function multiples of D1

    >>> from planarlie.polyrat import RatFunc
    >>> y = RatFunc.variable("y")
    >>> L = close([Derivation.dx(), Derivation(y, 0), Derivation.dy()])
    >>> r_multiple_ideal(L, Derivation.dx()).dim
    2
    """
    if D1.is_zero:
        raise UsageError("D1 must be nonzero")
    try:
        d1 = coordinates(L, D1)
    except NotInSpan:
        raise NotMember("{D} is not a member of {L}".format(D=D1, L=L))
    funcs = [cross(b, D1) for b in L.basis]
    rows = _rational_linear_rows(funcs)
    I = Subspace.span(L, kernel(QMatrix.from_rows(rows, L.dim)) if rows else
                      [L.unit(i) for i in range(L.dim)])
    if not is_ideal(L, I):
        if is_ideal(L, Subspace.span(L, [d1])):
            raise InternalError("R-multiples of the ideal line {} do not form an ideal".format(D1))
        _logger.warning("R-multiples of {} do not form an ideal; <D1> is not an ideal".format(D1))
    return I


def rank_one_ideals_contained(L):
    """True if each R-multiple ideal of an ideal line contains all the others

    This is the containment of rank-one ideals in I = R D1 meet L for
    algebras of dimension at least five.
    """
    lines, _ = one_dim_ideals(L)
    ideals = [r_multiple_ideal(L, line.elements()[0]) for line in lines]
    for I in ideals:
        for J in ideals:
            if not I.contains_subspace(J):
                return False
    return True


############################################################################
# sl2 triples


def complete_sl2_triple(L, e):
    """(e, h, f) with [h, e] = 2e, [h, f] = -2f, [e, f] = h, or None

    Solves [e, [e, z]] = -2e, sets h = [e, z], then corrects z by an
    element of the centralizer of e so that [h, f] = -2f.
    """
    n = L.dim
    if not any(e):
        return None
    ad_e = ad_matrix(L, e)
    try:
        z = solve(ad_e * ad_e, [-2 * c for c in e])
    except NotInSpan:
        return None
    h = bracket_coords(L, e, z)
    ad_h = ad_matrix(L, h)
    shifted = ad_h + QMatrix.identity(n).scale(2)
    rhs = [-c for c in shifted.apply(z)]
    system = QMatrix.from_rows(ad_e.to_rows() + shifted.to_rows(), n)
    try:
        y = solve(system, [Fraction(0)] * n + rhs)
    except NotInSpan:
        return None
    f = [a + b for a, b in zip(z, y)]
    if (bracket_coords(L, h, e) != [2 * c for c in e]
            or bracket_coords(L, h, f) != [-2 * c for c in f]
            or bracket_coords(L, e, f) != h):
        return None
    return e, h, f


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
