# -*- coding: utf-8 -*-
"""Identify the catalog type of a finite-dimensional algebra of planar
derivations

:func:`classify` returns a :class:`Classification`: the type with its
canonical parameters and a witness basis, given as coordinate vectors
in the algebra, whose structure constants equal those of
:func:`planarlie.catalog.abstract_table` exactly.

Solvable algebras are recognized from an ideal line D1 and the ideal I
of all rational-function multiples of D1 in L, and from characteristic
ideals such as L' + Z(L); the codimension of I and whether I is
abelian select the family.  Nonsolvable algebras are
recognized from sl2 triples and, in dimension 8, a regular element.

>>> from planarlie.polyrat import RatFunc
>>> from planarlie.structure import close
>>> from planarlie.vectorfield import Derivation
>>> x = RatFunc.variable("x")
>>> c = classify(close([Derivation.dx(), Derivation(-x, 0)]))
>>> str(c.ttype)
'T2{n=1}'

"""

from __future__ import absolute_import, division, print_function, unicode_literals

import itertools
import logging
from fractions import Fraction

import attr

from planarlie.catalog import (
    SL2,
    SL2_SL2,
    TheoremType,
    abstract_table,
    affine_canonical_form,
    diagonal_adjustment,
    preferred_indices,
    realize,
    scaling_canonical_form,
)
from planarlie.config import global_config
from planarlie.exceptions import (
    NonRationalSpectrum,
    NotInCatalog,
    NotInSpan,
    UsageError,
)
from planarlie.linalg import QMatrix, eigenspace, is_nilpotent, kernel, rational_eigen, solve
from planarlie.polyrat import format_rational
from planarlie.structure import (
    Subspace,
    ad_matrix,
    bracket_coords,
    bracket_span,
    center,
    centralizer,
    change_basis,
    close,
    complete_sl2_triple,
    from_subspace_coords,
    ideal_closure,
    intersect,
    is_abelian,
    is_ideal,
    one_dim_ideals,
    predicates,
    r_multiple_ideal,
    radical,
    restricted_action,
    subspace_sum,
)
from planarlie.vectorfield import rank_over_R, ratio

_logger = logging.getLogger(__name__)


def _add(u, v):
    return [a + b for a, b in zip(u, v)]


def _sub(u, v):
    return [a - b for a, b in zip(u, v)]


def _scale(c, v):
    c = Fraction(c)
    return [c * a for a in v]


def _zeros(n):
    return [Fraction(0)] * n


def _multiple(w, v):
    """c with w = c v, or None"""
    k = next((i for i, a in enumerate(v) if a), None)
    if k is None:
        return None
    c = w[k] / v[k]
    return c if _scale(c, v) == list(w) else None


@attr.s(slots=True, frozen=True, repr=False)
class Classification(object):
    ttype = attr.ib()
    witness = attr.ib()
    algebra = attr.ib()
    adjustment = attr.ib(default=attr.Factory(dict))
    d1 = attr.ib(default=None)
    ideal = attr.ib(default=None)
    radical = attr.ib(default=None)

    @property
    def names(self):
        return self.ttype.names()

    def fields(self):
        """the witness basis as derivations"""
        return [self.algebra.element(v) for v in self.witness]

    def report(self):
        """JSON-ready summary of the type, parameters and witnesses"""
        names = self.names
        if self.algebra.basis is not None:
            basis = {n: str(d) for n, d in zip(names, self.fields())}
        else:
            basis = {n: [format_rational(c) for c in v] for n, v in zip(names, self.witness)}
        witnesses = {"basis": basis}
        if self.ideal is not None and self.algebra.basis is not None:
            witnesses["ideal"] = [str(d) for d in self.ideal.elements()]
        elif self.ideal is not None:
            witnesses["ideal"] = [[format_rational(c) for c in v] for v in self.ideal.coords]
        if self.d1 is not None:
            witnesses["d1"] = str(self.d1)
            multipliers = {}
            for n, d in zip(names, self.fields()):
                a = ratio(d, self.d1)
                if a is not None:
                    multipliers[n] = str(a)
            witnesses["multipliers"] = multipliers
        if self.radical is not None:
            witnesses["radical"] = self.radical.dim
        return {
            "type": self.ttype.kind.name,
            "params": self.ttype.params_json(),
            "dim": self.algebra.dim,
            "witnesses": witnesses,
            "adjustment": {n: format_rational(v) for n, v in sorted(self.adjustment.items())},
        }

    def format(self, conf=None):
        return str(self.ttype)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "{0}({1}, dim={2})".format(self.__class__.__name__, self.ttype, self.algebra.dim)


############################################################################
# helpers shared by the solvable branches


def _jordan_chain(N, head, size):
    """[e_0, ..., e_{size-1}] with e_{size-1} = head, N e_i = e_{i-1} and N e_0 = 0"""
    chain = [list(head)]
    for _ in range(size - 1):
        nxt = N.apply(chain[-1])
        if not any(nxt):
            return None
        chain.append(nxt)
    if any(N.apply(chain[-1])):
        return None
    chain.reverse()
    return chain


def _outside_kernel(M):
    for j in range(M.cols):
        u = _zeros(M.cols)
        u[j] = Fraction(1)
        if any(M.apply(u)):
            return u
    return None


def _single_block(A):
    """the eigenvalue of A if A has one Jordan block with rational eigenvalue"""
    eigen, split = rational_eigen(A)
    if not split or len(eigen) != 1:
        return None
    mu = eigen[0][0]
    if len(eigenspace(A, mu)) != 1:
        return None
    return mu


def _distinct_eigenvalues(A):
    eigen, split = rational_eigen(A)
    if not split or any(mult != 1 for _, mult, _ in eigen):
        return None
    return [v for v, _, _ in eigen]


def _solve_affine(residual, nvars):
    """z with residual(z) = 0 for an affine residual; NotInSpan if none"""
    r0 = residual(_zeros(nvars))
    cols = []
    for k in range(nvars):
        z = _zeros(nvars)
        z[k] = Fraction(1)
        cols.append(_sub(residual(z), r0))
    return solve(QMatrix.from_columns(cols, len(r0)), [-c for c in r0])


def _quotient_pair(L, I):
    """(u, w) spanning L/I with [w, u] = u mod I, or None if L/I is abelian"""
    c1, c2 = I.complement()
    u = I.reduce(bracket_coords(L, c1, c2))
    if not any(u):
        return None
    w = c2 if _multiple(c1, u) is not None else c1
    kappa = _multiple(I.reduce(bracket_coords(L, w, u)), u)
    if not kappa:
        return None
    return u, _scale(1 / kappa, w)


def _scalar_split(L, I):
    """(I', x) with I' = [I, I] abelian of codimension 1 in I and x in I acting as identity on I'"""
    Ip = bracket_span(L, I, I)
    if Ip.dim != I.dim - 1 or bracket_span(L, Ip, Ip).dim:
        return None
    x = next(list(v) for v in I.coords if any(Ip.reduce(v)))
    A = restricted_action(L, x, Ip)
    c = A[0, 0]
    if not c or A != QMatrix.identity(Ip.dim).scale(c):
        return None
    return Ip, _scale(1 / c, x)


############################################################################
# solvable branches


def _abstract_type2(L):
    """L' abelian of codimension 1 with the complement acting as a nonzero scalar"""
    whole = Subspace.whole(L)
    Lp = bracket_span(L, whole, whole)
    if Lp.dim != L.dim - 1 or bracket_span(L, Lp, Lp).dim:
        return None
    x = Lp.complement()[0]
    A = restricted_action(L, x, Lp)
    c = A[0, 0]
    if not c or A != QMatrix.identity(Lp.dim).scale(c):
        return None
    return TheoremType.make("T2", n=Lp.dim), Lp.vectors + [_scale(1 / c, x)]


def _abelian_codim1(L, I):
    x = I.complement()[0]
    A = restricted_action(L, x, I)
    k = I.dim
    n = k - 1
    mu = _single_block(A)
    if mu is not None:
        lam = 0 if mu == 0 else 1
        f = x if mu == 0 else _scale(1 / mu, x)
        A_f = A if mu == 0 else A.scale(1 / mu)
        N = A_f - QMatrix.identity(k).scale(lam)
        chain = _jordan_chain(N, _outside_kernel(N ** n), k)
        if chain is None:
            return None
        es = [from_subspace_coords(I, c) for c in chain]
        return TheoremType.make("T3", n=n, lam=lam), es + [f]
    values = _distinct_eigenvalues(A)
    if values is None or k < 2 or not any(values):
        return None
    beta, m, order = scaling_canonical_form(values)
    f = _scale(1 / values[order[0]], x)
    es = [from_subspace_coords(I, eigenspace(A, values[i])[0]) for i in order]
    return TheoremType.make("T4", n=n, beta=beta, m=m), es + [f]


def _abelian_codim2(L, I):
    pair = _quotient_pair(L, I)
    if pair is None:
        return None
    f0, w = pair
    g0 = _scale(-1, w)
    k = I.dim
    n = k - 1
    A_f = restricted_action(L, f0, I)
    A_g = restricted_action(L, g0, I)
    values = _distinct_eigenvalues(A_g)
    if values is None:
        return None
    top = max(values)
    chain = _jordan_chain(A_f, eigenspace(A_g, top)[0], k)
    if chain is None:
        return None
    beta = n - top
    es = [from_subspace_coords(I, c) for c in chain]

    def residual(z, with_gamma):
        # [f, g] - f + gamma e_n with f = f0 + b, g = g0 + a
        a = from_subspace_coords(I, z[:k])
        b = from_subspace_coords(I, z[k: 2 * k])
        f, g = _add(f0, b), _add(g0, a)
        out = _sub(bracket_coords(L, f, g), f)
        if with_gamma:
            out = _add(out, _scale(z[2 * k], es[-1]))
        return out

    try:
        z = _solve_affine(lambda z: residual(z, False), 2 * k)
        gamma = Fraction(0)
    except NotInSpan:
        z = _solve_affine(lambda z: residual(z, True), 2 * k + 1)
        gamma = z[2 * k]
    f = _add(f0, from_subspace_coords(I, z[k: 2 * k]))
    g = _add(g0, from_subspace_coords(I, z[:k]))
    if gamma:
        es = [_scale(gamma, e) for e in es]
    t = TheoremType.make("T5", n=n, beta=beta, gamma=1 if gamma else 0)
    return t, es + [f, g]


def _nonabelian_codim1(L, I):
    split = _scalar_split(L, I)
    if split is None:
        return None
    Ip, f = split
    k = Ip.dim
    n = k - 1
    g0 = I.complement()[0]
    v = bracket_coords(L, f, g0)
    if not Ip.contains(v):
        return None
    g = _sub(g0, v)
    A_g = restricted_action(L, g, Ip)
    mu = _single_block(A_g)
    if mu is not None:
        N = A_g - QMatrix.identity(k).scale(mu)
        chain = _jordan_chain(N, _outside_kernel(N ** n), k)
        if chain is None:
            return None
        es = [from_subspace_coords(Ip, c) for c in chain]
        return TheoremType.make("T6", n=n), es + [f, _sub(g, _scale(mu, f))]
    values = _distinct_eigenvalues(A_g)
    if values is None or k < 2:
        return None
    m, order, (r, orientation, delta) = affine_canonical_form(values)
    g = _add(_scale(Fraction(orientation) / delta, _sub(g, _scale(values[r], f))), f)
    es = [from_subspace_coords(Ip, eigenspace(A_g, values[i])[0]) for i in order]
    return TheoremType.make("T7", n=n, beta=1, m=m), es + [f, g]


def _nonabelian_codim2(L, I):
    split = _scalar_split(L, I)
    pair = _quotient_pair(L, I)
    if split is None or pair is None:
        return None
    Ip, g1 = split
    f0, h0 = pair
    k = Ip.dim
    n = k - 1
    f1 = _sub(f0, _scale(restricted_action(L, f0, Ip).trace() / k, g1))
    A_f = restricted_action(L, f1, Ip)
    if not is_nilpotent(A_f):
        return None
    A_h0 = restricted_action(L, h0, Ip)
    values = _distinct_eigenvalues(A_h0)
    if values is None:
        return None
    lam0 = max(values)
    if sorted(v - lam0 for v in values) != list(range(-n, 1)):
        return None
    h1 = _sub(h0, _scale(lam0, g1))
    A_h = A_h0 - QMatrix.identity(k).scale(lam0)
    chain = _jordan_chain(A_f, eigenspace(A_h, -n)[0], k)
    if chain is None:
        return None

    def residual(z):
        f = _add(f1, from_subspace_coords(Ip, z[:k]))
        g = _add(g1, from_subspace_coords(Ip, z[k: 2 * k]))
        h = _add(h1, from_subspace_coords(Ip, z[2 * k:]))
        return (bracket_coords(L, g, f)
                + bracket_coords(L, h, g)
                + _sub(bracket_coords(L, h, f), f))

    z = _solve_affine(residual, 3 * k)
    f = _add(f1, from_subspace_coords(Ip, z[:k]))
    g = _add(g1, from_subspace_coords(Ip, z[k: 2 * k]))
    h = _add(h1, from_subspace_coords(Ip, z[2 * k:]))
    es = [from_subspace_coords(Ip, c) for c in chain]
    return TheoremType.make("T8", n=n, alpha=0, beta=0), es + [f, g, h]


_BRANCHES = {
    (True, 1): _abelian_codim1,
    (True, 2): _abelian_codim2,
    (False, 1): _nonabelian_codim1,
    (False, 2): _nonabelian_codim2,
}


def _branch_result(L, I, label):
    """the family suggested by the ideal I, or None"""
    if not I.dim or I.dim == L.dim or not is_ideal(L, I):
        return None
    abelian = not bracket_span(L, I, I).dim
    branch = _BRANCHES.get((abelian, L.dim - I.dim))
    if branch is None:
        return None
    try:
        result = branch(L, I)
    except (NotInSpan, UsageError) as e:
        _logger.debug("{label}: {e}".format(label=label, e=e))
        return None
    if result is not None:
        _logger.debug("{label} suggests {t}".format(label=label, t=result[0]))
    return result


def _scalar_action_ideal(L, A):
    """{x : ad x acts on the ideal A as a scalar}"""
    cols = []
    for i in range(L.dim):
        u = L.unit(i)
        cols.append([c for a in A.coords for c in bracket_coords(L, u, a)])
    cols.append([-c for a in A.coords for c in a])
    sols = kernel(QMatrix.from_columns(cols, A.dim * L.dim))
    return Subspace.span(L, [s[: L.dim] for s in sols])


def characteristic_ideals(L):
    """ideals of L fixed by every automorphism, built from the structure constants

    L', L' + Z(L), the centralizer of L', and L' plus a complement line
    when L' is central; then, for each abelian one, the elements acting
    on it as scalars.
    """
    whole = Subspace.whole(L)
    Lp = bracket_span(L, whole, whole)
    ideals = [Lp, subspace_sum(Lp, center(L)), centralizer(L, Lp)]
    if Lp.dim and not bracket_span(L, whole, Lp).dim:
        ideals += [subspace_sum(Lp, Subspace.span(L, [c])) for c in Lp.complement()[:1]]
    ideals += [_scalar_action_ideal(L, A) for A in list(ideals)
               if A.dim and not bracket_span(L, A, A).dim]
    out = []
    for I in ideals:
        if I not in out:
            out.append(I)
    return out


def _solvable_candidates(L):
    """(type, witness, context) from ideal lines and characteristic ideals

    Sorted by catalog index, so the earliest family any candidate
    reaches wins; ties keep ideal lines ahead.
    """
    found = []
    seen = []
    if L.basis is not None:
        lines, _ = one_dim_ideals(L)
        for line in lines:
            D1 = line.elements()[0]
            I = r_multiple_ideal(L, D1)
            if I in seen:
                continue
            seen.append(I)
            result = _branch_result(L, I, "line {}".format(D1))
            if result is not None:
                found.append((result[0].index, len(found), result + ({"d1": D1, "ideal": I},)))
    for I in characteristic_ideals(L):
        if I in seen:
            continue
        seen.append(I)
        result = _branch_result(L, I, "ideal {}".format(I))
        if result is not None:
            found.append((result[0].index, len(found), result + ({"ideal": I},)))
    found.sort(key=lambda c: c[:2])
    return [c[2] for c in found]


############################################################################
# nonsolvable branches


def _candidate_elements(L, vectors):
    """the vectors, then pairwise combinations v_i + k v_j"""
    section = global_config.classify
    coefficients = section.ints("search_coefficients")
    limit = int(section.max_candidates)
    vectors = [list(v) for v in vectors]
    combos = (
        _add(vectors[i], _scale(c, vectors[j]))
        for i, j in itertools.combinations(range(len(vectors)), 2)
        for c in coefficients
    )
    return itertools.islice(itertools.chain(vectors, combos), limit)


def _triples(L, vectors, avoid=None):
    """sl2 triples (e, h, f) with e built from `vectors` and outside `avoid`"""
    for x in _candidate_elements(L, vectors):
        if avoid is None or not avoid.contains(x):
            t = complete_sl2_triple(L, x)
            if t is not None:
                yield t
        A = ad_matrix(L, x)
        eigen, _ = rational_eigen(A)
        for value, _, _ in eigen:
            if not value:
                continue
            for e in eigenspace(A, value):
                if avoid is not None and avoid.contains(e):
                    continue
                t = complete_sl2_triple(L, e)
                if t is not None:
                    yield t


def _ordered(triple):
    e, h, f = triple
    return [e, f, h]


def _units(L):
    return [L.unit(i) for i in range(L.dim)]


def _semisimple_pair(L):
    for triple in _triples(L, _units(L)):
        J1 = ideal_closure(L, list(triple))
        if J1.dim != 3:
            continue
        J2 = centralizer(L, J1)
        if J2.dim != 3:
            continue
        second = next(_triples(L, J2.vectors), None)
        if second is not None:
            return _ordered(triple) + _ordered(second)
    return None


def _normalized_opposite(L, e, F):
    kappa = _multiple(bracket_coords(L, e, bracket_coords(L, e, F)), e)
    if not kappa:
        return None
    return _scale(Fraction(-2) / kappa, F)


def _split_cartan(L):
    """the centralizer of h for an sl2 triple (e, h, f); a Cartan subalgebra in sl3"""
    for e, h, f in _triples(L, _units(L)):
        C = centralizer(L, Subspace.span(L, [h]))
        if C.dim == 2:
            return C
    return None


def _cartan_directions(C):
    """c1 + k c2 for k = 0..6, then c2"""
    # at most six lines of a Cartan plane of sl3 hold non-regular elements
    c1, c2 = C.vectors
    for k in range(7):
        yield _add(c1, _scale(k, c2))
    yield c2


def _sl3_basis(L):
    """Chevalley basis in the order of the sl3 table, from a regular element"""
    C = _split_cartan(L)
    if C is None:
        return None
    for x in _cartan_directions(C):
        A = ad_matrix(L, x)
        eigen, split = rational_eigen(A)
        if not split:
            continue
        mults = {v: m for v, m, _ in eigen}
        if mults.get(0) != 2 or len(eigen) != 7:
            continue
        pos = sorted(v for v in mults if v > 0)
        if len(pos) != 3 or pos[0] + pos[1] != pos[2]:
            continue
        e01 = eigenspace(A, pos[0])[0]
        e12 = eigenspace(A, pos[1])[0]
        e10 = _normalized_opposite(L, e01, eigenspace(A, -pos[0])[0])
        e21 = _normalized_opposite(L, e12, eigenspace(A, -pos[1])[0])
        if e10 is None or e21 is None:
            continue
        return [
            e01,
            bracket_coords(L, e01, e12),
            e12,
            e10,
            bracket_coords(L, e21, e10),
            e21,
            bracket_coords(L, e01, e10),
            bracket_coords(L, e12, e21),
        ]
    return None


def _highest_weight(L, e, h, module, m):
    cols = []
    for w in module.coords:
        cols.append(bracket_coords(L, e, w) + _sub(bracket_coords(L, h, w), _scale(m, w)))
    sols = kernel(QMatrix.from_columns(cols, 2 * L.dim))
    if not sols:
        return None
    return from_subspace_coords(module, sols[0])


def _with_radical(L, r):
    triple = next(_triples(L, _units(L), avoid=r), None)
    if triple is None:
        raise NonRationalSpectrum("no split sl2 triple outside the radical")
    e, h, f = triple
    rp = bracket_span(L, r, r)
    if not rp.dim:
        kind, module, m = "T11", r, r.dim - 1
    else:
        kind, module, m = "T12", rp, r.dim - 2
    if module.dim != m + 1:
        raise NotInCatalog("radical is not a single irreducible module")
    v0 = _highest_weight(L, e, h, module, m)
    if v0 is None:
        raise NotInCatalog("radical has no highest weight vector of weight {}".format(m))
    vs = [v0]
    for j in range(m):
        vs.append(_scale(Fraction(1, j + 1), bracket_coords(L, f, vs[-1])))
    extra = []
    if kind == "T12":
        C = intersect(centralizer(L, Subspace.span(L, [e, h, f])), r)
        z = next((list(c) for c in C.coords if not rp.contains(c)), None)
        c = _multiple(bracket_coords(L, z, v0), v0) if z is not None else None
        if not c:
            raise NotInCatalog("no central element acting on the radical")
        extra = [_scale(1 / c, z)]
    return TheoremType.make(kind, m=m), [e, f, h] + extra + vs


def _nonsolvable_candidate(L):
    r = radical(L)
    if r.dim:
        if L.dim - r.dim != 3:
            raise NotInCatalog("Levi factor of dimension {} is not sl2".format(L.dim - r.dim))
        return _with_radical(L, r) + ({"radical": r},)
    if L.dim == 3:
        triple = next(_triples(L, _units(L)), None)
        if triple is None:
            raise NonRationalSpectrum("no split sl2 triple")
        return TheoremType.make("T9", variant=SL2), _ordered(triple), {"radical": r}
    if L.dim == 6:
        basis = _semisimple_pair(L)
        if basis is None:
            raise NonRationalSpectrum("no splitting into two sl2 ideals")
        return TheoremType.make("T9", variant=SL2_SL2), basis, {"radical": r}
    if L.dim == 8:
        basis = _sl3_basis(L)
        if basis is None:
            raise NonRationalSpectrum("no regular split element")
        return TheoremType.make("T10"), basis, {"radical": r}
    raise NotInCatalog("semisimple algebra of dimension {}".format(L.dim))


############################################################################
# verification and entry points


def _verified(L, t, witness):
    """(witness rescaled to match the table of t exactly, scalings), or None"""
    names = t.names()
    if len(witness) != L.dim:
        return None
    try:
        B = change_basis(L, witness, names)
    except NotInSpan:
        return None
    scaling = diagonal_adjustment(B, abstract_table(t), prefer=preferred_indices(names))
    if scaling is None:
        return None
    return [_scale(scaling[i], v) for i, v in enumerate(witness)], scaling


def classify(L):
    """the catalog type of L with a witness basis; NotInCatalog if none applies

    Among all verified candidates the family listed earliest in the
    catalog wins, so isomorphic algebras get the same type whatever
    their realization.
    """
    if not L.dim:
        raise NotInCatalog("the zero algebra")
    if is_abelian(L):
        candidates = [(TheoremType.make("T1", n=L.dim), _units(L), {})]
    elif not predicates(L).solvable:
        candidates = [_nonsolvable_candidate(L)]
    else:
        t2 = _abstract_type2(L)
        candidates = [t2 + ({},)] if t2 is not None else _solvable_candidates(L)
    for t, witness, context in candidates:
        checked = _verified(L, t, witness)
        if checked is not None:
            basis, scaling = checked
            names = t.names()
            adjustment = {names[i]: d for i, d in scaling.items() if d != 1}
            _logger.info("classified {L} as {t}".format(L=L, t=t))
            return Classification(t, basis, L, adjustment=adjustment, **context)
        _logger.warning("witness for {t} does not match its table; skipped".format(t=t))
    if L.basis is None:
        raise UsageError("classifying this solvable algebra needs its derivation basis")
    raise NotInCatalog("{L} matches no catalog type".format(L=L))


def nilpotent_shape(L):
    """None unless nilpotent; else 1 (abelian of rank 1), 2 (<dx, dy>) or 3 (nonabelian)"""
    p = predicates(L)
    if not p.nilpotent:
        return None
    if not p.abelian:
        return 3
    if L.basis is None:
        raise UsageError("rank over the rational functions needs a derivation basis")
    if rank_over_R(L.basis) == 1:
        return 1
    if L.dim != 2:
        raise NotInCatalog("abelian algebra of rank 2 and dimension {}".format(L.dim))
    return 2


@attr.s(slots=True, frozen=True, repr=False)
class RoundTrip(object):
    passed = attr.ib()
    expected = attr.ib()
    found = attr.ib()
    relation = attr.ib()

    def __bool__(self):
        return bool(self.passed)

    __nonzero__ = __bool__

    def __repr__(self):
        return "{0}(passed={1}, expected={2}, found={3}, relation={4})".format(
            self.__class__.__name__, self.passed, self.expected, self.found, self.relation)


def round_trip(t):
    """classify the closure of realize(t) and compare with t

    The found type must equal the canonical form of t, or belong to a
    family listed earlier in the catalog.

    >>> round_trip(TheoremType.make("T3", n=0, lam=1)).relation
    'equivalent'
    """
    t = t.check()
    found = classify(close(realize(t))).ttype
    expected = t.canonical()
    if found == expected:
        relation = "exact" if found == t else "normalized"
        passed = True
    elif found.kind < t.kind:
        relation, passed = "equivalent", True
    else:
        relation, passed = "mismatch", False
    if not passed:
        _logger.warning("round trip of {t} found {f}".format(t=t, f=found))
    return RoundTrip(passed, expected, found, relation)


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
