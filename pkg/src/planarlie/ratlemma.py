# -*- coding: utf-8 -*-
"""Factor-exponent algorithms on univariate rational functions

* :func:`proportionality_ratio` finds the constant mu with
  mu * phi' * psi = phi * psi'.
* :func:`power_decompose` writes phi = c1 * theta^s, psi = c2 * theta^t.
* :func:`log_derivative_obstruction` exhibits an irreducible p with
  ord_p(phi'/phi) = -1, so phi'/phi has no rational antiderivative.

Also :func:`exponent_pattern`, which turns eigenvalues of the form
1 + beta * m_i into a normalized rational beta and integers m_i.

>>> t = RatFunc.variable("t")
>>> r = power_decompose(t**4 * (t + 1)**2, t**6 * (t + 1)**3)
>>> str(r.theta), r.s, r.t, r.mu
('x^3 + x^2', 2, 3, Fraction(3, 2))

"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
from fractions import Fraction
from functools import reduce
from math import gcd

import attr

from planarlie.exceptions import (
    ConstantInput,
    FactorMismatch,
    NotProportional,
    NoWitness,
    UsageError,
)
from planarlie.polyrat import Poly, RatFunc, factor_univariate, format_rational, ord_p, partial

_logger = logging.getLogger(__name__)


@attr.s(slots=True, frozen=True, repr=False)
class DecomposeResult(object):
    theta = attr.ib()
    s = attr.ib()
    t = attr.ib()
    c1 = attr.ib()
    c2 = attr.ib()
    mu = attr.ib()

    def reconstruct(self):
        """(phi, psi) rebuilt from theta, exponents and constants"""
        return self.c1 * self.theta ** self.s, self.c2 * self.theta ** self.t

    def power_relation(self):
        """(a, b, c) with phi^a = c * psi^b"""
        c = Fraction(self.c1) ** self.t / Fraction(self.c2) ** self.s
        return self.t, self.s, c

    def as_dict(self):
        return {
            "theta": str(self.theta),
            "s": self.s,
            "t": self.t,
            "c1": format_rational(self.c1),
            "c2": format_rational(self.c2),
            "mu": format_rational(self.mu),
        }

    def __repr__(self):
        return "{0}({1})".format(
            self.__class__.__name__,
            ", ".join((a.name + "=" + str(getattr(self, a.name))) for a in self.__attrs_attrs__),
        )


def _require_nonconstant(f, name):
    f = RatFunc.coerce(f)
    if f.is_constant:
        raise ConstantInput("{name} = {f} is constant".format(name=name, f=f))
    var = f.univariate_variable()
    return f, var


def _log_derivative(f, var):
    return partial(f, var) / f


def proportionality_ratio(phi, psi):
    """the rational mu with mu * phi' * psi = phi * psi'

    >>> t = RatFunc.variable("t")
    >>> proportionality_ratio(t**3, t**2)
    Fraction(2, 3)
    """
    phi, v1 = _require_nonconstant(phi, "phi")
    psi, v2 = _require_nonconstant(psi, "psi")
    if v1 != v2:
        raise NotProportional("{} and {} are functions of different variables".format(phi, psi))
    ratio = _log_derivative(psi, v2) / _log_derivative(phi, v1)
    if not ratio.is_constant:
        raise NotProportional("psi'/psi is not a constant multiple of phi'/phi")
    return ratio.constant_value


def _factor_exponents(f):
    """{monic irreducible Poly: exponent} and the rational unit of f"""
    exps = {}
    unit = Fraction(1)
    for part, sign in ((f.num, 1), (f.den, -1)):
        if part.is_constant:
            unit *= part.leading_coefficient ** sign
            continue
        factors, u = factor_univariate(part)
        unit *= u ** sign
        for p, k in factors:
            exps[p] = exps.get(p, 0) + sign * k
    return exps, unit


def power_decompose(phi, psi):
    """phi = c1 theta^s and psi = c2 theta^t with gcd(s, t) = 1 and s > 0"""
    mu = proportionality_ratio(phi, psi)
    phi, psi = RatFunc.coerce(phi), RatFunc.coerce(psi)
    s, t = mu.denominator, mu.numerator
    fe, u1 = _factor_exponents(phi)
    ge, u2 = _factor_exponents(psi)
    if set(fe) != set(ge):
        raise FactorMismatch("irreducible supports of {} and {} differ".format(phi, psi))
    theta = RatFunc.one()
    for p in sorted(fe, key=lambda p: p.sort_key()):
        k, l = fe[p], ge[p]
        if k % s or l % t or k // s != l // t:
            raise FactorMismatch("exponents {k}, {l} of {p} are not in ratio {s}:{t}".format(
                k=k, l=l, p=p, s=s, t=t))
        theta = theta * RatFunc(p) ** (k // s)
    result = DecomposeResult(theta=theta, s=s, t=t, c1=u1, c2=u2, mu=mu)
    if result.reconstruct() != (phi, psi):
        raise FactorMismatch("decomposition does not reconstruct its inputs")
    return result


def log_derivative_obstruction(phi):
    """(p, -1) with p irreducible, ord_p(phi) != 0 and ord_p(phi'/phi) = -1

    >>> t = RatFunc.variable("t")
    >>> p, k = log_derivative_obstruction(t**2)
    >>> str(p), k
    ('x', -1)
    """
    phi, var = _require_nonconstant(phi, "phi")
    logd = _log_derivative(phi, var)
    exps, _ = _factor_exponents(phi)
    for p in sorted(exps, key=lambda p: p.sort_key()):
        if exps[p] and ord_p(logd, p) == -1:
            return p, -1
    raise NoWitness("no irreducible factor of {} certifies the obstruction".format(phi))


def eigen_ratio(nu, lam1, lam2):
    """(lam2 - nu)/(lam1 - nu)"""
    nu, lam1, lam2 = Fraction(nu), Fraction(lam1), Fraction(lam2)
    if lam1 == nu:
        raise UsageError("reference eigenvalue equals nu")
    return (lam2 - nu) / (lam1 - nu)


def rational_gcd(values):
    """positive gcd of rationals (gcd of numerators over lcm of denominators)"""
    values = [Fraction(v) for v in values if v]
    if not values:
        return Fraction(0)
    num = reduce(gcd, (abs(v.numerator) for v in values))
    den = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in values))
    return Fraction(num, den)


def exponent_pattern(eigenvalues, reference=0):
    """(beta, m) with eigenvalues[i] / eigenvalues[reference] = 1 + beta * m[i]

    beta is the positive rational gcd of the normalized differences,
    so the m[i] are coprime integers and m[reference] = 0.

    >>> exponent_pattern([1, 3, 2])
    (Fraction(1, 1), [0, 2, 1])
    """
    eigenvalues = [Fraction(v) for v in eigenvalues]
    base = eigenvalues[reference]
    if not base:
        raise UsageError("reference eigenvalue is zero")
    deltas = [v / base - 1 for v in eigenvalues]
    beta = rational_gcd(deltas)
    if not beta:
        raise UsageError("eigenvalues are not distinct")
    return beta, [int(d / beta) for d in deltas]


def affine_pattern(values, reference=0, orientation=1):
    """integers m with values[i] = values[reference] + orientation * delta * m[i], gcd 1"""
    values = [Fraction(v) for v in values]
    diffs = [v - values[reference] for v in values]
    delta = rational_gcd(diffs)
    if not delta:
        raise UsageError("values are not distinct")
    return delta, [int(orientation * d / delta) for d in diffs]


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
