# -*- coding: utf-8 -*-
"""Exact polynomials and rational functions in x and y over the rationals

Classes:

  * :class:`Poly` -- a polynomial in x, y with rational coefficients
  * :class:`RatFunc` -- a normalized quotient of two Polys

Polynomials are kept as sympy sparse ring elements over QQ with the
graded lexicographic order (x > y).  A RatFunc is always stored in
lowest terms with a monic denominator, so equal values have equal
representations.

>>> x, y = RatFunc.variable("x"), RatFunc.variable("y")
>>> str((x**2 - y**2) / (x - y))
'x + y'
>>> str(partial(y / x, "x"))
'-y/(x^2)'

Univariate operations treat the single variable that occurs as the
variable `t`; on input `t` is read as `x`.

"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import numbers
from fractions import Fraction

import attr
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring

from planarlie.config import global_config
from planarlie.exceptions import (
    DegreeCapExceeded,
    DivisionByZero,
    MultivariateInput,
    ReducibleModulus,
    UsageError,
    ZeroInput,
)

_logger = logging.getLogger(__name__)

RING, _X, _Y = ring("x,y", QQ, grlex)

_GENERATORS = {"x": _X, "y": _Y, "t": _X}
_VARIABLE_INDEX = {"x": 0, "y": 1, "t": 0}


def to_fraction(c):
    """convert a ground-domain element (or any rational) to a Fraction"""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, numbers.Integral):
        return Fraction(int(c))
    return Fraction(int(c.numerator), int(c.denominator))


def to_ground(c):
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def format_rational(c):
    """render a rational as `p/q` in lowest terms, integers without `/1`

    >>> format_rational(Fraction(6, 4))
    '3/2'
    >>> format_rational(Fraction(-4, 2))
    '-2'
    """
    c = to_fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "{0}/{1}".format(c.numerator, c.denominator)


def _format_monomial(monom):
    parts = []
    for name, e in zip("xy", monom):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("{0}^{1}".format(name, e))
    return "*".join(parts)


@attr.s(slots=True, frozen=True, repr=False, eq=True, hash=True)
class Poly(object):
    """a bivariate polynomial over the rationals

    `p` is the underlying sympy ring element.
    """

    p = attr.ib(default=RING.zero)

    @classmethod
    def from_terms(cls, terms):
        """build from a mapping {(i, j): rational}; zero coefficients are dropped"""
        return cls(RING.from_dict({m: to_ground(c) for m, c in terms.items() if c != 0}))

    @classmethod
    def constant(cls, c):
        return cls(RING.ground_new(to_ground(c)))

    @classmethod
    def variable(cls, name):
        try:
            return cls(_GENERATORS[name])
        except KeyError:
            raise UsageError("unknown variable {!r}".format(name))

    @property
    def terms(self):
        return {m: to_fraction(c) for m, c in self.p.items()}

    @property
    def is_zero(self):
        return not self.p

    @property
    def is_constant(self):
        return self.p.is_ground

    @property
    def leading_coefficient(self):
        return to_fraction(self.p.LC)

    @property
    def variables(self):
        """names of the variables that occur, in the order x, y"""
        occurring = set()
        for (i, j) in self.p.monoms():
            if i:
                occurring.add("x")
            if j:
                occurring.add("y")
        return tuple(v for v in "xy" if v in occurring)

    def degree(self, var=None):
        """total degree, or degree in `var`; -1 for the zero polynomial"""
        if self.is_zero:
            return -1
        if var is None:
            return max(i + j for (i, j) in self.p.monoms())
        k = _VARIABLE_INDEX[var]
        return max(m[k] for m in self.p.monoms())

    def sort_key(self):
        return (self.degree(), [(m, to_fraction(c)) for m, c in self.p.terms()])

    def monic(self):
        return self if self.is_zero else Poly(self.p.monic())

    def diff(self, var):
        return Poly(self.p.diff(_GENERATORS[var]))

    def __add__(self, other):
        return Poly(self.p + other.p)

    def __sub__(self, other):
        return Poly(self.p - other.p)

    def __mul__(self, other):
        return Poly(self.p * other.p)

    def __neg__(self):
        return Poly(-self.p)

    def __pow__(self, k):
        return Poly(self.p ** k)

    def format(self, conf=None):
        if self.is_zero:
            return "0"
        out = []
        for monom, c in self.p.terms():
            c = to_fraction(c)
            mono = _format_monomial(monom)
            if not mono:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = format_rational(abs(c)) + "*" + mono
            if not out:
                out.append("-" + body if c < 0 else body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "{0}({1})".format(self.__class__.__name__, self.format())


def poly_gcd(p, q):
    """greatest common divisor with leading coefficient 1; gcd(0, 0) = 0

    >>> str(poly_gcd(Poly.from_terms({(2, 0): 1, (0, 2): -1}), Poly.from_terms({(1, 0): 1, (0, 1): -1})))
    'x - y'
    >>> str(poly_gcd(Poly(), Poly.from_terms({(1, 0): 3})))
    'x'
    """
    if p.is_zero and q.is_zero:
        return Poly()
    return Poly(p.p.gcd(q.p)).monic()


@attr.s(slots=True, frozen=True, repr=False, eq=True, hash=True)
class RatFunc(object):
    """a rational function num/den in lowest terms with monic den"""

    num = attr.ib(default=attr.Factory(Poly))
    den = attr.ib(default=attr.Factory(lambda: Poly.constant(1)))

    def __attrs_post_init__(self):
        num, den = self.num.p, self.den.p
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            num, den = RING.zero, RING.one
        else:
            g = num.gcd(den)
            if not g.is_ground:
                num, den = num.exquo(g), den.exquo(g)
            lc = den.LC
            if lc != 1:
                num, den = num.quo_ground(lc), den.quo_ground(lc)
        object.__setattr__(self, "num", Poly(num))
        object.__setattr__(self, "den", Poly(den))

    @classmethod
    def constant(cls, c):
        return cls(Poly.constant(c))

    @classmethod
    def variable(cls, name):
        return cls(Poly.variable(name))

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def coerce(cls, v):
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, Poly):
            return cls(v)
        if isinstance(v, (numbers.Rational, Fraction)):
            return cls.constant(v)
        raise UsageError("cannot interpret {!r} as a rational function".format(v))

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_constant(self):
        return self.num.is_constant and self.den.is_constant

    @property
    def constant_value(self):
        """the value of a constant rational function"""
        assert self.is_constant
        if self.is_zero:
            return Fraction(0)
        return self.num.leading_coefficient / self.den.leading_coefficient

    @property
    def is_polynomial(self):
        return self.den.is_constant

    @property
    def variables(self):
        occurring = set(self.num.variables) | set(self.den.variables)
        return tuple(v for v in "xy" if v in occurring)

    def univariate_variable(self):
        """the single variable of a univariate function ("x" for constants)"""
        vs = self.variables
        if len(vs) > 1:
            raise MultivariateInput("{} involves both x and y".format(self))
        return vs[0] if vs else "x"

    def __add__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(
            Poly(self.num.p * other.den.p + other.num.p * self.den.p),
            Poly(self.den.p * other.den.p),
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(Poly(self.num.p * other.num.p), Poly(self.den.p * other.den.p))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.coerce(other)
        if other.is_zero:
            raise DivisionByZero("division of {} by zero".format(self))
        return RatFunc(Poly(self.num.p * other.den.p), Poly(self.den.p * other.num.p))

    __div__ = __truediv__

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            if self.is_zero:
                raise DivisionByZero("zero raised to a negative power")
            return RatFunc(self.den ** (-k), self.num ** (-k))
        return RatFunc(self.num ** k, self.den ** k)

    def format(self, conf=None):
        if self.den.is_constant:
            return self.num.format()
        num = self.num.format()
        if len(self.num.p) > 1:
            num = "(" + num + ")"
        return "{0}/({1})".format(num, self.den.format())

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "{0}({1})".format(self.__class__.__name__, self.format())


_OPERATIONS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def arith(lhs, op, rhs):
    """apply a field operation (`add`, `sub`, `mul` or `div`)"""
    try:
        fxn = _OPERATIONS[op]
    except KeyError:
        raise UsageError("unknown operation {!r}".format(op))
    return fxn(RatFunc.coerce(lhs), RatFunc.coerce(rhs))


def partial(f, var):
    """partial derivative of f with respect to `var` (x, y, or t meaning x)"""
    if var not in _GENERATORS:
        raise UsageError("unknown variable {!r}".format(var))
    f = RatFunc.coerce(f)
    n, d = f.num, f.den
    if d.is_constant:
        return RatFunc(n.diff(var), d)
    return RatFunc(n.diff(var) * d - n * d.diff(var), d * d)


def _check_univariate(p):
    if p.is_zero:
        raise ZeroInput("zero polynomial")
    if len(p.variables) > 1:
        raise MultivariateInput("{} involves both x and y".format(p))


def factor_univariate(p, degree_cap=None):
    """factor a univariate polynomial over the rationals

    Returns ``(factors, unit)``; factors are ``(Poly, exponent)`` pairs
    with monic irreducible, pairwise distinct factors ordered by degree.

    >>> t = Poly.variable("t")
    >>> factors, unit = factor_univariate(t**4 - Poly.constant(1))
    >>> [(str(f), k) for f, k in factors], unit
    ([('x - 1', 1), ('x + 1', 1), ('x^2 + 1', 1)], Fraction(1, 1))
    """
    _check_univariate(p)
    if degree_cap is None:
        degree_cap = global_config.polyrat.degree_cap
    if p.degree() > degree_cap:
        raise DegreeCapExceeded(
            "degree {d} exceeds cap {c}".format(d=p.degree(), c=degree_cap)
        )
    return _factor(p)


def _factor(p):
    coeff, raw = p.p.factor_list()
    unit = to_fraction(coeff)
    factors = []
    for f, k in raw:
        unit *= to_fraction(f.LC) ** k
        factors.append((Poly(f.monic()), k))
    factors.sort(key=lambda fk: fk[0].sort_key())
    return factors, unit


def rational_roots(p):
    """rational roots of a univariate polynomial with multiplicities, ascending

    No degree cap applies; factorization is done by sympy directly.

    >>> x = Poly.variable("x")
    >>> rational_roots((x - Poly.constant(1))**2 * (x**2 + Poly.constant(1)))
    [(Fraction(1, 1), 2)]
    """
    _check_univariate(p)
    factors, _ = _factor(p)
    roots = []
    for f, k in factors:
        if f.degree() == 1:
            terms = f.terms
            const = terms.get((0, 0), Fraction(0))
            roots.append((-const, k))
    return sorted(roots)


def _exact_quotient(a, b):
    try:
        return a.exquo(b)
    except ExactQuotientFailed:
        return None


def ord_p(f, p):
    """exponent of the irreducible polynomial p in the rational function f

    >>> t = RatFunc.variable("t")
    >>> ord_p(t**2 * (t + 1), Poly.variable("t"))
    2
    >>> ord_p(partial(t**2, "t") / t**2, Poly.variable("t"))
    -1
    """
    f = RatFunc.coerce(f)
    if f.is_zero:
        raise ZeroInput("ord_p of the zero function")
    _check_univariate(p)
    factors, _ = _factor(p)
    if p.is_constant or len(factors) != 1 or factors[0][1] != 1:
        raise ReducibleModulus("{} is not irreducible".format(p))
    modulus = p.p

    def multiplicity(a):
        k = 0
        q = _exact_quotient(a, modulus)
        while q is not None:
            k += 1
            a = q
            q = _exact_quotient(a, modulus)
        return k

    return multiplicity(f.num.p) - multiplicity(f.den.p)


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
