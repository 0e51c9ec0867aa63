# -*- coding: utf-8 -*-
"""Derivations of the field of rational functions in x and y

A :class:`Derivation` is a planar vector field a dx + b dy, with a and b
rational functions.  Brackets are computed componentwise on the
standard basis.

>>> dx, x = Derivation.dx(), RatFunc.variable("x")
>>> str(bracket(dx, scale(-x * x, dx)))
'-2*x dx'

"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging

import attr

from planarlie.exceptions import UsageError
from planarlie.polyrat import RatFunc, partial

_logger = logging.getLogger(__name__)


def _coefficient_text(c):
    """text of a nonzero coefficient with its sign pulled out; ("", "") is 1"""
    negative = c.num.leading_coefficient < 0
    if negative:
        c = -c
    if c.is_constant and c.constant_value == 1:
        body = ""
    else:
        body = c.format()
        if c.den.is_constant and len(c.num.p) > 1:
            body = "(" + body + ")"
    return negative, body


@attr.s(slots=True, frozen=True, repr=False, eq=True, hash=True)
class Derivation(object):
    coef_x = attr.ib(default=attr.Factory(RatFunc), converter=RatFunc.coerce)
    coef_y = attr.ib(default=attr.Factory(RatFunc), converter=RatFunc.coerce)

    @classmethod
    def dx(cls):
        return cls(RatFunc.one(), RatFunc.zero())

    @classmethod
    def dy(cls):
        return cls(RatFunc.zero(), RatFunc.one())

    @property
    def is_zero(self):
        return self.coef_x.is_zero and self.coef_y.is_zero

    @property
    def coefficients(self):
        return (self.coef_x, self.coef_y)

    def __call__(self, f):
        return apply(self, f)

    def __add__(self, other):
        return Derivation(self.coef_x + other.coef_x, self.coef_y + other.coef_y)

    def __sub__(self, other):
        return Derivation(self.coef_x - other.coef_x, self.coef_y - other.coef_y)

    def __neg__(self):
        return Derivation(-self.coef_x, -self.coef_y)

    def format(self, conf=None):
        parts = []
        for c, basis in ((self.coef_x, "dx"), (self.coef_y, "dy")):
            if c.is_zero:
                continue
            negative, body = _coefficient_text(c)
            term = (body + " " + basis) if body else basis
            if not parts:
                parts.append("-" + term if negative else term)
            else:
                parts.append(("- " if negative else "+ ") + term)
        return " ".join(parts) if parts else "0"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "{0}({1})".format(
            self.__class__.__name__,
            ", ".join((a.name + "=" + str(getattr(self, a.name))) for a in self.__attrs_attrs__),
        )


def apply(D, f):
    """D(f) = coef_x * df/dx + coef_y * df/dy"""
    f = RatFunc.coerce(f)
    return D.coef_x * partial(f, "x") + D.coef_y * partial(f, "y")


def bracket(D, E):
    """the commutator [D, E] = D E - E D"""
    return Derivation(
        apply(D, E.coef_x) - apply(E, D.coef_x),
        apply(D, E.coef_y) - apply(E, D.coef_y),
    )


def scale(f, D):
    f = RatFunc.coerce(f)
    return Derivation(f * D.coef_x, f * D.coef_y)


def cross(D, E):
    """the 2x2 coefficient determinant D.x E.y - D.y E.x"""
    return D.coef_x * E.coef_y - D.coef_y * E.coef_x


def rank_over_R(ds):
    """rank of a family of derivations as vectors over the rational function field

    >>> dx, dy = Derivation.dx(), Derivation.dy()
    >>> rank_over_R([dx, dy])
    2
    """
    ds = list(ds)
    if not ds:
        raise UsageError("rank_over_R needs at least one derivation")
    nonzero = [d for d in ds if not d.is_zero]
    if not nonzero:
        return 0
    first = nonzero[0]
    for d in nonzero[1:]:
        if not cross(first, d).is_zero:
            return 2
    return 1


def ratio(D, D1):
    """the rational function a with D = a D1, or None

    D1 must be nonzero.
    """
    if D1.is_zero:
        raise UsageError("ratio against the zero derivation")
    if not cross(D, D1).is_zero:
        return None
    if not D1.coef_x.is_zero:
        return D.coef_x / D1.coef_x
    return D.coef_y / D1.coef_y


def r_coordinates(D, D1, D2):
    """(a, b) with D = a D1 + b D2 for D1, D2 independent over the rational functions"""
    w = cross(D1, D2)
    if w.is_zero:
        raise UsageError("{} and {} are dependent over the rational functions".format(D1, D2))
    return cross(D, D2) / w, cross(D1, D) / w


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
