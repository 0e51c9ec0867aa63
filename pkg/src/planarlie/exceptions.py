# -*- coding: utf-8 -*-
"""defined exceptions used by the planarlie package

All exceptions derive from PlanarLieError.  The command line maps
ParseError and UsageError to exit status 1 and every other
PlanarLieError to exit status 2.

"""

from __future__ import absolute_import, division, print_function, unicode_literals


class PlanarLieError(Exception):
    pass


class DivisionByZero(PlanarLieError):
    pass


class DegreeCapExceeded(PlanarLieError):
    pass


class MultivariateInput(PlanarLieError):
    """Raised when a univariate polynomial or rational function was required"""

    pass


class ZeroInput(PlanarLieError):
    pass


class ReducibleModulus(PlanarLieError):
    pass


class NonSquare(PlanarLieError):
    pass


class DimensionCapExceeded(PlanarLieError):
    """Raised when a closure grows past the dimension cap; the generated
    algebra is infinite-dimensional or the cap is too low"""

    pass


class NotInSpan(PlanarLieError):
    pass


class NotMember(PlanarLieError):
    pass


class NonRationalSpectrum(PlanarLieError):
    """Raised when an adjoint operator needed by the analysis has
    eigenvalues outside the rationals"""

    pass


class NotProportional(PlanarLieError):
    pass


class ConstantInput(PlanarLieError):
    pass


class FactorMismatch(PlanarLieError):
    pass


class NoWitness(PlanarLieError):
    pass


class BadParameters(PlanarLieError):
    pass


class NoMatchWithinFamily(PlanarLieError):
    """Raised when realized structure constants cannot be matched to the
    abstract table by any admissible rescaling

    Both tables are kept on the exception for reporting.
    """

    def __init__(self, message, realized=None, expected=None):
        super(NoMatchWithinFamily, self).__init__(message)
        self.realized = realized
        self.expected = expected


class NotInCatalog(PlanarLieError):
    pass


class ParseError(PlanarLieError):
    pass


class UsageError(PlanarLieError):
    """Exception raised when client/caller has made an invalid request"""

    pass


class InternalError(PlanarLieError):
    """Exception raised when an internal consistency check fails"""

    pass

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
