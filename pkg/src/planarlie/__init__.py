# -*- coding: utf-8 -*-
"""planarlie computes with finite-dimensional Lie algebras of planar
vector fields whose coefficients are rational functions in x and y.

Example use:

>>> from planarlie.parser import Parser
>>> from planarlie.structure import close
>>> from planarlie.classify import classify

>>> pp = Parser()
>>> gens = pp.parse_derivation_list("dx; y dx; dy")
>>> L = close(gens)
>>> L.dim
3
>>> str(classify(L).ttype)
'T3{n=1, lambda=0}'

"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import re
import warnings

import pkg_resources

from .config import global_config  # noqa (importing symbol)

_logger = logging.getLogger(__name__)


_is_released_version = False
try:
    __version__ = pkg_resources.get_distribution("planar-lie").version
    if re.match(r"^\d+\.\d+\.\d+$", __version__) is not None:
        _is_released_version = True
except pkg_resources.DistributionNotFound:
    warnings.warn("can't get __version__ because %s package isn't installed" % __package__, Warning)
    __version__ = None


_logger.info("planarlie " + str(__version__) + "; released: " + str(_is_released_version))

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
