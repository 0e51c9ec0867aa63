"""simplified imports for the planarlie package

`planarlie.easy` provides a single import path and objects that are
instantiated with common defaults::

    >>> from planarlie.easy import parse_list, close, classify
    >>> str(classify(close(parse_list("dx; y dx; dy"))))
    'T3{n=1, lambda=0}'

It also introduces functional forms for the parser methods::

    >>> from planarlie.easy import parse, bracket
    >>> str(bracket(parse("dy - x dx"), parse("dx")))
    'dx'

"""

from planarlie import __version__, global_config  # noqa: F401
from planarlie.catalog import (  # noqa: F401
    TheoremType,
    abstract_table,
    realize,
    verify_realization,
)
from planarlie.classify import classify, round_trip  # noqa: F401
from planarlie.parser import Parser
from planarlie.ratlemma import log_derivative_obstruction, power_decompose  # noqa: F401
from planarlie.structure import close, series  # noqa: F401
from planarlie.vectorfield import apply, bracket  # noqa: F401

# provide standard abbreviated, short, and long names for instances
pp = parser = planarlie_parser = Parser()

# functionalized forms of common methods
parse = parser.parse
parse_list = parser.parse_derivation_list
parse_ratfunc = parser.parse_ratfunc
catalog_type = TheoremType.make

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
