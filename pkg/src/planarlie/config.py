# -*- coding: utf-8 -*-
"""Package-wide settings for planarlie, available as
`planarlie.global_config`.

Settings come from ``_data/defaults.ini``, one section per module
that reads them: the factorization degree cap (polyrat), the closure
dimension cap (structure), the split-element search (classify), and
the command-line defaults (cli, formatting).  Sections are attributes
and values are typed on lookup ("True" becomes True, "12" becomes 12,
"None" becomes None).  Assigning a value stores its string form, so
a changed cap takes effect on the next call that reads it.

>>> from planarlie.config import global_config
>>> global_config.structure.dim_cap
16
>>> global_config.polyrat.degree_cap
12

"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
from configparser import ConfigParser

from pkg_resources import resource_stream

_logger = logging.getLogger(__name__)


class Config(object):
    """settings sections of an ini file, looked up as attributes"""

    def __init__(self):
        self.__dict__["_cp"] = ConfigParser()

    def read_stream(self, flo):
        """read settings from an ini-formatted binary stream"""
        self._cp.read_string(flo.read().decode("ascii"))

    def read_file(self, path):
        with open(path, "rb") as flo:
            self.read_stream(flo)

    def __dir__(self):
        return self._cp.sections()

    def __getattr__(self, k):
        if not self._cp.has_section(k):
            raise AttributeError(k)
        return ConfigSection(self._cp[k])


class ConfigSection(object):
    """the settings of one module"""

    def __init__(self, section):
        self.__dict__["_section"] = section

    def __getattr__(self, k):
        try:
            return _typed(self._section[k])
        except KeyError:
            raise AttributeError(k)

    def __setattr__(self, k, v):
        _logger.info("setting {s}.{k} = {v}".format(s=self._section.name, k=k, v=v))
        self._section[k] = str(v)

    def ints(self, k):
        """whitespace-separated integer list setting"""
        return [int(tok) for tok in self._section[k].split()]


def _typed(v):
    if v in ("True", "False", "None"):
        return {"True": True, "False": False, "None": None}[v]
    try:
        return int(v)
    except ValueError:
        return v


global_config = Config()
global_config.read_stream(resource_stream(__name__, "_data/defaults.ini"))

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
