# -*- coding: utf-8 -*-
"""start IPython shell with planarlie initialized. Intended to be used for
experimenting, debugging, and generating bug reports."""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import os

import IPython

header_string = """############################################################################
planar-lie-shell -- interactive planarlie
planarlie version: {v}
closure dimension cap: {cap}

The following variables are defined:
* global_config
* pp, parser, planarlie_parser -- Parser instance

The following functions are available:
  * parse, parse_list, parse_ratfunc
  * bracket, apply, close, series, classify
  * catalog_type, realize, abstract_table, verify_realization, round_trip
  * power_decompose, log_derivative_obstruction

When submitting bug reports, include the version header shown above
and use these variables/variable names whenever possible.

"""


def shell():
    logging.basicConfig(level=os.environ.get("PLANARLIE_LOGGING_LEVEL", logging.WARNING))

    from planarlie.easy import (  # noqa: F401; instances; functionalized methods
        __version__,
        abstract_table,
        apply,
        bracket,
        catalog_type,
        classify,
        close,
        global_config,
        log_derivative_obstruction,
        parse,
        parse_list,
        parse_ratfunc,
        parser,
        planarlie_parser,
        power_decompose,
        pp,
        realize,
        round_trip,
        series,
        verify_realization,
    )

    IPython.embed(
        header=header_string.format(v=__version__, cap=global_config.structure.dim_cap)
    )

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
