# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

from enum import Enum


class OrderedEnum(Enum):
    """Enum whose members order by value within one enum class"""

    def _check(self, other):
        assert self.__class__ is other.__class__, "OrderedEnum can only compare to OrderedEnum"

    def __ge__(self, other):
        self._check(other)
        return self.value >= other.value

    def __gt__(self, other):
        self._check(other)
        return self.value > other.value

    def __le__(self, other):
        self._check(other)
        return self.value <= other.value

    def __lt__(self, other):
        self._check(other)
        return self.value < other.value


ValidationLevel = OrderedEnum("ValidationLevel", "VALID WARNING ERROR")

TypeKind = OrderedEnum("TypeKind", "T1 T2 T3 T4 T5 T6 T7 T8 T9 T10 T11 T12")

SeriesKind = OrderedEnum("SeriesKind", "derived lower_central")

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
