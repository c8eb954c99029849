#
#  Copyright (c) 2022 IBM Corp.
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#

import abc

from typing import Mapping, Optional, Type

from genus_zero_brauer.exact_algebra.rationals import RationalLike
from genus_zero_brauer.brauer_local.brauer_elem import BrauerElem
from genus_zero_brauer.kummer_chars.characters import Char2L, Char2P
from genus_zero_brauer.kummer_chars.irreducible import IrredPoly


class S1Table:
    """
    Base class for the Br(l) row of s* on characters, s_1^* = s_u1^* + sum_p s_p1^*: a homomorphism from the
    order-2 characters chi_u + sum chi_p to Br(l)[2]. s* is an involution only if T(s*(chi)) = sigma(T(chi)) for
    every chi.
    """
    @abc.abstractmethod
    def evaluate(self, d: int, chi_u: Optional[Char2L], chis: Mapping[IrredPoly, Char2P],
                 c: RationalLike) -> BrauerElem:
        """
        :param d: the field parameter of l = Q(sqrt(d))
        :param chi_u: the character at u, None when trivial
        :param chis: the characters at the places p other than u
        :param c: the conic parameter of s(u) = c/u
        """


class S1TableType:
    def __init__(self, cls: Type[S1Table]):
        self.cls = cls
        self.name = cls.__name__
