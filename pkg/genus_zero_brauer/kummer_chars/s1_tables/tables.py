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

from fractions import Fraction
from typing import Mapping, Optional

from genus_zero_brauer.exact_algebra.rationals import RationalLike
from genus_zero_brauer.brauer_local.brauer_elem import BrauerElem, galois_act, quaternion_invariants, \
    restriction_from_q
from genus_zero_brauer.kummer_chars.characters import Char2L, Char2P, cor_char, s_star_characters
from genus_zero_brauer.kummer_chars.irreducible import IrredPoly
from genus_zero_brauer.kummer_chars.s1_tables.s1_table_api import S1Table


class ZeroTable(S1Table):
    def evaluate(self, d: int, chi_u: Optional[Char2L], chis: Mapping[IrredPoly, Char2P],
                 c: RationalLike) -> BrauerElem:
        return BrauerElem.zero(d)


class HilbertPairingTable(S1Table):
    """
    T = g - sigma o g o s*, where g sends chi_u + sum chi_p to the restriction to l of the quaternion algebra
    (N(e), t) over Q, e the representative of chi_u * Cor(sum chi_p). g is a homomorphism on square classes, so T
    satisfies T o s* = -sigma o T and keeps s* an involution.
    """
    def __init__(self, pairing_parameter: int = -1):
        self.pairing_parameter = pairing_parameter

    def _pairing(self, d: int, chi_u: Optional[Char2L], chis: Mapping[IrredPoly, Char2P]) -> BrauerElem:
        norm = Fraction(1)
        for chi in [chi_u] + [cor_char(chi_p) for chi_p in chis.values()]:
            if chi is not None:
                norm *= chi.e.norm()
        return restriction_from_q(quaternion_invariants(norm, self.pairing_parameter), d)

    def evaluate(self, d: int, chi_u: Optional[Char2L], chis: Mapping[IrredPoly, Char2P],
                 c: RationalLike) -> BrauerElem:
        image_u, image_chis = s_star_characters(chi_u, chis, c)
        return self._pairing(d, chi_u, chis) - galois_act(self._pairing(d, image_u, image_chis))
