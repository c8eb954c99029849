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

import functools

from dataclasses import dataclass
from enum import Enum

from genus_zero_brauer.exact_algebra.parsing import ParseException


class OrdinalKind(Enum):
    FINITE = 0
    OMEGA_PLUS = 1
    OMEGA_TWO = 2
    INFINITY = 3


@functools.total_ordering
@dataclass(frozen=True)
class Ordinal:
    """
    Heights and Ulm levels of the groups in scope: Finite(m) < OmegaPlus(m') < OmegaTwo < Infinity.
    Infinity is the height of every element of the divisible subgroup, the zero element included.
    """
    kind: OrdinalKind
    m: int = 0

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"negative ordinal offset {self.m}")
        if self.kind in (OrdinalKind.OMEGA_TWO, OrdinalKind.INFINITY) and self.m != 0:
            raise ValueError(f"{self.kind.name} takes no offset")

    @classmethod
    def finite(cls, m: int) -> 'Ordinal':
        return cls(OrdinalKind.FINITE, m)

    @classmethod
    def omega_plus(cls, m: int = 0) -> 'Ordinal':
        return cls(OrdinalKind.OMEGA_PLUS, m)

    def __lt__(self, other: 'Ordinal'):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return (self.kind.value, self.m) < (other.kind.value, other.m)

    @property
    def is_finite(self) -> bool:
        return self.kind == OrdinalKind.FINITE

    @property
    def is_infinity(self) -> bool:
        return self.kind == OrdinalKind.INFINITY

    def __add__(self, n: int) -> 'Ordinal':
        """ordinal successor iterated n times"""
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        if n == 0 or self.kind == OrdinalKind.INFINITY:
            return self
        if self.kind == OrdinalKind.OMEGA_TWO:
            raise ValueError("levels beyond omega*2 are out of range")
        return Ordinal(self.kind, self.m + n)

    def predecessor(self) -> 'Ordinal':
        if self.kind not in (OrdinalKind.FINITE, OrdinalKind.OMEGA_PLUS) or \
                (self.kind == OrdinalKind.OMEGA_PLUS and self.m == 0) or \
                (self.kind == OrdinalKind.FINITE and self.m == 0):
            raise ValueError(f"{self} is not a successor ordinal")
        return Ordinal(self.kind, self.m - 1)

    def __str__(self):
        if self.kind == OrdinalKind.FINITE:
            return str(self.m)
        if self.kind == OrdinalKind.OMEGA_PLUS:
            return "ω" if self.m == 0 else f"ω+{self.m}"
        if self.kind == OrdinalKind.OMEGA_TWO:
            return "ω2"
        return "∞"

    def __repr__(self):
        return f"Ordinal({self})"


OMEGA = Ordinal.omega_plus(0)
OMEGA_TWO = Ordinal(OrdinalKind.OMEGA_TWO)
INFINITY = Ordinal(OrdinalKind.INFINITY)

_OMEGA_SPELLINGS = ("omega", "ω", "w")


def parse_ordinal(text: str) -> Ordinal:
    """
    Accepts "3", "ω", "w", "omega", "ω+2", "w+2", "ω2", "w2", "omega2", "∞" and "inf".
    """
    token = text.strip().replace(" ", "")
    if token.isdigit():
        return Ordinal.finite(int(token))
    if token in ("∞", "inf", "infinity"):
        return INFINITY
    for spelling in _OMEGA_SPELLINGS:
        if not token.startswith(spelling):
            continue
        rest = token[len(spelling):]
        if rest == "":
            return OMEGA
        if rest in ("2", "*2"):
            return OMEGA_TWO
        if rest.startswith("+") and rest[1:].isdigit():
            return Ordinal.omega_plus(int(rest[1:]))
    raise ParseException(f"'{text}' is not an ordinal below ω2 or ∞", text, 0)
