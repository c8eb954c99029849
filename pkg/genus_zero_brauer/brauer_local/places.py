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

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Tuple

from sympy import nextprime, primefactors, sqrt_mod

from genus_zero_brauer.exact_algebra.parsing import ParseException
from genus_zero_brauer.exact_algebra.rationals import is_squarefree
from genus_zero_brauer.exact_algebra.symbols import PlaceQ, legendre_symbol, parse_place_q


class SplittingKind(Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"
    REAL_PAIR = "real pair"
    COMPLEX = "complex"


PAIRED_KINDS = (SplittingKind.SPLIT, SplittingKind.REAL_PAIR)
FIXED_FINITE_KINDS = (SplittingKind.INERT, SplittingKind.RAMIFIED)


def check_field_parameter(d: int):
    if d in (0, 1) or not is_squarefree(d):
        raise ValueError(f"d={d} is not a squarefree integer other than 0 and 1")


def splitting_type(base: PlaceQ, d: int) -> SplittingKind:
    check_field_parameter(d)
    if base.is_real:
        return SplittingKind.REAL_PAIR if d > 0 else SplittingKind.COMPLEX
    p = base.prime
    if d % p == 0:
        return SplittingKind.RAMIFIED
    if p == 2:
        if d % 8 == 1:
            return SplittingKind.SPLIT
        return SplittingKind.INERT if d % 8 == 5 else SplittingKind.RAMIFIED
    return SplittingKind.SPLIT if legendre_symbol(d, p) == 1 else SplittingKind.INERT


@dataclass(frozen=True)
class PlaceL:
    """
    A place of l = Q(sqrt(d)) over *base*. The two places over a split prime or over the real place carry index
    0 and 1; index 0 is where sqrt(d) maps to the root returned by split_root (the positive root at the real
    place), and sigma exchanges the indices.
    """
    base: PlaceQ
    kind: SplittingKind
    index: int = 0

    def __post_init__(self):
        if self.index not in (0, 1) or (self.index == 1 and self.kind not in PAIRED_KINDS):
            raise ValueError(f"index {self.index} is invalid for a {self.kind.value} place")

    @property
    def is_archimedean(self) -> bool:
        return self.base.is_real

    @property
    def is_paired(self) -> bool:
        return self.kind in PAIRED_KINDS

    def conjugate(self) -> 'PlaceL':
        return PlaceL(self.base, self.kind, 1 - self.index) if self.is_paired else self

    def sort_key(self) -> Tuple:
        return self.base.sort_key() + (self.index,)

    def __str__(self):
        return f"{self.base}.{self.index}" if self.is_paired else str(self.base)


def places_over(base: PlaceQ, d: int) -> List[PlaceL]:
    kind = splitting_type(base, d)
    if kind in PAIRED_KINDS:
        return [PlaceL(base, kind, 0), PlaceL(base, kind, 1)]
    return [PlaceL(base, kind)]


def place_of(base: PlaceQ, d: int, index: int = 0) -> PlaceL:
    return PlaceL(base, splitting_type(base, d), index)


def split_root(place: PlaceL, d: int, precision: int = 1) -> int:
    """
    The image of sqrt(d) at a split place: a residue mod p^precision, or mod 2^(precision+1) at p = 2. Index 0
    takes the root that is least mod p; at p = 2 it takes the 2-adic root that is 1 mod 4.
    """
    if place.kind != SplittingKind.SPLIT:
        raise ValueError(f"{place} is not a split place")
    p = place.base.prime
    if p == 2:
        modulus = 2 ** (precision + 1)
        root = min(r for r in sqrt_mod(d, 2 * modulus, all_roots=True) if r % 4 == 1) % modulus
    else:
        modulus = p ** precision
        roots = sqrt_mod(d, modulus, all_roots=True)
        least = min(r % p for r in roots)
        root = next(r for r in roots if r % p == least)
    return root if place.index == 0 else (-root) % modulus


@lru_cache(maxsize=256)
def balancing_candidates(d: int, count: int) -> Tuple[PlaceL, ...]:
    """the first *count* inert primes of l in increasing order, followed by the ramified primes"""
    check_field_parameter(d)
    inert, p = [], 2
    while len(inert) < count:
        if splitting_type(PlaceQ(p), d) == SplittingKind.INERT:
            inert.append(PlaceL(PlaceQ(p), SplittingKind.INERT))
        p = nextprime(p)
    ramified = [PlaceL(PlaceQ(q), SplittingKind.RAMIFIED) for q in sorted(_ramified_primes(d))]
    return tuple(inert + ramified)


def _ramified_primes(d: int) -> List[int]:
    primes = set(primefactors(abs(d)))
    if d % 4 in (2, 3):
        primes.add(2)
    return list(primes)


def parse_place_l(text: str, d: int) -> PlaceL:
    """'7.0', '7.1' for split primes, '3' for inert or ramified ones, 'inf.0', 'inf.1' or 'inf' at infinity"""
    text = text.strip()
    base_text, _, index_text = text.partition(".")
    try:
        base = parse_place_q(base_text)
    except ValueError as e:
        raise ParseException(str(e), text, 0) from e
    kind = splitting_type(base, d)
    if kind in PAIRED_KINDS:
        if index_text not in ("0", "1"):
            raise ParseException(f"the {kind.value} place {base_text} needs an index .0 or .1", text, len(base_text))
        return PlaceL(base, kind, int(index_text))
    if index_text:
        raise ParseException(f"the {kind.value} place {base_text} takes no index", text, len(base_text))
    return PlaceL(base, kind)
