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
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from genus_zero_brauer.definitions import DEFAULT_BALANCING_UNIVERSE_SIZE
from genus_zero_brauer.exact_algebra.dyadic import Dyadic, parse_dyadic
from genus_zero_brauer.exact_algebra.parsing import ParseException
from genus_zero_brauer.exact_algebra.rationals import RationalLike
from genus_zero_brauer.exact_algebra.symbols import PlaceQ, hilbert_symbols
from genus_zero_brauer.brauer_local.places import PlaceL, SplittingKind, balancing_candidates, \
    check_field_parameter, parse_place_l, places_over, splitting_type

HALF = Dyadic(Fraction(1, 2))


class BalancingPlaceException(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(message)


@dataclass(frozen=True)
class BrauerElem:
    """
    An element of Br(l)_2 for l = Q(sqrt(d)), given by its nonzero local invariants. The invariants sum to zero,
    lie in {0, 1/2} at the real places and vanish at a complex place.
    """
    d: int
    invariants: Tuple[Tuple[PlaceL, Dyadic], ...] = ()

    def __post_init__(self):
        check_field_parameter(self.d)
        merged: Dict[PlaceL, Dyadic] = {}
        for place, value in self.invariants:
            if splitting_type(place.base, self.d) != place.kind:
                raise ValueError(f"{place} is not a place of Q(sqrt({self.d}))")
            merged[place] = merged.get(place, Dyadic()) + value
        kept = tuple(sorted(((p, v) for p, v in merged.items() if v), key=lambda item: item[0].sort_key()))
        for place, value in kept:
            if place.kind == SplittingKind.COMPLEX:
                raise ValueError("the invariant at a complex place is zero")
            if place.kind == SplittingKind.REAL_PAIR and value != HALF:
                raise ValueError(f"the invariant {value} at the real place {place} is not 0 or 1/2")
        total = sum((v for _, v in kept), Dyadic())
        if total:
            raise ValueError(f"the invariants of {self._text(kept)} sum to {total}, not 0")
        object.__setattr__(self, "invariants", kept)

    @classmethod
    def of(cls, d: int, invariants: Mapping[PlaceL, Dyadic]) -> 'BrauerElem':
        return cls(d, tuple(invariants.items()))

    @classmethod
    def zero(cls, d: int) -> 'BrauerElem':
        return cls(d)

    def as_dict(self) -> Dict[PlaceL, Dyadic]:
        return dict(self.invariants)

    def invariant(self, place: PlaceL) -> Dyadic:
        return self.as_dict().get(place, Dyadic())

    @property
    def support(self) -> List[PlaceL]:
        return [p for p, _ in self.invariants]

    def _check_field(self, other: 'BrauerElem'):
        if other.d != self.d:
            raise ValueError(f"elements of Br(Q(sqrt({self.d}))) and Br(Q(sqrt({other.d}))) cannot be combined")

    def __add__(self, other: 'BrauerElem') -> 'BrauerElem':
        self._check_field(other)
        return BrauerElem(self.d, self.invariants + other.invariants)

    def __neg__(self) -> 'BrauerElem':
        return BrauerElem(self.d, tuple((p, -v) for p, v in self.invariants))

    def __sub__(self, other: 'BrauerElem') -> 'BrauerElem':
        return self + (-other)

    def __rmul__(self, m: int) -> 'BrauerElem':
        if not isinstance(m, int):
            return NotImplemented
        return BrauerElem(self.d, tuple((p, v * m) for p, v in self.invariants))

    def __bool__(self):
        return bool(self.invariants)

    def order(self) -> int:
        return max((v.order() for _, v in self.invariants), default=1)

    def is_divisible(self) -> bool:
        """divisible in Br(l)_2 iff every archimedean invariant vanishes"""
        return all(not p.is_archimedean for p in self.support)

    def galois_act(self) -> 'BrauerElem':
        return galois_act(self)

    def one_minus_sigma(self) -> 'BrauerElem':
        return one_minus_sigma(self)

    @staticmethod
    def _text(invariants: Iterable[Tuple[PlaceL, Dyadic]]) -> str:
        return ", ".join(f"{p}:{v}" for p, v in invariants) or "0"

    def __str__(self):
        return f"d={self.d}; {self._text(self.invariants)}"


def galois_act(b: BrauerElem) -> BrauerElem:
    """(sigma b)_P = b_(sigma^-1 P): swap the invariants of each split or real pair"""
    return BrauerElem(b.d, tuple((p.conjugate(), v) for p, v in b.invariants))


def one_minus_sigma(b: BrauerElem) -> BrauerElem:
    return b - galois_act(b)


def balancing_place(b: BrauerElem, universe_size: int = DEFAULT_BALANCING_UNIVERSE_SIZE,
                    exclude: Iterable[PlaceL] = ()) -> PlaceL:
    """the first inert, then ramified, place among the candidates where b vanishes"""
    excluded = set(exclude)
    for candidate in balancing_candidates(b.d, universe_size):
        if candidate not in excluded and not b.invariant(candidate):
            return candidate
    raise BalancingPlaceException(f"no inert or ramified place with zero invariant among the first "
                                  f"{universe_size} candidates for {b}")


def halve_divisible(b: BrauerElem, universe_size: int = DEFAULT_BALANCING_UNIVERSE_SIZE) -> BrauerElem:
    """
    An explicit y with 2y = b for divisible b: halve every invariant canonically and, when the halves sum to
    1/2, add 1/2 at a balancing place.
    """
    if not b.is_divisible():
        raise ValueError(f"{b} has a nonzero archimedean invariant and is not divisible")
    halves = {p: v.divide(1) for p, v in b.invariants}
    if sum(halves.values(), Dyadic()):
        q = balancing_place(BrauerElem.zero(b.d), universe_size)
        halves[q] = halves.get(q, Dyadic()) + HALF
    y = BrauerElem.of(b.d, halves)
    assert 2 * y == b, f"halving {b} failed"
    return y


def restriction_from_q(inv_q: Mapping[PlaceQ, Dyadic], d: int) -> BrauerElem:
    """
    Res: Br(Q)_2 -> Br(l)_2 on invariants, multiplying by the local degree: both places over a split prime or the
    real place inherit inv_p, an inert or ramified place gets 2*inv_p and a complex place gets 0.
    """
    if sum(inv_q.values(), Dyadic()):
        raise ValueError("the invariants over Q do not sum to zero")
    result: Dict[PlaceL, Dyadic] = {}
    for base, value in inv_q.items():
        for place in places_over(base, d):
            if place.kind == SplittingKind.COMPLEX:
                continue
            result[place] = value if place.is_paired else 2 * value
    return BrauerElem.of(d, result)


def quaternion_invariants(c: RationalLike, d: RationalLike) -> Dict[PlaceQ, Dyadic]:
    """the invariants of the quaternion algebra (c, d) over Q: 1/2 wherever the Hilbert symbol is -1"""
    return {v: HALF for v, symbol in hilbert_symbols(c, d) if symbol == -1}


def parse_brauer_elem(text: str, d: Optional[int] = None) -> BrauerElem:
    """
    Parse "d=2; 7.0:1/4, 7.1:3/4, 3:1/2". When *d* is given the text may omit the "d=..;" prefix.
    """
    head, separator, body = text.partition(";")
    if separator:
        head = head.strip()
        if not head.startswith("d="):
            raise ParseException("expected 'd=<integer>;'", text, 0)
        try:
            parsed_d = int(head[2:])
        except ValueError as e:
            raise ParseException(f"invalid field parameter '{head[2:]}'", text, 2) from e
        if d is not None and parsed_d != d:
            raise ParseException(f"expected d={d}", text, 2)
        d = parsed_d
    else:
        body = head
    if d is None:
        raise ParseException("missing 'd=<integer>;' prefix", text, 0)
    try:
        check_field_parameter(d)
    except ValueError as e:
        raise ParseException(str(e), text, 0) from e
    entries = []
    body = body.strip()
    if body and body != "0":
        for item in body.split(","):
            place_text, colon, value_text = item.partition(":")
            if not colon:
                raise ParseException(f"expected '<place>:<invariant>' in '{item.strip()}'", text, None)
            entries.append((parse_place_l(place_text, d), parse_dyadic(value_text.strip())))
    try:
        return BrauerElem(d, tuple(entries))
    except ValueError as e:
        raise ParseException(str(e), text, None) from e
