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

import logging

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from genus_zero_brauer.definitions import DEFAULT_TRUNCATION, TRUNCATION_MARGIN
from genus_zero_brauer.exact_algebra.rationals import two_adic_valuation
from genus_zero_brauer.torsion_core.descriptors import GroupDescriptor, Summand, SummandType
from genus_zero_brauer.torsion_core.elements import GenCoord, GroupElem, coord_halves, elem_order
from genus_zero_brauer.torsion_core.ordinals import INFINITY, OMEGA_TWO, Ordinal, OrdinalKind


def _coord_height(summand: Summand, c) -> Ordinal:
    if summand.kind == SummandType.PRUEFER or not c:
        return INFINITY
    if summand.kind == SummandType.CYCLIC:
        return Ordinal.finite(two_adic_valuation(c))
    if c.a:
        # the image in the quotient by the p^omega part is a sum of cyclic coordinates a_k mod 2^k
        return Ordinal.finite(min(two_adic_valuation(a_k) for _, a_k in c.a))
    return Ordinal.omega_plus(two_adic_valuation(c.t))


def height(x: GroupElem) -> Ordinal:
    """
    The least lambda with x in A(lambda) but not A(lambda+1), by the min rule over summands. Elements of the
    divisible subgroup, zero included, have height Infinity.
    """
    return min((_coord_height(s, c) for s, c in zip(x.descriptor.summands, x.coords)), default=INFINITY)


@dataclass(frozen=True)
class TruncatedHeight:
    """
    Result of halving x inside a finite truncation. *finite* is the certified height when the halving chain dead
    ends below level - margin; otherwise x survived that many halvings and is reported as at least that level.
    """
    level: int
    finite: Optional[int]

    @property
    def certified_bound(self) -> int:
        return self.level - TRUNCATION_MARGIN

    @property
    def is_transfinite(self) -> bool:
        return self.finite is None


def effective_truncation(x: GroupElem, truncation_level: int) -> int:
    """
    Raise the truncation level so that every cyclic summand and every generator e_k used by x stays below the
    uncertified band.
    """
    needed = [truncation_level]
    for summand, c in zip(x.descriptor.summands, x.coords):
        if summand.kind == SummandType.CYCLIC:
            needed.append(summand.n + TRUNCATION_MARGIN + 1)
        elif summand.kind == SummandType.GEN_PRUEFER:
            needed.append(c.support + TRUNCATION_MARGIN + 1)
    return max(needed)


def truncate(x: GroupElem, level: int) -> Tuple[List[int], List[int]]:
    """
    Embed x into a finite product of cyclic groups: Pruefer becomes Z/2^level, GenPruefer(n) becomes its
    subgroup on e_1..e_level, which is Z/2^(level+n)*e_level plus Z/2^k*f_k for k < level with
    f_k = e_k - 2^(level-k)*e_level.
    :return: the exponents of the cyclic factors and the coordinates of x in them
    """
    exponents, values = [], []
    for summand, c in zip(x.descriptor.summands, x.coords):
        if summand.kind == SummandType.CYCLIC:
            exponents.append(summand.n)
            values.append(c)
        elif summand.kind == SummandType.PRUEFER:
            if c.order() > 2 ** level:
                raise ValueError(f"{c} does not lie in the 2^{level}-torsion")
            exponents.append(level)
            values.append(int(c.value * 2 ** level))
        else:
            exponents.extend(_gen_exponents(summand.n, level))
            values.extend(_gen_values(c, summand.n, level))
    return exponents, values


def _gen_exponents(n: int, level: int) -> List[int]:
    return list(range(1, level)) + [level + n]


def _gen_values(c: GenCoord, n: int, level: int) -> List[int]:
    if c.support > level:
        raise ValueError(f"e{c.support} lies outside the truncation at level {level}")
    a = c.a_map()
    top = a.get(level, 0) + c.t * 2 ** level + sum(a_k * 2 ** (level - k) for k, a_k in a.items() if k < level)
    return [a.get(k, 0) for k in range(1, level)] + [top % 2 ** (level + n)]


def height_bruteforce(x: GroupElem, truncation_level: int) -> TruncatedHeight:
    """
    Halve x repeatedly inside the truncation, taking the least half in every cyclic factor (it has the largest
    height among all halves), until the chain dead ends or passes the certified bound. The truncation keeps
    truncation_level halvings of headroom above the order of x.
    """
    if truncation_level < 1:
        raise ValueError("the truncation level must be positive")
    level = effective_truncation(x, truncation_level)
    headroom = level + elem_order(x).bit_length() - 1
    exponents, values = truncate(x, headroom)
    bound = level - TRUNCATION_MARGIN
    depth = 0
    while depth < bound:
        if any(v % 2 for v in values):
            return TruncatedHeight(level, depth)
        if not any(values):
            break
        values = [v // 2 for v in values]
        depth += 1
    return TruncatedHeight(level, None)


def height_oracle(x: GroupElem, truncation_level: int = DEFAULT_TRUNCATION) -> Ordinal:
    """
    Height from the truncation: certified finite heights are returned as they are; elements surviving the
    certified bound are transfinite, refined by the height of their image in the p^omega part.
    """
    truncated = height_bruteforce(x, truncation_level)
    if not truncated.is_transfinite:
        return Ordinal.finite(truncated.finite)
    refined = INFINITY
    for summand, c in zip(x.descriptor.summands, x.coords):
        if summand.kind == SummandType.GEN_PRUEFER and c:
            assert not c.a, f"{x} survived {truncated.certified_bound} halvings with a nonzero e_k part"
            refined = min(refined, Ordinal.omega_plus(two_adic_valuation(c.t)))
    return refined


def is_divisible_by_search(x: GroupElem, depth: int, window: Optional[int] = None) -> bool:
    """
    Search for a chain x = y_0, 2*y_1 = y_0, ..., of the given depth with every GenPruefer coordinate supported on
    e_1..e_window. With a fixed window the search dead ends on every element outside the divisible subgroup
    once depth exceeds the exponent of the finite group that window spans.
    """
    window = max([1] + [c.support for s, c in zip(x.descriptor.summands, x.coords)
                        if s.kind == SummandType.GEN_PRUEFER]) if window is None else window
    for summand, c in zip(x.descriptor.summands, x.coords):
        if not _coord_has_chain(summand, c, depth, window):
            return False
    return True


def _coord_has_chain(summand: Summand, c, depth: int, window: int) -> bool:
    if summand.kind == SummandType.PRUEFER or not c:
        return True
    dead_ends = set()

    def search(current, remaining):
        if remaining == 0:
            return True
        if (current, remaining) in dead_ends:
            return False
        for half in coord_halves(summand, current, window):
            if search(half, remaining - 1):
                return True
        dead_ends.add((current, remaining))
        return False

    return search(c, depth)


def bg_height_bounds(h: Ordinal) -> Tuple[Ordinal, Ordinal]:
    """
    Bounds on the height of the character part of a fixed-subgroup element of height h > 0: (h-1, h) for finite
    h and omega+n with n >= 1, exact for omega, omega2 and Infinity.
    """
    if h == Ordinal.finite(0):
        raise ValueError("the bounds are stated for positive heights")
    if h.kind == OrdinalKind.FINITE or (h.kind == OrdinalKind.OMEGA_PLUS and h.m >= 1):
        return h.predecessor(), h
    return h, h


def _summand_ulm(summand: Summand, level: Ordinal) -> int:
    if summand.kind == SummandType.CYCLIC:
        return 1 if level == Ordinal.finite(summand.n - 1) else 0
    if summand.kind == SummandType.PRUEFER:
        return 0
    if level.is_finite:
        return 1
    return 1 if level == Ordinal.omega_plus(summand.n - 1) else 0


def ulm_oracle(summand: Summand, level: Ordinal, truncation_level: int = DEFAULT_TRUNCATION) -> int:
    """
    The Ulm invariant of one summand read off its truncation: a finite product of Z/2^m contributes one at level
    m-1 for each factor. Truncated levels at or beyond the truncation level stand for omega plus the excess;
    the band just below it is distorted by the cut and is not used.
    """
    if level.is_infinity:
        raise ValueError("the Ulm invariant is not defined at Infinity")
    cut = max(truncation_level, summand.n + TRUNCATION_MARGIN + 1,
              (level.m + TRUNCATION_MARGIN + 1) if level.is_finite else 0)
    if summand.kind == SummandType.CYCLIC:
        exponents = [summand.n]
    elif summand.kind == SummandType.PRUEFER:
        exponents = [cut]
    else:
        exponents = _gen_exponents(summand.n, cut)
    if level.is_finite:
        return sum(1 for m in exponents if m == level.m + 1)
    if level == OMEGA_TWO:
        return 0
    return sum(1 for m in exponents if m == cut + level.m + 1)


@lru_cache(maxsize=1024)
def _verified_summand_ulm(summand: Summand, level: Ordinal) -> int:
    value = _summand_ulm(summand, level)
    assert value == ulm_oracle(summand, level), f"Ulm table entry of {summand} at {level} disagrees with truncation"
    return value


def ulm_invariant(g: GroupDescriptor, level: Ordinal) -> int:
    """dim over Z/2 of P(level)/P(level+1), summed over the summands of g"""
    if level.is_infinity:
        raise ValueError("the Ulm invariant is not defined at Infinity")
    return sum(_verified_summand_ulm(s, level) for s in g.summands)


@dataclass
class UlmSequence:
    descriptor: GroupDescriptor
    finite: List[int]
    transfinite: List[int]
    divisible_rank: int

    def nonzero_levels(self) -> List[Tuple[Ordinal, int]]:
        levels = [(Ordinal.finite(j), u) for j, u in enumerate(self.finite)] + \
                 [(Ordinal.omega_plus(j), u) for j, u in enumerate(self.transfinite)]
        return [(level, u) for level, u in levels if u]


def ulm_sequence(g: GroupDescriptor, cutoff: int) -> UlmSequence:
    sequence = UlmSequence(descriptor=g,
                           finite=[ulm_invariant(g, Ordinal.finite(j)) for j in range(cutoff)],
                           transfinite=[ulm_invariant(g, Ordinal.omega_plus(j)) for j in range(cutoff)],
                           divisible_rank=sum(1 for s in g.summands if s.kind == SummandType.PRUEFER))
    logging.info(f"Ulm invariants of {g} up to cutoff {cutoff}: {sequence.nonzero_levels()}, "
                 f"divisible rank {sequence.divisible_rank}")
    return sequence
