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

import itertools

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from genus_zero_brauer.exact_algebra.dyadic import Dyadic
from genus_zero_brauer.exact_algebra.parsing import ParseException, Scanner
from genus_zero_brauer.exact_algebra.rationals import scan_rational
from genus_zero_brauer.torsion_core.descriptors import ActionTag, DescriptorMismatchException, GroupDescriptor, \
    Summand, SummandType


@dataclass(frozen=True)
class GenCoord:
    """
    The coordinate sum(a_k * e_k) + t*x of a GenPruefer(n) summand in normal form: 0 < a_k < 2^k for every stored
    (k, a_k), sorted by k, and 0 <= t < 2^n.
    """
    a: Tuple[Tuple[int, int], ...] = ()
    t: int = 0

    @property
    def support(self) -> int:
        return self.a[-1][0] if self.a else 0

    def a_map(self) -> Dict[int, int]:
        return dict(self.a)

    def __bool__(self):
        return bool(self.a) or self.t != 0

    def __str__(self):
        terms = [f"{a_k}*e{k}" for k, a_k in self.a]
        if self.t:
            terms.append(f"{self.t}*x")
        return "+".join(terms) if terms else "0"


def normalize_gen(a: Mapping[int, int], t: int, n: int) -> GenCoord:
    """fold 2^k*e_k into x and reduce t mod 2^n"""
    kept = []
    for k in sorted(a):
        if k < 1:
            raise ValueError(f"generator index e{k} out of range")
        carry, residue = divmod(a[k], 2 ** k)
        t += carry
        if residue:
            kept.append((k, residue))
    return GenCoord(tuple(kept), t % (2 ** n))


Coordinate = Union[int, Dyadic, GenCoord]


@dataclass(frozen=True)
class GroupElem:
    descriptor: GroupDescriptor
    coords: Tuple[Coordinate, ...]

    def __post_init__(self):
        if len(self.coords) != self.descriptor.rank:
            raise DescriptorMismatchException(
                f"{len(self.coords)} coordinates for the {self.descriptor.rank} summands of '{self.descriptor}'")
        object.__setattr__(self, "coords",
                           tuple(_normalize(s, c) for s, c in zip(self.descriptor.summands, self.coords)))

    def __add__(self, other: 'GroupElem') -> 'GroupElem':
        return elem_add(self, other)

    def __sub__(self, other: 'GroupElem') -> 'GroupElem':
        return elem_add(self, elem_neg(other))

    def __neg__(self) -> 'GroupElem':
        return elem_neg(self)

    def __rmul__(self, m: int) -> 'GroupElem':
        return elem_scale(self, m)

    def __bool__(self):
        return any(bool(c) for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _normalize(summand: Summand, c) -> Coordinate:
    if summand.kind == SummandType.CYCLIC:
        if not isinstance(c, int):
            raise TypeError(f"a {summand} coordinate must be an int, got {c!r}")
        return c % (2 ** summand.n)
    if summand.kind == SummandType.PRUEFER:
        return c if isinstance(c, Dyadic) else Dyadic(Fraction(c))
    if not isinstance(c, GenCoord):
        raise TypeError(f"a {summand} coordinate must be a GenCoord, got {c!r}")
    return normalize_gen(c.a_map(), c.t, summand.n)


def zero(descriptor: GroupDescriptor) -> GroupElem:
    return GroupElem(descriptor, tuple(_zero_coord(s) for s in descriptor.summands))


def _zero_coord(summand: Summand) -> Coordinate:
    if summand.kind == SummandType.CYCLIC:
        return 0
    if summand.kind == SummandType.PRUEFER:
        return Dyadic()
    return GenCoord()


def basis_elem(descriptor: GroupDescriptor, index: int, coordinate: Coordinate) -> GroupElem:
    coords = [_zero_coord(s) for s in descriptor.summands]
    coords[index] = coordinate
    return GroupElem(descriptor, tuple(coords))


def _check_same(x: GroupElem, y: GroupElem):
    if x.descriptor.summands != y.descriptor.summands:
        raise DescriptorMismatchException(f"elements of '{x.descriptor}' and '{y.descriptor}' cannot be combined")


def _scale_coord(summand: Summand, c: Coordinate, m: int) -> Coordinate:
    if summand.kind == SummandType.GEN_PRUEFER:
        return normalize_gen({k: a_k * m for k, a_k in c.a}, c.t * m, summand.n)
    return c * m


def _add_coord(summand: Summand, c1: Coordinate, c2: Coordinate) -> Coordinate:
    if summand.kind == SummandType.GEN_PRUEFER:
        a = c1.a_map()
        for k, a_k in c2.a:
            a[k] = a.get(k, 0) + a_k
        return normalize_gen(a, c1.t + c2.t, summand.n)
    return c1 + c2


def elem_add(x: GroupElem, y: GroupElem) -> GroupElem:
    _check_same(x, y)
    return GroupElem(x.descriptor, tuple(_add_coord(s, c1, c2)
                                         for s, c1, c2 in zip(x.descriptor.summands, x.coords, y.coords)))


def elem_scale(x: GroupElem, m: int) -> GroupElem:
    return GroupElem(x.descriptor, tuple(_scale_coord(s, c, m) for s, c in zip(x.descriptor.summands, x.coords)))


def elem_neg(x: GroupElem) -> GroupElem:
    return elem_scale(x, -1)


def elem_order(x: GroupElem) -> int:
    order = 1
    current = x
    while current:
        current = elem_scale(current, 2)
        order *= 2
    return order


def apply_action(x: GroupElem) -> GroupElem:
    """the involution of x.descriptor applied to x"""
    action = x.descriptor.action
    if action is None:
        raise DescriptorMismatchException(f"'{x.descriptor}' carries no involution")
    if action.matrix is not None:
        coords = []
        for row in action.matrix:
            total = Dyadic()
            for m_ij, c in zip(row, x.coords):
                total = total + c * m_ij
            coords.append(total)
        return GroupElem(x.descriptor, tuple(coords))
    coords = []
    for i, (summand, tag) in enumerate(zip(x.descriptor.summands, action.tags)):
        if tag.tag == ActionTag.FIXED:
            coords.append(x.coords[i])
        elif tag.tag == ActionTag.NEG:
            coords.append(_scale_coord(summand, x.coords[i], -1))
        else:
            coords.append(x.coords[tag.partner])
    return GroupElem(x.descriptor, tuple(coords))


def default_window(x: GroupElem) -> int:
    supports = [c.support for s, c in zip(x.descriptor.summands, x.coords) if s.kind == SummandType.GEN_PRUEFER]
    return max(supports + [1]) + 1


def coord_halves(summand: Summand, c: Coordinate, window: int) -> List[Coordinate]:
    if summand.kind == SummandType.CYCLIC:
        if c % 2:
            return []
        half = c // 2
        return [half, half + 2 ** (summand.n - 1)]
    if summand.kind == SummandType.PRUEFER:
        return list(c.halves())
    a = c.a_map()
    if any(a_k % 2 for a_k in a.values()):
        return []
    n = summand.n
    indices = list(range(1, max(window, c.support) + 1))
    result = []
    # choosing b_k = a_k/2 + q_k*2^(k-1) carries q_k into t; the remaining t must then be even
    for carries in itertools.product((0, 1), repeat=len(indices)):
        remaining = c.t - sum(carries)
        if remaining % 2:
            continue
        b = {k: a.get(k, 0) // 2 + q * 2 ** (k - 1) for k, q in zip(indices, carries)}
        s = (remaining // 2) % (2 ** n)
        for lift in (0, 2 ** (n - 1)):
            result.append(normalize_gen(b, s + lift, n))
    return result


def halves(x: GroupElem, window: Optional[int] = None) -> List[GroupElem]:
    """
    All y with 2y = x. The 2-torsion of a GenPruefer summand is infinite, so its halves are restricted to
    generators e_k with k <= window (default: the largest e_k index in x, plus one).
    """
    window = default_window(x) if window is None else window
    per_coordinate = [coord_halves(s, c, window) for s, c in zip(x.descriptor.summands, x.coords)]
    return [GroupElem(x.descriptor, coords) for coords in itertools.product(*per_coordinate)]


def torsion_elements(descriptor: GroupDescriptor, exponent: int, window: int = 2) -> Iterator[GroupElem]:
    """
    Every element of the 2^exponent-torsion of *descriptor*. The torsion of a GenPruefer summand is infinite, so
    its coordinates are restricted to generators e_k with k <= window.
    """
    if exponent < 0:
        raise ValueError("the torsion exponent must be non-negative")
    per_coordinate = [_torsion_coords(s, exponent, window) for s in descriptor.summands]
    for coords in itertools.product(*per_coordinate):
        yield GroupElem(descriptor, coords)


def _torsion_coords(summand: Summand, exponent: int, window: int) -> List[Coordinate]:
    if summand.kind == SummandType.CYCLIC:
        return list(range(0, 2 ** summand.n, 2 ** max(summand.n - exponent, 0)))
    if summand.kind == SummandType.PRUEFER:
        return [Dyadic.of(j, 2 ** exponent) for j in range(2 ** exponent)]
    single = GroupDescriptor((summand,))
    coords = []
    for digits in itertools.product(*(range(2 ** k) for k in range(1, window + 1))):
        for t in range(2 ** summand.n):
            c = GenCoord(tuple((k, a_k) for k, a_k in enumerate(digits, start=1) if a_k), t)
            if elem_order(GroupElem(single, (c,))) <= 2 ** exponent:
                coords.append(c)
    return coords


def pruefer_vector(descriptor: GroupDescriptor, values: Sequence[Union[Fraction, int]]) -> GroupElem:
    if not descriptor.is_all_pruefer():
        raise DescriptorMismatchException(f"'{descriptor}' is not an all-Pruefer descriptor")
    return GroupElem(descriptor, tuple(Dyadic(Fraction(v)) for v in values))


def dyadic_values(x: GroupElem) -> List[Fraction]:
    if not x.descriptor.is_all_pruefer():
        raise DescriptorMismatchException(f"'{x.descriptor}' is not an all-Pruefer descriptor")
    return [c.value for c in x.coords]


def parse_elem(descriptor: GroupDescriptor, text: str) -> GroupElem:
    """
    Coordinates in parentheses, one per summand: an integer for C<n>, a dyadic rational for P and a sum of terms
    a*e<k> and t*x for G<n>, e.g. "(1, 3, 1/2)" or "(2*e2+1*x)".
    """
    scanner = Scanner(text)
    scanner.expect("(")
    coords = []
    for i, summand in enumerate(descriptor.summands):
        if i:
            scanner.expect(",")
        coords.append(_scan_coord(scanner, summand))
    scanner.expect(")")
    scanner.expect_end()
    try:
        return GroupElem(descriptor, tuple(coords))
    except ValueError as e:
        raise ParseException(str(e), text, None) from e


def _scan_coord(scanner: Scanner, summand: Summand) -> Coordinate:
    if summand.kind == SummandType.CYCLIC:
        return scanner.integer()
    if summand.kind == SummandType.PRUEFER:
        return Dyadic(scan_rational(scanner))
    a: Dict[int, int] = {}
    t = 0
    while True:
        value = scanner.integer()
        if scanner.accept("*"):
            if scanner.accept("x"):
                t += value
            else:
                scanner.expect("e")
                k = scanner.integer()
                if k < 1:
                    scanner.fail("generator indices start at e1")
                a[k] = a.get(k, 0) + value
        elif value != 0:
            scanner.fail("expected '*e<k>' or '*x'")
        if not scanner.accept("+"):
            break
    return normalize_gen(a, t, summand.n)



def apply_matrix(matrix: Sequence[Sequence[int]], x: GroupElem, target: GroupDescriptor) -> GroupElem:
    """the homomorphism (Q_2/Z_2)^r -> (Q_2/Z_2)^s given by an s x r integer matrix acting on column vectors"""
    values = dyadic_values(x)
    if any(len(row) != len(values) for row in matrix) or len(matrix) != target.rank:
        raise DescriptorMismatchException(
            f"a {len(matrix)}-row matrix cannot map '{x.descriptor}' into '{target}'")
    return pruefer_vector(target, [sum(m_ij * v for m_ij, v in zip(row, values)) for row in matrix])
