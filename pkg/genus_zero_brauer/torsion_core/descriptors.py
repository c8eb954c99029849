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
from typing import List, Optional, Sequence, Tuple

import numpy as np
import ujson

from genus_zero_brauer.exact_algebra.parsing import ParseException, Scanner


class DescriptorMismatchException(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(message)


class NotAnInvolutionException(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(message)


class SummandType(Enum):
    CYCLIC = "C"
    PRUEFER = "P"
    GEN_PRUEFER = "G"


@dataclass(frozen=True)
class Summand:
    """
    Cyclic(n) is Z/2^n, Pruefer is Q_2/Z_2 and GenPruefer(n) is the generalized Pruefer group of Ulm length
    omega+n, presented by generators e_k (k >= 1) and x with 2^k*e_k = x and 2^n*x = 0.
    """
    kind: SummandType
    n: int = 0

    def __post_init__(self):
        if self.kind == SummandType.PRUEFER:
            if self.n != 0:
                raise ValueError("the Pruefer summand takes no parameter")
        elif self.n < 1:
            raise ValueError(f"{self.kind.name} needs n >= 1, got {self.n}")

    @classmethod
    def cyclic(cls, n: int) -> 'Summand':
        return cls(SummandType.CYCLIC, n)

    @classmethod
    def pruefer(cls) -> 'Summand':
        return cls(SummandType.PRUEFER)

    @classmethod
    def gen_pruefer(cls, n: int) -> 'Summand':
        return cls(SummandType.GEN_PRUEFER, n)

    def __str__(self):
        return "P" if self.kind == SummandType.PRUEFER else f"{self.kind.value}{self.n}"


class ActionTag(Enum):
    FIXED = "fixed"
    NEG = "neg"
    SWAP = "swap"


@dataclass(frozen=True)
class SummandAction:
    tag: ActionTag
    partner: Optional[int] = None


@dataclass(frozen=True)
class InvolutionSpec:
    """
    An order two automorphism, either as one tag per summand or as an integer matrix acting on column vectors of
    an all-Pruefer group. Exactly one of *tags* and *matrix* is set.
    """
    tags: Optional[Tuple[SummandAction, ...]] = None
    matrix: Optional[Tuple[Tuple[int, ...], ...]] = None

    @property
    def is_matrix(self) -> bool:
        return self.matrix is not None

    def as_matrix(self, rank: int) -> np.ndarray:
        if self.matrix is not None:
            return np.array(self.matrix, dtype=object)
        result = np.zeros((rank, rank), dtype=object)
        for i, action in enumerate(self.tags):
            if action.tag == ActionTag.FIXED:
                result[i, i] = 1
            elif action.tag == ActionTag.NEG:
                result[i, i] = -1
            else:
                result[action.partner, i] = 1
        return result

    def __str__(self):
        if self.matrix is not None:
            return "matrix " + ujson.dumps([list(row) for row in self.matrix])
        tokens = []
        for i, action in enumerate(self.tags):
            if action.tag != ActionTag.SWAP:
                tokens.append(action.tag.value)
            elif i < action.partner:
                tokens.append(f"swap({i},{action.partner})")
        return ",".join(tokens)


@dataclass(frozen=True)
class GroupDescriptor:
    summands: Tuple[Summand, ...]
    action: Optional[InvolutionSpec] = None

    def __post_init__(self):
        if not self.summands:
            raise ValueError("a group descriptor needs at least one summand")
        if self.action is not None:
            validate_action(self.summands, self.action)

    @property
    def rank(self) -> int:
        return len(self.summands)

    def is_all_pruefer(self) -> bool:
        return all(s.kind == SummandType.PRUEFER for s in self.summands)

    def without_action(self) -> 'GroupDescriptor':
        return GroupDescriptor(self.summands)

    def indices_with_tag(self, tag: ActionTag) -> List[int]:
        if self.action is None or self.action.tags is None:
            raise DescriptorMismatchException(f"'{self}' carries no per-summand action tags")
        return [i for i, a in enumerate(self.action.tags) if a.tag == tag]

    def pairs(self) -> List[Tuple[int, int]]:
        """swap pairs (i, j) with i < j; i is the chosen half of the pair"""
        return [(i, self.action.tags[i].partner) for i in self.indices_with_tag(ActionTag.SWAP)
                if i < self.action.tags[i].partner]

    def __str__(self):
        text = "+".join(str(s) for s in self.summands)
        if self.action is not None:
            text += f" | {self.action}"
        return text


def validate_action(summands: Sequence[Summand], action: InvolutionSpec):
    rank = len(summands)
    if action.matrix is not None:
        if any(s.kind != SummandType.PRUEFER for s in summands):
            raise NotAnInvolutionException("a matrix action needs an all-Pruefer descriptor")
        m = np.array(action.matrix, dtype=object)
        if m.shape != (rank, rank):
            raise NotAnInvolutionException(f"expected a {rank}x{rank} matrix, got shape {m.shape}")
        # an integer matrix acts trivially on (Q_2/Z_2)^r only if it is zero
        if not np.array_equal(m.dot(m), np.identity(rank, dtype=object)):
            raise NotAnInvolutionException(f"M^2 is not the identity for M = {action.matrix}")
        return
    if action.tags is None or len(action.tags) != rank:
        raise NotAnInvolutionException(f"expected {rank} action tags")
    for i, a in enumerate(action.tags):
        if a.tag != ActionTag.SWAP:
            continue
        j = a.partner
        if j is None or not 0 <= j < rank or j == i:
            raise NotAnInvolutionException(f"summand {i} has an invalid swap partner {j}")
        partner = action.tags[j]
        if partner.tag != ActionTag.SWAP or partner.partner != i:
            raise NotAnInvolutionException(f"swap({i},{j}) is not symmetric")
        if summands[i] != summands[j]:
            raise NotAnInvolutionException(f"swap({i},{j}) pairs {summands[i]} with {summands[j]}")


def direct_sum(first: GroupDescriptor, second: GroupDescriptor) -> GroupDescriptor:
    """
    The descriptor of first + second; the actions are combined block-diagonally (both must be present or both
    absent).
    """
    summands = first.summands + second.summands
    if first.action is None and second.action is None:
        return GroupDescriptor(summands)
    if first.action is None or second.action is None:
        raise DescriptorMismatchException("cannot combine a descriptor with an action and one without")
    if first.action.tags is not None and second.action.tags is not None:
        shift = first.rank
        shifted = tuple(SummandAction(a.tag, None if a.partner is None else a.partner + shift)
                        for a in second.action.tags)
        return GroupDescriptor(summands, InvolutionSpec(tags=first.action.tags + shifted))
    block = np.zeros((len(summands), len(summands)), dtype=object)
    block[:first.rank, :first.rank] = first.action.as_matrix(first.rank)
    block[first.rank:, first.rank:] = second.action.as_matrix(second.rank)
    return GroupDescriptor(summands, InvolutionSpec(matrix=tuple(tuple(int(v) for v in row) for row in block)))


def parse_descriptor(text: str) -> GroupDescriptor:
    """
    Grammar: summands C<n>, P and G<n> joined by '+', with an optional action after '|': either a comma separated
    list of 'fixed', 'neg' and 'swap(i,j)' or 'matrix [[..],..]'. Summand indices in swap(i,j) start at 0; the
    fixed and neg tags are assigned in order to the summands no swap names.
    Example: "C1+C3+P | fixed,fixed,neg".
    """
    scanner = Scanner(text)
    summands = [_scan_summand(scanner)]
    while scanner.accept("+"):
        summands.append(_scan_summand(scanner))
    action = None
    if scanner.accept("|"):
        if scanner.accept("matrix"):
            action = _scan_matrix(scanner)
        else:
            action = _scan_tags(scanner, len(summands))
    scanner.expect_end()
    try:
        return GroupDescriptor(tuple(summands), action)
    except ValueError as e:
        raise ParseException(str(e), text, None) from e


def _scan_summand(scanner: Scanner) -> Summand:
    token = scanner.match(r"[CPG]\d*")
    if token is None:
        scanner.fail("expected a summand C<n>, P or G<n>")
    kind = SummandType(token[0])
    if kind == SummandType.PRUEFER:
        if len(token) > 1:
            scanner.fail("P takes no parameter")
        return Summand.pruefer()
    if len(token) == 1 or int(token[1:]) < 1:
        scanner.fail(f"{token[0]} needs a positive parameter")
    return Summand(kind, int(token[1:]))


def _scan_matrix(scanner: Scanner) -> InvolutionSpec:
    start = scanner.pos
    scanner.skip_spaces()
    try:
        rows = ujson.loads(scanner.text[scanner.pos:])
    except ValueError as e:
        raise ParseException(f"malformed matrix: {e}", scanner.text, start) from e
    if not isinstance(rows, list) or not rows or \
            not all(isinstance(row, list) and all(isinstance(v, int) for v in row) for row in rows):
        raise ParseException("the matrix must be a nonempty list of integer rows", scanner.text, start)
    scanner.pos = len(scanner.text)
    return InvolutionSpec(matrix=tuple(tuple(row) for row in rows))


def _scan_tags(scanner: Scanner, rank: int) -> InvolutionSpec:
    assigned: List[Optional[SummandAction]] = [None] * rank
    positional: List[ActionTag] = []
    while True:
        if scanner.accept("swap"):
            scanner.expect("(")
            i = scanner.integer()
            scanner.expect(",")
            j = scanner.integer()
            scanner.expect(")")
            for index in (i, j):
                if not 0 <= index < rank or assigned[index] is not None:
                    scanner.fail(f"summand index {index} is out of range or already paired")
            if i == j:
                scanner.fail("a summand cannot be swapped with itself")
            assigned[i] = SummandAction(ActionTag.SWAP, j)
            assigned[j] = SummandAction(ActionTag.SWAP, i)
        elif scanner.accept("fixed"):
            positional.append(ActionTag.FIXED)
        elif scanner.accept("neg"):
            positional.append(ActionTag.NEG)
        else:
            scanner.fail("expected 'fixed', 'neg' or 'swap(i,j)'")
        if not scanner.accept(","):
            break
    free = [i for i, a in enumerate(assigned) if a is None]
    if len(free) != len(positional):
        scanner.fail(f"{len(positional)} fixed/neg tags for {len(free)} unpaired summands")
    for index, tag in zip(free, positional):
        assigned[index] = SummandAction(tag)
    try:
        return InvolutionSpec(tags=tuple(assigned))
    except ValueError as e:
        raise ParseException(str(e), scanner.text, scanner.pos) from e
