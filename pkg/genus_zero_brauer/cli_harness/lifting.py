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
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from genus_zero_brauer.definitions import DEFAULT_TOWER_DEPTH
from genus_zero_brauer.exact_algebra.dyadic import Dyadic
from genus_zero_brauer.torsion_core.descriptors import DescriptorMismatchException, GroupDescriptor, Summand, \
    SummandType, parse_descriptor
from genus_zero_brauer.torsion_core.elements import Coordinate, GroupElem, basis_elem, elem_scale
from genus_zero_brauer.torsion_core.towers import InvalidTowerException, Tower, verify_tower


class ComponentKind(Enum):
    IDENTITY = "identity"
    REDUCE = "reduce"
    DOUBLE = "double"
    KILL = "kill"


class PreimagePolicy(Enum):
    LEAST = "least"
    ALTERNATE = "alternate"


@dataclass(frozen=True)
class ComponentMap:
    """
    One summand of the domain mapped to at most one summand of the codomain: IDENTITY onto an equal summand,
    REDUCE C(n) -> C(n-1), DOUBLE P -> P by x -> 2x and KILL C1 -> 0.
    """
    kind: ComponentKind
    source: int
    target: Optional[int] = None


def _check_component(component: ComponentMap, source: Summand, target: Optional[Summand]):
    kind = component.kind
    if kind == ComponentKind.KILL:
        valid = target is None and source == Summand.cyclic(1)
    elif target is None:
        valid = False
    elif kind == ComponentKind.IDENTITY:
        valid = source == target
    elif kind == ComponentKind.REDUCE:
        valid = source.kind == SummandType.CYCLIC and source.n >= 2 and target == Summand.cyclic(source.n - 1)
    else:
        valid = source.kind == SummandType.PRUEFER and target.kind == SummandType.PRUEFER
    if not valid:
        raise DescriptorMismatchException(f"{kind.value} cannot map {source} to {target if target else 0}")


@dataclass(frozen=True)
class QuotientModel:
    """
    A surjective homomorphism phi: domain -> codomain acting summand by summand. Every domain summand is the
    source of exactly one component and every codomain summand the target of exactly one, so the kernel is the
    sum of the component kernels, each of order at most 2.
    """
    domain: GroupDescriptor
    codomain: GroupDescriptor
    components: Tuple[ComponentMap, ...]

    def __post_init__(self):
        sources = sorted(m.source for m in self.components)
        if sources != list(range(self.domain.rank)):
            raise DescriptorMismatchException(f"every summand of '{self.domain}' needs exactly one component")
        targets = sorted(m.target for m in self.components if m.target is not None)
        if targets != list(range(self.codomain.rank)):
            raise DescriptorMismatchException(f"the components do not hit every summand of '{self.codomain}' once")
        for m in self.components:
            _check_component(m, self.domain.summands[m.source],
                             None if m.target is None else self.codomain.summands[m.target])

    @classmethod
    def parse(cls, domain: str, codomain: str, components: Sequence[str]) -> 'QuotientModel':
        """components as '<kind>:<source>-><target>' with 0-based indices, e.g. 'kill:0' or 'identity:1->0'"""
        parsed = []
        for text in components:
            kind, _, indices = text.partition(":")
            source, _, target = indices.partition("->")
            try:
                parsed.append(ComponentMap(ComponentKind(kind.strip()), int(source),
                                           int(target) if target.strip() else None))
            except ValueError as e:
                raise DescriptorMismatchException(f"invalid component '{text}'") from e
        return cls(parse_descriptor(domain), parse_descriptor(codomain), tuple(parsed))

    def apply(self, x: GroupElem) -> GroupElem:
        if x.descriptor.summands != self.domain.summands:
            raise DescriptorMismatchException(f"{x} is not an element of '{self.domain}'")
        coords: List[Optional[Coordinate]] = [None] * self.codomain.rank
        for m in self.components:
            c = x.coords[m.source]
            if m.kind == ComponentKind.IDENTITY or m.kind == ComponentKind.REDUCE:
                coords[m.target] = c
            elif m.kind == ComponentKind.DOUBLE:
                coords[m.target] = c * 2
        return GroupElem(self.codomain, tuple(coords))

    def preimage(self, y: GroupElem, policy: PreimagePolicy = PreimagePolicy.LEAST) -> GroupElem:
        """some x with phi(x) = y; the policies pick different members of the same coset of the kernel"""
        if y.descriptor.summands != self.codomain.summands:
            raise DescriptorMismatchException(f"{y} is not an element of '{self.codomain}'")
        alternate = policy == PreimagePolicy.ALTERNATE
        coords: List[Optional[Coordinate]] = [None] * self.domain.rank
        for m in self.components:
            if m.kind == ComponentKind.KILL:
                coords[m.source] = 1 if alternate else 0
                continue
            c = y.coords[m.target]
            if m.kind == ComponentKind.IDENTITY:
                coords[m.source] = c
            elif m.kind == ComponentKind.REDUCE:
                coords[m.source] = c + 2 ** (self.codomain.summands[m.target].n) if alternate else c
            else:
                coords[m.source] = c.halves()[1 if alternate else 0]
        x = GroupElem(self.domain, tuple(coords))
        assert self.apply(x) == y, f"{x} is not a preimage of {y}"
        return x

    def kernel_generators(self) -> List[GroupElem]:
        """one generator per component with a nontrivial kernel"""
        generators = []
        for m in self.components:
            if m.kind == ComponentKind.KILL:
                generators.append(basis_elem(self.domain, m.source, 1))
            elif m.kind == ComponentKind.REDUCE:
                generators.append(basis_elem(self.domain, m.source, 2 ** (self.domain.summands[m.source].n - 1)))
            elif m.kind == ComponentKind.DOUBLE:
                generators.append(basis_elem(self.domain, m.source, Dyadic(Fraction(1, 2))))
        return generators

    def kernel_has_exponent_two(self) -> bool:
        return all(not self.apply(g) and not elem_scale(g, 2) for g in self.kernel_generators())


def divided_tower(y: GroupElem) -> Tower:
    """y_i = y / 2^i for a divisible y, dividing each Pruefer coordinate canonically"""
    if any(s.kind != SummandType.PRUEFER and c for s, c in zip(y.descriptor.summands, y.coords)):
        raise InvalidTowerException(f"{y} has a nonzero reduced part and is not divisible")
    return Tower(y.descriptor, generator=lambda i: GroupElem(
        y.descriptor, tuple(c.divide(i) if isinstance(c, Dyadic) else c for c in y.coords)))


def lift_tower(model: QuotientModel, alpha: GroupElem, tower_down: Tower, depth: int = DEFAULT_TOWER_DEPTH,
               policy: PreimagePolicy = PreimagePolicy.LEAST) -> Tower:
    """
    Lift a divisible tower over phi(alpha) to the domain by alpha_n = 2 * phi^-1(tower_down[n+1]). Two preimages
    differ by a kernel element, which doubling kills, so the result does not depend on the preimage chosen.
    The lifted tower is checked to *depth*: phi(alpha_n) = tower_down[n] and 2^m * alpha_n = alpha_(n-m).
    """
    if tower_down.descriptor.summands != model.codomain.summands:
        raise DescriptorMismatchException(f"the tower lies in '{tower_down.descriptor}', not in '{model.codomain}'")
    if not verify_tower(tower_down, depth + 1):
        raise InvalidTowerException(f"the tower in '{model.codomain}' is not divisible to depth {depth + 1}")
    if tower_down[0] != model.apply(alpha):
        raise InvalidTowerException(f"the tower starts at {tower_down[0]}, not at phi(alpha) = {model.apply(alpha)}")
    assert model.kernel_has_exponent_two(), f"the kernel of the quotient onto '{model.codomain}' is not of exponent 2"

    lifted = Tower(model.domain, generator=lambda n: elem_scale(model.preimage(tower_down[n + 1], policy), 2))
    for n in range(depth + 1):
        assert model.apply(lifted[n]) == tower_down[n], f"phi(alpha_{n}) = {model.apply(lifted[n])}, " \
                                                        f"expected {tower_down[n]}"
    assert verify_tower(lifted, depth), f"the lifted tower in '{model.domain}' is not divisible to depth {depth}"
    logging.info(f"lifted a tower from '{model.codomain}' to '{model.domain}' over alpha_0 = {lifted[0]} "
                 f"(alpha - alpha_0 = {alpha - lifted[0]}), verified to depth {depth}")
    return lifted
