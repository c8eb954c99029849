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

from typing import Callable, List, Optional, Sequence

from genus_zero_brauer.torsion_core.descriptors import ActionTag, DescriptorMismatchException, GroupDescriptor, \
    direct_sum
from genus_zero_brauer.torsion_core.elements import GroupElem, apply_action, apply_matrix, elem_scale, zero


class InvalidTowerException(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(message)


class Tower:
    """
    A sequence alpha_0, alpha_1, ... in one group. Entries past the stored prefix are produced on demand by
    *generator*, so a tower can be read to any depth.
    """
    def __init__(self, descriptor: GroupDescriptor, elements: Sequence[GroupElem] = (),
                 generator: Optional[Callable[[int], GroupElem]] = None):
        self.descriptor = descriptor
        self._elements: List[GroupElem] = list(elements)
        self._generator = generator

    def __getitem__(self, i: int) -> GroupElem:
        while i >= len(self._elements):
            if self._generator is None:
                raise IndexError(f"the tower has only {len(self._elements)} entries")
            self._elements.append(self._generator(len(self._elements)))
        return self._elements[i]

    def prefix(self, length: int) -> List[GroupElem]:
        return [self[i] for i in range(length)]

    @classmethod
    def constant_zero(cls, descriptor: GroupDescriptor) -> 'Tower':
        z = zero(descriptor)
        return cls(descriptor, generator=lambda i: z)


def verify_tower(t: Tower, upto: int) -> bool:
    """2^j * alpha_i == alpha_(i-j) for every i <= upto and j <= i"""
    try:
        entries = t.prefix(upto + 1)
    except IndexError:
        return False
    for i, alpha in enumerate(entries):
        current = alpha
        for j in range(1, i + 1):
            current = elem_scale(current, 2)
            if current != entries[i - j]:
                return False
    return True


def _require_tags(descriptor: GroupDescriptor, role: str):
    if not descriptor.is_all_pruefer() or descriptor.action is None or descriptor.action.tags is None:
        raise DescriptorMismatchException(f"the {role} '{descriptor}' must be all-Pruefer with fixed/neg/swap tags")


def build_fixed_tower(corestriction: Sequence[Sequence[int]], tower_neq_u: Tower, targets: GroupDescriptor,
                      depth: int) -> Tower:
    """
    Given a tower chi^(i) and an integer matrix C into a target split as I + N + P by its action tags, set
        chi_u^(i) = (-C chi^(i+1)) on I  +  (-C chi^(i)) on the chosen half of each P pair
    and return the tower of (chi_u^(i), chi^(i)) in the direct sum target + source. Each entry satisfies
    (1+sigma) chi_u^(i) = -C chi^(i); this and the tower law are verified to *depth*.
    """
    _require_tags(targets, "target")
    source = tower_neq_u.descriptor
    if source.action is None:
        raise DescriptorMismatchException(f"the source '{source}' carries no involution")
    if not verify_tower(tower_neq_u, depth + 1):
        raise InvalidTowerException(f"the input is not a divisible tower up to index {depth + 1}")
    fixed = targets.indices_with_tag(ActionTag.FIXED)
    chosen_halves = [i for i, _ in targets.pairs()]
    combined_descriptor = direct_sum(targets, source)

    def image(i: int) -> GroupElem:
        c = apply_matrix(corestriction, tower_neq_u[i], targets)
        if apply_action(c) != c:
            raise InvalidTowerException(f"the image {c} of entry {i} under the corestriction is not σ-invariant")
        return c

    def entry(i: int) -> GroupElem:
        c_i, c_next = image(i), image(i + 1)
        chi_u = list(zero(targets).coords)
        for index in fixed:
            chi_u[index] = -c_next.coords[index]
        for index in chosen_halves:
            chi_u[index] = -c_i.coords[index]
        return GroupElem(combined_descriptor, tuple(chi_u) + tower_neq_u[i].coords)

    tower = Tower(combined_descriptor, generator=entry)
    for i in range(depth + 1):
        chi_u = GroupElem(targets, tower[i].coords[:targets.rank])
        assert chi_u + apply_action(chi_u) == -image(i), f"(1+σ)χ_u^({i}) differs from -C χ^({i})"
    assert verify_tower(tower, depth), "the combined sequence is not a divisible tower"
    logging.info(f"built a fixed tower of depth {depth} in {combined_descriptor}")
    return tower


def build_p_component_tower(w_p: GroupElem, c_tower: Tower, depth: int) -> Tower:
    """
    On the swap pairs (s, t) of w_p's descriptor set
        w^(i)_s = -c^(i)_s - (w_p)_t / 2^i,   w^(i)_t = (w_p)_t / 2^i
    with the canonical division in Q_2/Z_2; coordinates outside the pairs are zero. Requires
    (1+sigma) w_p == -c^(0) on the pairs and returns a divisible tower over the pair part of w_p with
    (1+sigma) w^(i) == -c^(i) there.
    """
    descriptor = w_p.descriptor
    _require_tags(descriptor, "descriptor")
    if c_tower.descriptor.summands != descriptor.summands:
        raise DescriptorMismatchException("w_p and the tower c lie in different groups")
    if not verify_tower(c_tower, depth + 1):
        raise InvalidTowerException(f"c is not a divisible tower up to index {depth + 1}")
    pairs = descriptor.pairs()
    c_0 = c_tower[0]
    for s, t in pairs:
        total = w_p.coords[s] + w_p.coords[t]
        if total != -c_0.coords[s] or total != -c_0.coords[t]:
            raise InvalidTowerException(f"(1+σ)w_P differs from -c^(0) on the pair ({s},{t})")

    def entry(i: int) -> GroupElem:
        coords = list(zero(descriptor).coords)
        for s, t in pairs:
            if c_tower[i].coords[s] != c_tower[i].coords[t]:
                raise InvalidTowerException(f"c^({i}) is not σ-invariant on the pair ({s},{t})")
            top = w_p.coords[t].divide(i)
            coords[s] = -c_tower[i].coords[s] - top
            coords[t] = top
        return GroupElem(descriptor, tuple(coords))

    tower = Tower(descriptor, generator=entry)
    for i in range(depth + 1):
        w_i, c_i = tower[i], c_tower[i]
        sums = w_i + apply_action(w_i)
        assert all(sums.coords[k] == -c_i.coords[k] for pair in pairs for k in pair), \
            f"(1+σ)w^({i}) differs from -c^({i}) on the pairs"
    assert verify_tower(tower, depth), "the P-component sequence is not a divisible tower"
    return tower
