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

import random
import unittest

from fractions import Fraction

from genus_zero_brauer.exact_algebra.dyadic import Dyadic
from genus_zero_brauer.torsion_core.descriptors import parse_descriptor
from genus_zero_brauer.torsion_core.elements import GroupElem, apply_action, pruefer_vector, zero
from genus_zero_brauer.torsion_core.towers import InvalidTowerException, Tower, build_fixed_tower, \
    build_p_component_tower, verify_tower


def dyadic_tower(descriptor, numerators):
    """alpha_i = numerators / 2^(i+1)"""
    return Tower(descriptor, generator=lambda i: pruefer_vector(descriptor, [Fraction(v, 2 ** (i + 1))
                                                                           for v in numerators]))


def random_invariant_corestriction(rng: random.Random, source_rank: int):
    """rows for the target 'P+P+P+P | fixed,neg,swap(2,3)': the neg row vanishes and the pair rows agree"""
    fixed_row = [rng.randint(-5, 5) for _ in range(source_rank)]
    pair_row = [rng.randint(-5, 5) for _ in range(source_rank)]
    return [fixed_row, [0] * source_rank, pair_row, list(pair_row)]


class TestVerifyTower(unittest.TestCase):
    def setUp(self):
        self.p = parse_descriptor("P")

    def test_examples(self):
        self.assertTrue(verify_tower(Tower.constant_zero(self.p), 12))
        self.assertTrue(verify_tower(dyadic_tower(self.p, [1]), 12))
        entries = dyadic_tower(self.p, [1]).prefix(10)
        entries[6] = pruefer_vector(self.p, [Fraction(3, 2 ** 7)])
        self.assertFalse(verify_tower(Tower(self.p, entries), 9))
        self.assertFalse(verify_tower(Tower(self.p, entries[:3]), 5))


class TestFixedTower(unittest.TestCase):
    def setUp(self):
        self.source = parse_descriptor("P+P | swap(0,1)")
        self.targets = parse_descriptor("P+P+P+P | fixed,neg,swap(2,3)")

    def fixed_part(self, elem):
        return GroupElem(self.targets, elem.coords[:self.targets.rank])

    def test_zero_input(self):
        tower = build_fixed_tower([[1, 2], [0, 0], [1, 1], [1, 1]], Tower.constant_zero(self.source), self.targets, 8)
        for i in range(9):
            self.assertFalse(tower[i])

    def test_zero_corestriction(self):
        source_tower = dyadic_tower(self.source, [3, 1])
        tower = build_fixed_tower([[0, 0]] * 4, source_tower, self.targets, 8)
        for i in range(9):
            self.assertEqual(zero(self.targets), self.fixed_part(tower[i]))
            self.assertEqual(source_tower[i].coords, tower[i].coords[self.targets.rank:])

    def test_random_instances(self):
        rng = random.Random(7)
        for _ in range(20):
            corestriction = random_invariant_corestriction(rng, 2)
            source_tower = dyadic_tower(self.source, [rng.randint(0, 63), rng.randint(0, 63)])
            tower = build_fixed_tower(corestriction, source_tower, self.targets, 12)
            self.assertTrue(verify_tower(tower, 12))
            for i in range(13):
                chi_u = self.fixed_part(tower[i])
                c = [sum(m * v.value for m, v in zip(row, source_tower[i].coords)) for row in corestriction]
                self.assertEqual(pruefer_vector(self.targets, [-v for v in c]), chi_u + apply_action(chi_u))

    def test_rejects_non_invariant_image(self):
        with self.assertRaises(InvalidTowerException):
            build_fixed_tower([[0, 0], [0, 0], [1, 0], [0, 1]], dyadic_tower(self.source, [1, 0]), self.targets, 4)

    def test_rejects_invalid_input_tower(self):
        entries = dyadic_tower(self.source, [1, 1]).prefix(6)
        entries[3] = zero(self.source)
        with self.assertRaises(InvalidTowerException):
            build_fixed_tower([[1, 1]] * 4, Tower(self.source, entries), self.targets, 4)


class TestPComponentTower(unittest.TestCase):
    def setUp(self):
        self.g = parse_descriptor("P+P+P | swap(0,1),fixed")

    def test_tower_over_w(self):
        c_tower = dyadic_tower(self.g, [5, 5, 0])
        w_t = Dyadic.of(3, 8)
        w_s = -c_tower[0].coords[0] - w_t
        w_p = GroupElem(self.g, (w_s, w_t, Dyadic()))
        tower = build_p_component_tower(w_p, c_tower, 10)
        self.assertEqual(w_p, tower[0])
        self.assertTrue(verify_tower(tower, 10))
        for i in range(11):
            sums = tower[i] + apply_action(tower[i])
            self.assertEqual(-c_tower[i].coords[0], sums.coords[0])

    def test_precondition(self):
        c_tower = dyadic_tower(self.g, [1, 1, 0])
        w_p = GroupElem(self.g, (Dyadic.of(1, 4), Dyadic.of(1, 8), Dyadic()))
        self.assertRaises(InvalidTowerException, build_p_component_tower, w_p, c_tower, 4)
