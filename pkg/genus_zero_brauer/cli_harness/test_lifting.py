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

import unittest

from fractions import Fraction

from genus_zero_brauer.cli_harness.lifting import ComponentKind, PreimagePolicy, QuotientModel, divided_tower, \
    lift_tower
from genus_zero_brauer.exact_algebra.dyadic import Dyadic
from genus_zero_brauer.torsion_core.descriptors import DescriptorMismatchException, parse_descriptor
from genus_zero_brauer.torsion_core.elements import GroupElem, elem_scale, zero
from genus_zero_brauer.torsion_core.towers import InvalidTowerException, Tower, verify_tower


class TestQuotientModel(unittest.TestCase):
    def setUp(self):
        self.killing = QuotientModel.parse("C1+P", "P", ["kill:0", "double:1->0"])
        self.reducing = QuotientModel.parse("C3+P", "C2+P", ["reduce:0->0", "identity:1->1"])

    def test_parse(self):
        self.assertEqual([ComponentKind.KILL, ComponentKind.DOUBLE], [m.kind for m in self.killing.components])
        self.assertIsNone(self.killing.components[0].target)
        self.assertEqual(1, self.reducing.components[1].source)

    def test_apply_and_preimage(self):
        x = GroupElem(self.killing.domain, (1, Dyadic.of(3, 8)))
        self.assertEqual(GroupElem(self.killing.codomain, (Dyadic.of(3, 4),)), self.killing.apply(x))
        y = GroupElem(self.reducing.codomain, (3, Dyadic.of(1, 4)))
        for model, target in [(self.killing, GroupElem(self.killing.codomain, (Dyadic.of(5, 16),))),
                              (self.reducing, y)]:
            least = model.preimage(target)
            alternate = model.preimage(target, PreimagePolicy.ALTERNATE)
            self.assertEqual(target, model.apply(least))
            self.assertEqual(target, model.apply(alternate))
            self.assertNotEqual(least, alternate)
            self.assertFalse(model.apply(least - alternate))

    def test_kernel(self):
        for model in (self.killing, self.reducing):
            self.assertTrue(model.kernel_has_exponent_two())
            for g in model.kernel_generators():
                self.assertTrue(g)
                self.assertFalse(model.apply(g))
                self.assertFalse(elem_scale(g, 2))
        self.assertEqual(2, len(self.killing.kernel_generators()))
        self.assertEqual([GroupElem(self.reducing.domain, (4, Dyadic()))], self.reducing.kernel_generators())

    def test_invalid_models(self):
        invalid = [("C1+P", "P", ["kill:0"]),
                   ("C1+P", "P", ["kill:0", "double:1->0", "identity:1->0"]),
                   ("C2", "C2", ["reduce:0->0"]),
                   ("C2", "C1", ["kill:0"]),
                   ("C1", "C1", ["double:0->0"]),
                   ("P", "C1", ["identity:0->0"]),
                   ("C2+P", "C1+P", ["reduce:0->1", "identity:1->0"]),
                   ("P", "P", ["bogus:0->0"]),
                   ("P", "P", ["identity:x->0"])]
        for domain, codomain, components in invalid:
            with self.subTest(components=components):
                self.assertRaises(DescriptorMismatchException, QuotientModel.parse, domain, codomain, components)

    def test_wrong_group(self):
        self.assertRaises(DescriptorMismatchException, self.killing.apply, zero(parse_descriptor("P")))
        self.assertRaises(DescriptorMismatchException, self.killing.preimage, zero(parse_descriptor("C1+P")))


class TestLiftTower(unittest.TestCase):
    def setUp(self):
        self.model = QuotientModel.parse("C1+P", "P", ["kill:0", "double:1->0"])

    def test_zero_tower(self):
        lifted = lift_tower(self.model, zero(self.model.domain), Tower.constant_zero(self.model.codomain), depth=8)
        for n in range(9):
            self.assertFalse(lifted[n])

    def test_lift_to_depth_sixteen(self):
        alpha = GroupElem(self.model.domain, (1, Dyadic.of(1, 4)))
        tower_down = divided_tower(self.model.apply(alpha))
        lifted = lift_tower(self.model, alpha, tower_down, depth=16)
        self.assertTrue(verify_tower(lifted, 16))
        for n in range(17):
            self.assertEqual(tower_down[n], self.model.apply(lifted[n]))
        self.assertEqual(GroupElem(self.model.domain, (0, Dyadic(Fraction(1, 4)))), lifted[0])
        self.assertFalse(self.model.apply(alpha - lifted[0]))

    def test_policy_independence(self):
        for model, alpha in [(self.model, GroupElem(self.model.domain, (1, Dyadic.of(3, 8)))),
                             (QuotientModel.parse("C3+P", "C2+P", ["reduce:0->0", "identity:1->1"]),
                              GroupElem(parse_descriptor("C3+P"), (4, Dyadic.of(1, 8))))]:
            tower_down = divided_tower(model.apply(alpha))
            least = lift_tower(model, alpha, tower_down, depth=10)
            alternate = lift_tower(model, alpha, tower_down, depth=10, policy=PreimagePolicy.ALTERNATE)
            self.assertEqual(least.prefix(11), alternate.prefix(11))

    def test_invalid_towers(self):
        alpha = GroupElem(self.model.domain, (0, Dyadic.of(1, 4)))
        self.assertRaises(DescriptorMismatchException, lift_tower, self.model, alpha,
                          Tower.constant_zero(parse_descriptor("P+P")), 4)
        self.assertRaises(InvalidTowerException, lift_tower, self.model, alpha,
                          divided_tower(GroupElem(self.model.codomain, (Dyadic.of(1, 4),))), 4)
        short = Tower(self.model.codomain, divided_tower(self.model.apply(alpha)).prefix(3))
        self.assertRaises(InvalidTowerException, lift_tower, self.model, alpha, short, 4)

    def test_divided_tower(self):
        tower = divided_tower(GroupElem(parse_descriptor("P+P"), (Dyadic.of(1, 2), Dyadic.of(3, 4))))
        self.assertEqual(GroupElem(tower.descriptor, (Dyadic.of(1, 8), Dyadic.of(3, 16))), tower[2])
        self.assertTrue(verify_tower(tower, 12))
        self.assertTrue(verify_tower(divided_tower(zero(parse_descriptor("C2+P"))), 6))
        self.assertRaises(InvalidTowerException, divided_tower, GroupElem(parse_descriptor("C2+P"), (1, Dyadic())))


if __name__ == "__main__":
    unittest.main()
