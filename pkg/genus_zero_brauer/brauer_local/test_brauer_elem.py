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

from hypothesis import given, settings, strategies as st

from genus_zero_brauer.exact_algebra.dyadic import Dyadic
from genus_zero_brauer.exact_algebra.parsing import ParseException
from genus_zero_brauer.exact_algebra.rationals import is_squarefree
from genus_zero_brauer.exact_algebra.symbols import PlaceQ, REAL_PLACE
from genus_zero_brauer.brauer_local.brauer_elem import BrauerElem, HALF, galois_act, halve_divisible, \
    one_minus_sigma, parse_brauer_elem, quaternion_invariants, restriction_from_q
from genus_zero_brauer.brauer_local.places import PlaceL, SplittingKind, balancing_candidates, parse_place_l, \
    place_of, split_root, splitting_type
from genus_zero_brauer.cli_harness.samplers import SMALL_PRIMES, finite_places, with_zero_sum

FIELD_PARAMETERS = [d for d in range(-15, 16) if d not in (0, 1) and is_squarefree(d)]


@st.composite
def brauer_elems(draw, d=2, divisible=False):
    invariants = {}
    for place in draw(st.lists(st.sampled_from(finite_places(d)), max_size=6)):
        invariants[place] = Dyadic.of(draw(st.integers(0, 31)), 32)
    if not divisible and d > 0 and draw(st.booleans()):
        invariants[place_of(REAL_PLACE, d, 0)] = HALF
    return with_zero_sum(d, invariants)


def bruteforce_splitting(p, d):
    if d % p == 0:
        return SplittingKind.RAMIFIED
    if p == 2:
        if d % 4 != 1:
            return SplittingKind.RAMIFIED
        return SplittingKind.SPLIT if any((x * x - d) % 8 == 0 for x in range(8)) else SplittingKind.INERT
    return SplittingKind.SPLIT if any((x * x - d) % p == 0 for x in range(p)) else SplittingKind.INERT


class TestPlaces(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(SplittingKind.SPLIT, splitting_type(PlaceQ(7), 2))
        self.assertEqual(SplittingKind.INERT, splitting_type(PlaceQ(5), 2))
        self.assertEqual(SplittingKind.RAMIFIED, splitting_type(PlaceQ(2), 2))
        self.assertEqual(SplittingKind.SPLIT, splitting_type(PlaceQ(2), -7))
        self.assertEqual(SplittingKind.INERT, splitting_type(PlaceQ(2), 5))
        self.assertEqual(SplittingKind.REAL_PAIR, splitting_type(REAL_PLACE, 2))
        self.assertEqual(SplittingKind.COMPLEX, splitting_type(REAL_PLACE, -1))
        self.assertRaises(ValueError, splitting_type, PlaceQ(3), 4)
        self.assertRaises(ValueError, splitting_type, PlaceQ(3), 1)

    def test_against_residue_search(self):
        for d in FIELD_PARAMETERS:
            for p in SMALL_PRIMES:
                with self.subTest(d=d, p=p):
                    self.assertEqual(bruteforce_splitting(p, d), splitting_type(PlaceQ(p), d))

    def test_split_roots(self):
        self.assertEqual(3, split_root(place_of(PlaceQ(7), 2, 0), 2))
        self.assertEqual(4, split_root(place_of(PlaceQ(7), 2, 1), 2))
        self.assertEqual(10, split_root(place_of(PlaceQ(7), 2, 0), 2, precision=2))
        for d in (17, -7, 33):
            for precision in (1, 3, 5):
                root = split_root(place_of(PlaceQ(2), d, 0), d, precision)
                self.assertEqual(1, root % 4)
                self.assertEqual(0, (root * root - d) % 2 ** (precision + 1))
        self.assertRaises(ValueError, split_root, place_of(PlaceQ(5), 2), 2)

    def test_parse_and_conjugate(self):
        place = parse_place_l("7.1", 2)
        self.assertEqual(PlaceL(PlaceQ(7), SplittingKind.SPLIT, 1), place)
        self.assertEqual(place, place.conjugate().conjugate())
        self.assertEqual(parse_place_l("3", 2), parse_place_l("3", 2).conjugate())
        self.assertEqual("inf.0", str(parse_place_l("inf.0", 2)))
        for text in ["7", "3.0", "inf", "4", "x"]:
            with self.subTest(text=text):
                self.assertRaises(ParseException, parse_place_l, text, 2)

    def test_balancing_candidates(self):
        candidates = balancing_candidates(2, 3)
        self.assertEqual(["3", "5", "11", "2"], [str(p) for p in candidates])


class TestBrauerElem(unittest.TestCase):
    def test_galois_examples(self):
        b = parse_brauer_elem("d=2; 7.0:1/4, 7.1:3/4")
        self.assertEqual(parse_brauer_elem("d=2; 7.0:3/4, 7.1:1/4"), galois_act(b))
        inert = parse_brauer_elem("d=2; 3:1/4, 5:3/4")
        self.assertEqual(inert, galois_act(inert))
        self.assertFalse(one_minus_sigma(inert))

    def test_one_minus_sigma_example(self):
        b = parse_brauer_elem("d=2; 7.0:1/4, 3:3/4")
        self.assertEqual(parse_brauer_elem("d=2; 7.0:1/4, 7.1:3/4"), one_minus_sigma(b))

    @given(brauer_elems(), brauer_elems())
    @settings(max_examples=150, deadline=None)
    def test_action_laws(self, b, c):
        self.assertEqual(b, galois_act(galois_act(b)))
        self.assertEqual(galois_act(b + c), galois_act(b) + galois_act(c))
        out = one_minus_sigma(b)
        self.assertEqual(-out, galois_act(out))
        self.assertTrue(all(p.is_paired for p in out.support))

    @given(brauer_elems(d=-5))
    @settings(max_examples=100, deadline=None)
    def test_text_form(self, b):
        self.assertEqual(b, parse_brauer_elem(str(b)))

    def test_validation(self):
        for text in ["d=2; 3:1/4", "d=2; inf.0:1/4, 3:3/4", "d=-1; inf:1/2, 3:1/2", "d=4; 3:0", "2; 3:1/2",
                     "d=2; 7:1/2, 3:1/2", "d=2; 3=1/2", "d=2; 3:1/3, 5:2/3"]:
            with self.subTest(text=text):
                self.assertRaises(ParseException, parse_brauer_elem, text)
        self.assertEqual(BrauerElem.zero(3), parse_brauer_elem("d=3; 0"))
        self.assertEqual(BrauerElem.zero(3), parse_brauer_elem("5:1/2, 7:1/2, 5:1/2, 7:1/2", d=3))

    def test_order_and_scaling(self):
        b = parse_brauer_elem("d=2; 7.0:1/8, 3:7/8")
        self.assertEqual(8, b.order())
        self.assertFalse(8 * b)
        self.assertEqual(parse_brauer_elem("d=2; 7.0:1/4, 3:3/4"), 2 * b)

    def test_halving_example(self):
        b = parse_brauer_elem("d=2; 3:1/2, 5:1/2")
        self.assertEqual(parse_brauer_elem("d=2; 3:3/4, 5:1/4"), halve_divisible(b))
        real = parse_brauer_elem("d=2; inf.0:1/2, inf.1:1/2")
        self.assertFalse(real.is_divisible())
        self.assertRaises(ValueError, halve_divisible, real)

    @given(brauer_elems(divisible=True))
    @settings(max_examples=150, deadline=None)
    def test_divisible_elements_halve(self, b):
        self.assertTrue(b.is_divisible())
        current = b
        for _ in range(6):
            half = halve_divisible(current)
            self.assertEqual(current, 2 * half)
            current = half

    def test_restriction(self):
        self.assertFalse(restriction_from_q(quaternion_invariants(3, 2), 2))
        self.assertEqual(parse_brauer_elem("d=5; inf.0:1/2, inf.1:1/2"),
                         restriction_from_q(quaternion_invariants(-1, -1), 5))
        self.assertEqual(parse_brauer_elem("d=2; 7.0:1/2, 7.1:1/2"),
                         restriction_from_q({PlaceQ(7): HALF, PlaceQ(3): HALF}, 2))
        self.assertRaises(ValueError, restriction_from_q, {PlaceQ(7): HALF}, 2)

    def test_quaternion_restricts_trivially(self):
        for c in range(-12, 13):
            for d in FIELD_PARAMETERS:
                if c:
                    with self.subTest(c=c, d=d):
                        self.assertFalse(restriction_from_q(quaternion_invariants(c, d), d))
        self.assertEqual({PlaceQ(2): HALF, PlaceQ(3): HALF}, quaternion_invariants(3, 2))
        self.assertEqual({}, quaternion_invariants(Fraction(1, 4), 3))
