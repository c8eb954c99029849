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
from genus_zero_brauer.torsion_core.descriptors import ActionTag, GroupDescriptor, NotAnInvolutionException, Summand, \
    SummandType, direct_sum, parse_descriptor
from genus_zero_brauer.torsion_core.elements import GenCoord, GroupElem, apply_action, elem_add, elem_order, \
    elem_scale, halves, normalize_gen, parse_elem, torsion_elements, zero


def summands(max_n=3):
    return st.one_of(st.integers(1, max_n).map(Summand.cyclic),
                     st.just(Summand.pruefer()),
                     st.integers(1, max_n).map(Summand.gen_pruefer))


def descriptors(max_summands=5, max_n=3):
    return st.lists(summands(max_n), min_size=1, max_size=max_summands).map(lambda s: GroupDescriptor(tuple(s)))


def coordinates(summand: Summand, max_support=3, max_exponent=5):
    if summand.kind == SummandType.CYCLIC:
        return st.integers(0, 2 ** summand.n - 1)
    if summand.kind == SummandType.PRUEFER:
        return st.integers(0, 2 ** max_exponent - 1).map(lambda j: Dyadic(Fraction(j, 2 ** max_exponent)))
    return st.builds(lambda a, t: normalize_gen(dict(enumerate(a, start=1)), t, summand.n),
                     st.lists(st.integers(0, 2 ** max_support - 1), max_size=max_support),
                     st.integers(0, 2 ** summand.n - 1))


@st.composite
def elements_of(draw, descriptor: GroupDescriptor, **kwargs):
    return GroupElem(descriptor, tuple(draw(coordinates(s, **kwargs)) for s in descriptor.summands))


@st.composite
def descriptors_with_elements(draw, max_summands=5, max_n=3):
    descriptor = draw(descriptors(max_summands, max_n))
    return descriptor, draw(elements_of(descriptor))


def single(summand: Summand, coordinate) -> GroupElem:
    return GroupElem(GroupDescriptor((summand,)), (coordinate,))


class TestDescriptors(unittest.TestCase):
    def test_parse_and_format(self):
        g = parse_descriptor("C1+C3+P | fixed,fixed,neg")
        self.assertEqual((Summand.cyclic(1), Summand.cyclic(3), Summand.pruefer()), g.summands)
        self.assertEqual([2], g.indices_with_tag(ActionTag.NEG))
        self.assertEqual(g, parse_descriptor(str(g)))
        self.assertEqual("G2+P", str(parse_descriptor(" G2 + P ")))

    def test_swap_tags_fill_around_pairs(self):
        g = parse_descriptor("P+C2+P | swap(0,2),neg")
        self.assertEqual([(0, 2)], g.pairs())
        self.assertEqual([1], g.indices_with_tag(ActionTag.NEG))
        self.assertEqual(g, parse_descriptor(str(g)))

    def test_matrix_action(self):
        g = parse_descriptor("P+P | matrix [[0,1],[1,0]]")
        self.assertTrue(g.action.is_matrix)
        self.assertEqual(g, parse_descriptor(str(g)))

    def test_invalid(self):
        for text in ["C0", "X1", "P2", "C1+", "C1 | fixed,neg", "P+P | swap(0,0)", "P | matrix [[1,0]",
                     "P | swap(0,1)"]:
            with self.subTest(text=text):
                self.assertRaises(ParseException, parse_descriptor, text)
        self.assertRaises(NotAnInvolutionException, parse_descriptor, "P+C2 | swap(0,1)")
        self.assertRaises(NotAnInvolutionException, parse_descriptor, "P+P | matrix [[1,1],[0,1]]")
        self.assertRaises(NotAnInvolutionException, parse_descriptor, "C1+P | matrix [[1,0],[0,1]]")

    def test_direct_sum(self):
        g = direct_sum(parse_descriptor("P+P | swap(0,1)"), parse_descriptor("P+C1 | neg,fixed"))
        self.assertEqual("P+P+P+C1 | swap(0,1),neg,fixed", str(g))
        mixed = direct_sum(parse_descriptor("P | neg"), parse_descriptor("P+P | matrix [[0,1],[1,0]]"))
        self.assertEqual(((-1, 0, 0), (0, 0, 1), (0, 1, 0)), mixed.action.matrix)


class TestElements(unittest.TestCase):
    def test_add_examples(self):
        self.assertEqual(single(Summand.cyclic(3), 2), elem_add(single(Summand.cyclic(3), 5),
                                                                single(Summand.cyclic(3), 5)))
        p = Summand.pruefer()
        self.assertEqual(single(p, Dyadic.of(1, 4)), elem_add(single(p, Dyadic.of(3, 4)), single(p, Dyadic.of(1, 2))))
        g1 = Summand.gen_pruefer(1)
        two_e2 = single(g1, normalize_gen({2: 2}, 0, 1))
        self.assertEqual(single(g1, GenCoord((), 1)), elem_add(two_e2, two_e2))

    def test_normal_form_relations(self):
        self.assertEqual(GenCoord((), 1), normalize_gen({3: 8}, 0, 2))
        self.assertEqual(GenCoord(((1, 1),), 2), normalize_gen({1: 3}, 1, 2))
        self.assertEqual(GenCoord(((2, 3),), 3), normalize_gen({2: -1}, 0, 2))

    def test_halves_examples(self):
        c2 = Summand.cyclic(2)
        self.assertEqual({single(c2, 0), single(c2, 2)}, set(halves(single(c2, 0))))
        self.assertEqual([], halves(single(c2, 1)))
        p = Summand.pruefer()
        self.assertEqual({single(p, Dyadic.of(1, 4)), single(p, Dyadic.of(3, 4))},
                         set(halves(single(p, Dyadic.of(1, 2)))))
        top = single(Summand.gen_pruefer(1), GenCoord((), 1))
        self.assertEqual({single(Summand.gen_pruefer(1), c) for c in
                          [GenCoord(((1, 1),), 0), GenCoord(((1, 1),), 1), GenCoord(((2, 2),), 0),
                           GenCoord(((2, 2),), 1)]},
                         set(halves(top, window=2)))

    @given(descriptors_with_elements(max_summands=2))
    @settings(max_examples=150, deadline=None)
    def test_every_half_doubles_back(self, descriptor_and_elem):
        _, x = descriptor_and_elem
        for y in halves(x):
            self.assertEqual(x, elem_scale(y, 2))

    @given(descriptors_with_elements())
    @settings(max_examples=150, deadline=None)
    def test_group_laws(self, descriptor_and_elem):
        descriptor, x = descriptor_and_elem
        self.assertEqual(zero(descriptor), x - x)
        self.assertEqual(elem_scale(x, 3), x + x + x)
        self.assertEqual(zero(descriptor), elem_scale(x, elem_order(x)))
        if elem_order(x) > 1:
            self.assertNotEqual(zero(descriptor), elem_scale(x, elem_order(x) // 2))

    @given(descriptors_with_elements())
    @settings(max_examples=100, deadline=None)
    def test_text_form_parses_back(self, descriptor_and_elem):
        descriptor, x = descriptor_and_elem
        self.assertEqual(x, parse_elem(descriptor, str(x)))

    def test_action(self):
        g = parse_descriptor("C2+P+P | neg,swap(1,2)")
        x = parse_elem(g, "(1, 1/4, 1/2)")
        self.assertEqual(parse_elem(g, "(3, 1/2, 1/4)"), apply_action(x))
        self.assertEqual(x, apply_action(apply_action(x)))
        m = parse_descriptor("P+P | matrix [[1,0],[1,-1]]")
        y = parse_elem(m, "(1/4, 1/8)")
        self.assertEqual(y, apply_action(y))
        self.assertEqual(parse_elem(m, "(0, 7/8)"), apply_action(parse_elem(m, "(0, 1/8)")))
        self.assertEqual(y, apply_action(apply_action(y)))

    def test_parse_errors(self):
        g = parse_descriptor("C2+G1")
        self.assertRaises(ParseException, parse_elem, g, "(1)")
        self.assertRaises(ParseException, parse_elem, g, "(1, 2*y)")
        self.assertRaises(ParseException, parse_elem, g, "(1, 2*e0)")
        self.assertEqual(parse_elem(g, "(1, 1*x)"), parse_elem(g, "(1, 2*e1)"))

    def test_torsion_elements(self):
        self.assertEqual([0, 2, 4, 6], [x.coords[0] for x in torsion_elements(parse_descriptor("C3"), 2)])
        g = parse_descriptor("C1+P+G1")
        elements = list(torsion_elements(g, 3))
        self.assertEqual(2 * 8 * 16, len(elements))
        self.assertEqual(len(elements), len(set(elements)))
        self.assertTrue(all(elem_order(x) <= 8 for x in elements))
        self.assertEqual([zero(g)], list(torsion_elements(g, 0)))
        g2 = list(torsion_elements(parse_descriptor("G2"), 2))
        self.assertIn(parse_elem(parse_descriptor("G2"), "(1*e1+2*e2+3*x)"), g2)
        self.assertNotIn(parse_elem(parse_descriptor("G2"), "(1*e1)"), g2)
        self.assertRaises(ValueError, list, torsion_elements(g, -1))
