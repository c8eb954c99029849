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

from genus_zero_brauer.exact_algebra.parsing import ParseException
from genus_zero_brauer.exact_algebra.quadratic_field import QuadElem, is_square_quad, parse_quad_elem, quad_conj, \
    quad_norm, quad_sqrt, same_square_class
from genus_zero_brauer.exact_algebra.rationals import InputTooLargeException, is_square_rational, parse_rational, \
    squarefree_class

small_rationals = st.fractions(min_value=-40, max_value=40, max_denominator=12)


def quad_elems(d=2):
    return st.builds(QuadElem, small_rationals, small_rationals, st.just(d))


def nonzero_quad_elems(d=2):
    return quad_elems(d).filter(bool)


class TestRationals(unittest.TestCase):
    def test_is_square_rational(self):
        self.assertTrue(is_square_rational(Fraction(49, 4)))
        self.assertFalse(is_square_rational(7))
        self.assertFalse(is_square_rational(-4))
        self.assertTrue(is_square_rational(0))

    def test_squarefree_class(self):
        self.assertEqual(2, squarefree_class(8))
        self.assertEqual(6, squarefree_class(Fraction(3, 2)))
        self.assertEqual(-1, squarefree_class(Fraction(-9, 4)))
        self.assertEqual(2, squarefree_class(Fraction(1, 2)))
        self.assertRaises(ValueError, squarefree_class, 0)

    def test_parse_rational(self):
        self.assertEqual(Fraction(-3, 4), parse_rational("-6/8"))
        self.assertEqual(Fraction(5), parse_rational(" 5 "))
        self.assertRaises(ParseException, parse_rational, "3/0")
        self.assertRaises(ParseException, parse_rational, "3/x")
        self.assertRaises(InputTooLargeException, parse_rational, str(2 ** 64))


class TestQuadElem(unittest.TestCase):
    def test_conj(self):
        self.assertEqual(QuadElem(1, -1, 2), quad_conj(QuadElem(1, 1, 2)))
        self.assertEqual(QuadElem.rational(3, 2), quad_conj(QuadElem.rational(3, 2)))

    def test_norm(self):
        self.assertEqual(-1, quad_norm(QuadElem(1, 1, 2)))
        self.assertEqual(7, quad_norm(QuadElem(3, 1, 2)))
        self.assertEqual(2, quad_norm(QuadElem(2, 1, 2)))

    def test_is_square_quad(self):
        self.assertTrue(is_square_quad(QuadElem(3, 2, 2)))
        self.assertEqual(QuadElem(3, 2, 2), quad_sqrt(QuadElem(3, 2, 2)) ** 2)
        self.assertFalse(is_square_quad(QuadElem.sqrt_d(2)))
        self.assertTrue(is_square_quad(QuadElem.rational(4, 2)))
        # 2 = (sqrt 2)^2 and 18 = (3 sqrt 2)^2
        self.assertTrue(is_square_quad(QuadElem.rational(18, 2)))
        self.assertFalse(is_square_quad(QuadElem.rational(-1, 2)))
        self.assertTrue(is_square_quad(QuadElem.rational(-1, -1)))
        self.assertRaises(ValueError, is_square_quad, QuadElem.rational(0, 2))

    def test_invalid_d(self):
        self.assertRaises(ValueError, QuadElem, 1, 1, 8)
        self.assertRaises(ValueError, QuadElem, 1, 1, 1)
        self.assertRaises(ValueError, QuadElem.__add__, QuadElem(1, 1, 2), QuadElem(1, 1, 3))

    def test_parse_and_format(self):
        self.assertEqual(QuadElem(1, 1, 2), parse_quad_elem("1+1*sqrt(2)"))
        self.assertEqual(QuadElem(Fraction(1, 2), -3, 5), parse_quad_elem("(1/2-3*sqrt(5))"))
        self.assertEqual(QuadElem(0, 1, 2), parse_quad_elem("sqrt(2)"))
        self.assertEqual(QuadElem.rational(7, 3), parse_quad_elem("7", d=3))
        self.assertRaises(ParseException, parse_quad_elem, "7")
        self.assertRaises(ParseException, parse_quad_elem, "1+sqrt(2)+sqrt(3)")
        x = QuadElem(Fraction(-2, 3), Fraction(5, 7), 3)
        self.assertEqual(x, parse_quad_elem(str(x)))

    @given(quad_elems(), quad_elems())
    @settings(max_examples=200, deadline=None)
    def test_norm_is_multiplicative(self, x, y):
        self.assertEqual(quad_norm(x) * quad_norm(y), quad_norm(x * y))

    @given(quad_elems(5))
    @settings(deadline=None)
    def test_conj_is_involution(self, x):
        self.assertEqual(x, quad_conj(quad_conj(x)))
        self.assertEqual(x.b == 0, quad_conj(x) == x)

    @given(nonzero_quad_elems(2))
    @settings(max_examples=200, deadline=None)
    def test_squares_are_squares(self, x):
        self.assertTrue(is_square_quad(x * x))

    @given(nonzero_quad_elems(-3))
    @settings(max_examples=200, deadline=None)
    def test_square_implies_square_norm(self, x):
        if is_square_quad(x):
            self.assertTrue(is_square_rational(quad_norm(x)))
            root = quad_sqrt(x)
            self.assertEqual(x, root * root)

    @given(nonzero_quad_elems(2), nonzero_quad_elems(2))
    @settings(deadline=None)
    def test_square_class_is_stable_under_squares(self, x, y):
        self.assertTrue(same_square_class(x, x * y * y))

    @given(nonzero_quad_elems(7))
    @settings(deadline=None)
    def test_division_inverts_multiplication(self, x):
        y = QuadElem(3, -2, 7)
        self.assertEqual(y, (y * x) / x)
        self.assertEqual(QuadElem.rational(1, 7), x * x.inverse())
