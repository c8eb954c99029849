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

from hypothesis import given, settings, strategies as st

from genus_zero_brauer.exact_algebra.dyadic import Dyadic, parse_dyadic
from genus_zero_brauer.exact_algebra.parsing import ParseException
from genus_zero_brauer.exact_algebra.polynomials import QuadPoly, inverse_mod, parse_quad_poly, poly_gcd, resultant
from genus_zero_brauer.exact_algebra.quadratic_field import QuadElem
from genus_zero_brauer.exact_algebra.test_quadratic_field import quad_elems


def quad_polys(d=2, max_degree=3):
    return st.lists(quad_elems(d), min_size=1, max_size=max_degree + 1).map(lambda cs: QuadPoly.of(cs, d))


def u_minus(root):
    return QuadPoly.linear(root)


class TestQuadPoly(unittest.TestCase):
    def test_parse(self):
        p = parse_quad_poly("u^2 - (1+1*sqrt(2))*u + 3", 2)
        self.assertEqual(QuadPoly.of([3, QuadElem(-1, -1, 2), 1], 2), p)
        self.assertEqual(QuadPoly.of([0, 2], 5), parse_quad_poly("2*u", 5))
        self.assertEqual(QuadPoly.of([0, QuadElem(0, 3, 5)], 5), parse_quad_poly("3*sqrt(5)*u", 5))
        self.assertEqual(QuadPoly.of([-1, 0, 0, 1], 3), parse_quad_poly("u^3 - 1", 3))
        self.assertRaises(ParseException, parse_quad_poly, "u^2 +", 2)
        self.assertRaises(ParseException, parse_quad_poly, "u^2 + sqrt(3)", 2)
        self.assertRaises(ParseException, parse_quad_poly, "", 2)

    def test_str_parses_back(self):
        p = QuadPoly.of([QuadElem(1, -2, 3), QuadElem(0, 1, 3), -1, 1], 3)
        self.assertEqual(p, parse_quad_poly(str(p), 3))

    def test_divmod(self):
        f = parse_quad_poly("u^3 + 2*u + 1", 2)
        g = parse_quad_poly("u - sqrt(2)", 2)
        q, r = divmod(f, g)
        self.assertEqual(f, q * g + r)
        self.assertEqual(f(QuadElem.sqrt_d(2)), r.constant_term())

    def test_gcd_and_inverse(self):
        p = parse_quad_poly("u^2 - 3", 2)
        f = parse_quad_poly("u + 1", 2)
        inv = inverse_mod(f, p)
        self.assertEqual(QuadPoly.constant(1, 2), (inv * f) % p)
        self.assertEqual(p, poly_gcd(p * f, p * parse_quad_poly("u - 7", 2)))

    @given(quad_polys(), quad_polys(max_degree=2))
    @settings(max_examples=100, deadline=None)
    def test_division_identity(self, f, g):
        if g.is_zero():
            return
        q, r = divmod(f, g)
        self.assertEqual(f, q * g + r)
        self.assertTrue(r.is_zero() or r.degree < g.degree)


class TestResultant(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(QuadElem.rational(-3, 2), resultant(parse_quad_poly("u^2 - 3", 2), parse_quad_poly("u", 2)))
        a, b = QuadElem(1, 1, 2), QuadElem(3, -1, 2)
        self.assertEqual(a - b, resultant(u_minus(a), u_minus(b)))
        f = parse_quad_poly("u^3 - u + 5", 2)
        self.assertEqual(QuadElem.rational(1, 2), resultant(f, QuadPoly.constant(1, 2)))
        self.assertRaises(ValueError, resultant, f, QuadPoly((), 2))

    @given(quad_elems(), quad_elems(), quad_elems(), quad_elems())
    @settings(max_examples=100, deadline=None)
    def test_root_product_formula(self, a1, a2, b1, b2):
        # Res(f, g) = prod over roots of (alpha_i - beta_j) for monic f, g
        f = u_minus(a1) * u_minus(a2)
        g = u_minus(b1) * u_minus(b2)
        expected = (a1 - b1) * (a1 - b2) * (a2 - b1) * (a2 - b2)
        self.assertEqual(expected, resultant(f, g))
        self.assertEqual(expected, resultant(g, f))

    @given(quad_elems(), quad_polys(max_degree=3))
    @settings(max_examples=100, deadline=None)
    def test_norm_from_linear_factor(self, a, f):
        if f.is_zero():
            return
        self.assertEqual(f(a), resultant(u_minus(a), f))


class TestDyadic(unittest.TestCase):
    def test_normal_form(self):
        self.assertEqual(Dyadic.of(1, 4), Dyadic.of(3, 4) + Dyadic.of(1, 2))
        self.assertEqual(Dyadic.of(3, 4), -Dyadic.of(1, 4))
        self.assertEqual(Dyadic.of(0), Dyadic.of(5, 1))
        self.assertEqual(8, Dyadic.of(3, 8).order())
        self.assertRaises(ValueError, Dyadic.of, 1, 3)
        self.assertRaises(ParseException, parse_dyadic, "1/6")

    def test_halves_and_division(self):
        self.assertEqual((Dyadic.of(1, 4), Dyadic.of(3, 4)), Dyadic.of(1, 2).halves())
        x = Dyadic.of(3, 8)
        for k in range(6):
            self.assertEqual(x.divide(k), 2 * x.divide(k + 1))
            self.assertEqual(x, (2 ** k) * x.divide(k))
