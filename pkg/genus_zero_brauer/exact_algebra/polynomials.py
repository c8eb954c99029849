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
from fractions import Fraction
from typing import Sequence, Tuple, Union

from genus_zero_brauer.exact_algebra.parsing import ParseException, Scanner
from genus_zero_brauer.exact_algebra.quadratic_field import QuadElem, scan_quad_atom, scan_quad_elem
from genus_zero_brauer.exact_algebra.rationals import RationalLike

VARIABLE = "u"


@dataclass(frozen=True)
class QuadPoly:
    """
    A polynomial in the indeterminate u over Q(sqrt(d)). Coefficients are stored lowest degree first with
    trailing zeros stripped, so the zero polynomial has no coefficients and equality is coefficient equality.
    """
    coeffs: Tuple[QuadElem, ...]
    d: int

    def __post_init__(self):
        coeffs = [c if isinstance(c, QuadElem) else QuadElem.rational(c, self.d) for c in self.coeffs]
        for c in coeffs:
            if c.d != self.d:
                raise ValueError(f"coefficient {c} does not lie in Q(sqrt({self.d}))")
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def of(cls, coeffs: Sequence[Union[QuadElem, RationalLike]], d: int) -> 'QuadPoly':
        return cls(tuple(coeffs), d)

    @classmethod
    def constant(cls, c: Union[QuadElem, RationalLike], d: int) -> 'QuadPoly':
        return cls((c,), d)

    @classmethod
    def monomial(cls, degree: int, d: int, coefficient: Union[QuadElem, RationalLike] = 1) -> 'QuadPoly':
        return cls(tuple([0] * degree + [coefficient]), d)

    @classmethod
    def linear(cls, root: QuadElem) -> 'QuadPoly':
        """u - root"""
        return cls((-root, 1), root.d)

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> QuadElem:
        return self.coeffs[-1]

    def coefficient(self, i: int) -> QuadElem:
        return self.coeffs[i] if i < len(self.coeffs) else QuadElem.rational(0, self.d)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.leading() == QuadElem.rational(1, self.d)

    def monic(self) -> 'QuadPoly':
        lc = self.leading()
        return QuadPoly(tuple(c / lc for c in self.coeffs), self.d)

    def _coerce(self, other) -> 'QuadPoly':
        if isinstance(other, QuadPoly):
            if other.d != self.d:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, (int, Fraction, QuadElem)):
            return QuadPoly.constant(other, self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return QuadPoly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)), self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadPoly(tuple(-c for c in self.coeffs), self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return QuadPoly((), self.d)
        product = [QuadElem.rational(0, self.d)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                product[i + j] = product[i + j] + x * y
        return QuadPoly(tuple(product), self.d)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        result = QuadPoly.constant(1, self.d)
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other: 'QuadPoly') -> Tuple['QuadPoly', 'QuadPoly']:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [QuadElem.rational(0, self.d)] * max(len(remainder) - other.degree, 1)
        lc = other.leading()
        while len(remainder) > other.degree and any(remainder):
            shift = len(remainder) - 1 - other.degree
            factor = remainder[-1] / lc
            quotient[shift] = factor
            for i, c in enumerate(other.coeffs):
                remainder[shift + i] = remainder[shift + i] - factor * c
            remainder.pop()
        return QuadPoly(tuple(quotient), self.d), QuadPoly(tuple(remainder), self.d)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __call__(self, x: Union[QuadElem, RationalLike]) -> QuadElem:
        result = QuadElem.rational(0, self.d)
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def conj(self) -> 'QuadPoly':
        """sigma applied to every coefficient"""
        return QuadPoly(tuple(c.conj() for c in self.coeffs), self.d)

    def constant_term(self) -> QuadElem:
        return self.coefficient(0)

    def sort_key(self):
        return len(self.coeffs), tuple(c.sort_key() for c in self.coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            power = "" if i == 0 else (VARIABLE if i == 1 else f"{VARIABLE}^{i}")
            if c.is_rational():
                sign = "-" if c.a < 0 else "+"
                magnitude = abs(c.a)
                body = power if (magnitude == 1 and power) else (f"{magnitude}*{power}" if power else str(magnitude))
            else:
                sign = "+"
                body = f"({c.a}+{c.b}*sqrt({self.d}))" if c.b > 0 else f"({c.a}{c.b}*sqrt({self.d}))"
                body = f"{body}*{power}" if power else body
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_gcd(f: QuadPoly, g: QuadPoly) -> QuadPoly:
    while not g.is_zero():
        f, g = g, f % g
    return f.monic() if not f.is_zero() else f


def poly_xgcd(f: QuadPoly, g: QuadPoly) -> Tuple[QuadPoly, QuadPoly, QuadPoly]:
    """
    :return: (h, s, t) with s*f + t*g = h and h the monic gcd of f and g
    """
    zero, one = QuadPoly((), f.d), QuadPoly.constant(1, f.d)
    r0, r1, s0, s1, t0, t1 = f, g, one, zero, zero, one
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.leading()
    return r0.monic(), s0 * lc.inverse(), t0 * lc.inverse()


def inverse_mod(f: QuadPoly, modulus: QuadPoly) -> QuadPoly:
    h, s, _ = poly_xgcd(f % modulus, modulus)
    if h.degree != 0:
        raise ZeroDivisionError(f"{f} is not invertible modulo {modulus}")
    return s % modulus


def resultant(f: QuadPoly, g: QuadPoly) -> QuadElem:
    """
    Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f, computed by the Euclidean recursion
    Res(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * Res(g, r) with r = f mod g.
    With this orientation Res(u - a, u - b) = a - b and, for monic p, Res(p, f) is the norm of f(a_p) from
    l(a_p) down to l.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("the resultant of a zero polynomial is undefined")
    one = QuadElem.rational(1, f.d)
    sign_and_scale = one
    while True:
        m, n = f.degree, g.degree
        if n == 0:
            return sign_and_scale * g.leading() ** m
        if m == 0:
            return sign_and_scale * f.leading() ** n
        r = f % g
        if r.is_zero():
            return QuadElem.rational(0, f.d)
        if (m * n) % 2 == 1:
            sign_and_scale = -sign_and_scale
        sign_and_scale = sign_and_scale * g.leading() ** (m - r.degree)
        f, g = g, r


def parse_quad_poly(text: str, d: int) -> QuadPoly:
    """
    Parse a polynomial in u over Q(sqrt(d)), e.g. "u^2 - (1+1*sqrt(2))*u + 3". Each term is an optional
    coefficient (a rational, r*sqrt(d), or a parenthesized quadratic element) times an optional power u^k.
    """
    scanner = Scanner(text)
    value = scan_quad_poly(scanner, d)
    scanner.expect_end()
    return value


def scan_quad_poly(scanner: Scanner, d: int, stop: str = "") -> QuadPoly:
    result = QuadPoly((), d)
    first = True
    while not scanner.at_end() and not (stop and scanner.peek() == stop):
        sign = 1
        if scanner.accept("-"):
            sign = -1
        elif not scanner.accept("+") and not first:
            scanner.fail("expected '+' or '-' between terms")
        coefficient = QuadElem.rational(1, d)
        has_coefficient = False
        if scanner.peek() == "(":
            coefficient = scan_quad_elem(scanner, d)
            has_coefficient = True
        elif scanner.peek().isdigit() or scanner.peek() == "s":
            value, term_d = scan_quad_atom(scanner)
            if term_d is not None and term_d != d:
                scanner.fail(f"expected sqrt({d})")
            coefficient = QuadElem(0, value, d) if term_d is not None else QuadElem.rational(value, d)
            has_coefficient = True
        power = 0
        if has_coefficient and scanner.accept("*"):
            if scanner.peek() != VARIABLE:
                scanner.fail(f"expected '{VARIABLE}'")
        if scanner.accept(VARIABLE):
            power = 1
            if scanner.accept("^"):
                power = scanner.integer()
                if power < 0:
                    scanner.fail("negative exponent")
        elif not has_coefficient:
            scanner.fail("expected a term")
        result = result + QuadPoly.monomial(power, d, coefficient * sign)
        first = False
    if first:
        raise ParseException("empty polynomial", scanner.text, scanner.pos)
    return result
