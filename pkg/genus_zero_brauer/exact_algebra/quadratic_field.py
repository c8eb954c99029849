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
from typing import Optional, Tuple, Union

from genus_zero_brauer.exact_algebra.parsing import Scanner
from genus_zero_brauer.exact_algebra.rationals import RationalLike, is_squarefree, rational_sqrt, \
    scan_rational, to_rational


@dataclass(frozen=True)
class QuadElem:
    """
    The element a + b*sqrt(d) of the quadratic field Q(sqrt(d)), d a squarefree integer other than 0 and 1.
    Two elements interoperate only when they share d; plain ints and Fractions are promoted.
    """
    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", to_rational(self.a))
        object.__setattr__(self, "b", to_rational(self.b))
        if self.d == 1 or not is_squarefree(self.d):
            raise ValueError(f"d={self.d} is not a squarefree integer other than 0 and 1")

    @classmethod
    def rational(cls, x: RationalLike, d: int) -> 'QuadElem':
        return cls(to_rational(x), Fraction(0), d)

    @classmethod
    def sqrt_d(cls, d: int) -> 'QuadElem':
        return cls(Fraction(0), Fraction(1), d)

    def _coerce(self, other) -> 'QuadElem':
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise ValueError(f"cannot combine elements of Q(sqrt({self.d})) and Q(sqrt({other.d}))")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem.rational(other, self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.a - other.a, self.b - other.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.a * other.a + self.d * self.b * other.b, self.a * other.b + self.b * other.a, self.d)

    __rmul__ = __mul__

    def inverse(self) -> 'QuadElem':
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError("division by zero in a quadratic field")
        return QuadElem(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = QuadElem.rational(1, self.d), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def is_rational(self) -> bool:
        return self.b == 0

    def conj(self) -> 'QuadElem':
        return QuadElem(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def sort_key(self):
        return self.a, self.b

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sqrt_part = f"{self.b}*sqrt({self.d})"
        if self.a == 0:
            return sqrt_part
        return f"({self.a}+{sqrt_part})" if self.b > 0 else f"({self.a}{sqrt_part})"


def quad_conj(x: QuadElem) -> QuadElem:
    return x.conj()


def quad_norm(x: QuadElem) -> Fraction:
    return x.norm()


def quad_sqrt(x: QuadElem) -> Optional[QuadElem]:
    """
    Find y in Q(sqrt(d)) with y*y == x, or return None.
    If y = s + t*sqrt(d) then N(x) = n^2 with n = s^2 - d*t^2, so s^2 is one of (a+n)/2, (a-n)/2 and the
    cross term fixes t = b/(2s). Rational x has the extra candidate y = t*sqrt(d) with t^2 = a/d.
    """
    if not x:
        return QuadElem.rational(0, x.d)
    if x.b == 0:
        root = rational_sqrt(x.a)
        if root is not None:
            return QuadElem.rational(root, x.d)
        root = rational_sqrt(x.a / x.d)
        if root is not None:
            return QuadElem(0, root, x.d)
        return None
    n = rational_sqrt(x.norm())
    if n is None:
        return None
    for s_squared in ((x.a + n) / 2, (x.a - n) / 2):
        s = rational_sqrt(s_squared)
        if s is None or s == 0:
            continue
        candidate = QuadElem(s, x.b / (2 * s), x.d)
        if candidate * candidate == x:
            return candidate
    return None


def is_square_quad(x: QuadElem) -> bool:
    if not x:
        raise ValueError("zero has no square class")
    return quad_sqrt(x) is not None


def same_square_class(x: QuadElem, y: QuadElem) -> bool:
    return is_square_quad(x / y)


def parse_quad_elem(text: str, d: Union[int, None] = None) -> QuadElem:
    """
    Parse "a+b*sqrt(d)", "a", "b*sqrt(d)" or "sqrt(d)"; a and b are rationals "p/q". When *d* is given
    the text must either name the same d or be rational.
    """
    scanner = Scanner(text)
    value = scan_quad_elem(scanner, d)
    scanner.expect_end()
    return value


def scan_quad_atom(scanner: Scanner) -> Tuple[Fraction, Optional[int]]:
    """
    Scan one unsigned term "r", "r*sqrt(d)" or "sqrt(d)".
    :return: the coefficient and the d of the square root, or None for a rational term
    """
    if scanner.peek() == "s":
        coefficient = Fraction(1)
    else:
        coefficient = scan_rational(scanner)
        before_star = scanner.pos
        if not scanner.accept("*"):
            return coefficient, None
        if scanner.peek() != "s":
            scanner.pos = before_star
            return coefficient, None
    scanner.expect("sqrt(")
    term_d = scanner.integer()
    scanner.expect(")")
    return coefficient, term_d


def scan_quad_elem(scanner: Scanner, d: Union[int, None] = None) -> QuadElem:
    if scanner.accept("("):
        value = scan_quad_elem(scanner, d)
        scanner.expect(")")
        return value
    a, b = Fraction(0), Fraction(0)
    parsed_d = None
    seen_term = False
    while True:
        sign = 1
        before_sign = scanner.pos
        if scanner.accept("-"):
            sign = -1
        elif not scanner.accept("+") and seen_term:
            break
        if seen_term and not (scanner.peek().isdigit() or scanner.peek() == "s"):
            # the sign belongs to the enclosing expression
            scanner.pos = before_sign
            break
        coefficient, term_d = scan_quad_atom(scanner)
        if term_d is None:
            a += sign * coefficient
        else:
            if parsed_d is not None and term_d != parsed_d:
                scanner.fail("mixed square roots")
            parsed_d = term_d
            b += sign * coefficient
        seen_term = True
    if parsed_d is not None and d is not None and parsed_d != d:
        scanner.fail(f"expected sqrt({d})")
    field_d = d if d is not None else parsed_d
    if field_d is None:
        scanner.fail("cannot determine the field: no sqrt(d) term and no field given")
    return QuadElem(a, b, field_d)
