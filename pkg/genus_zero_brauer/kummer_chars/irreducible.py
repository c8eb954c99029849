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
from functools import lru_cache

from sympy import QQ, Poly, Rational, sqrt, symbols

from genus_zero_brauer.exact_algebra.parsing import ParseException
from genus_zero_brauer.exact_algebra.polynomials import QuadPoly, parse_quad_poly
from genus_zero_brauer.exact_algebra.quadratic_field import QuadElem, quad_sqrt

MAX_IRREDUCIBILITY_DEGREE = 4
VARIABLE_SYMBOL = symbols("u")


class UnsupportedDegreeException(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(message)


def quad_to_sympy(x: QuadElem):
    return Rational(x.a.numerator, x.a.denominator) + Rational(x.b.numerator, x.b.denominator) * sqrt(x.d)


def field_domain(d: int):
    return QQ.algebraic_field(sqrt(d))


def to_sympy_poly(f: QuadPoly, symbol) -> Poly:
    expression = sum((quad_to_sympy(c) * symbol ** i for i, c in enumerate(f.coeffs)), Rational(0))
    return Poly(expression, symbol, domain=field_domain(f.d))


@lru_cache(maxsize=4096)
def is_irreducible(f: QuadPoly) -> bool:
    """
    Irreducibility over Q(sqrt(d)) up to degree 4: a quadratic is irreducible iff its discriminant is not a square
    in the field; cubics and quartics are factored over the field with sympy.
    """
    if f.is_zero() or f.degree == 0:
        return False
    if f.degree == 1:
        return True
    if f.degree == 2:
        g = f.monic()
        return quad_sqrt(g.coefficient(1) * g.coefficient(1) - 4 * g.coefficient(0)) is None
    if f.degree > MAX_IRREDUCIBILITY_DEGREE:
        raise UnsupportedDegreeException(f"irreducibility of {f} (degree {f.degree}) is not supported beyond "
                                         f"degree {MAX_IRREDUCIBILITY_DEGREE}")
    _, factors = to_sympy_poly(f, VARIABLE_SYMBOL).factor_list()
    return len(factors) == 1 and factors[0][1] == 1


@dataclass(frozen=True)
class IrredPoly:
    """
    A monic irreducible polynomial p of l[u] other than u. Its root a_p generates the residue field l(a_p) of the
    place p of l(u).
    """
    poly: QuadPoly

    def __post_init__(self):
        if self.poly.is_zero() or not self.poly.is_monic():
            raise ValueError(f"{self.poly} is not monic")
        if not self.poly.constant_term():
            raise ValueError(f"{self.poly} vanishes at u = 0")
        if not is_irreducible(self.poly):
            raise ValueError(f"{self.poly} is reducible over Q(sqrt({self.poly.d}))")

    @property
    def d(self) -> int:
        return self.poly.d

    @property
    def degree(self) -> int:
        return self.poly.degree

    def sort_key(self):
        return self.poly.sort_key()

    def __str__(self):
        return str(self.poly)


def parse_irred_poly(text: str, d: int) -> IrredPoly:
    poly = parse_quad_poly(text, d)
    try:
        return IrredPoly(poly)
    except (ValueError, UnsupportedDegreeException) as e:
        raise ParseException(str(e), text, None) from e
