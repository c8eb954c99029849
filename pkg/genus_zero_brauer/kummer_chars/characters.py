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

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple

from genus_zero_brauer.exact_algebra.parsing import ParseException, Scanner
from genus_zero_brauer.exact_algebra.polynomials import QuadPoly, scan_quad_poly
from genus_zero_brauer.exact_algebra.quadratic_field import QuadElem, is_square_quad, same_square_class, \
    scan_quad_elem
from genus_zero_brauer.exact_algebra.rationals import RationalLike, rational_sqrt
from genus_zero_brauer.kummer_chars.irreducible import IrredPoly, UnsupportedDegreeException
from genus_zero_brauer.kummer_chars.rational_functions import tilde_poly
from genus_zero_brauer.kummer_chars.residue_fields import is_residue_square, reciprocal_image, residue, \
    residue_mul, residue_norm

# the largest degree for which sigma~ on a self-tilde place is supported
MAX_SELF_TILDE_DEGREE = 2


@dataclass(frozen=True, eq=False)
class Char2L:
    """
    The order-2 character of l cutting out l(sqrt(e)). Characters are equal when their representatives share a
    square class.
    """
    e: QuadElem

    def __post_init__(self):
        if not self.e:
            raise ValueError("a Kummer representative is nonzero")
        if is_square_quad(self.e):
            raise ValueError(f"{self.e} is a square and represents the trivial character")

    @property
    def d(self) -> int:
        return self.e.d

    def __eq__(self, other):
        if not isinstance(other, Char2L):
            return NotImplemented
        return self.d == other.d and same_square_class(self.e, other.e)

    def __str__(self):
        return f"chi[{self.e}]"


def char_of(e: QuadElem) -> Optional[Char2L]:
    """the character of e, None when e is a square"""
    return None if is_square_quad(e) else Char2L(e)


def char_mul(x: Optional[Char2L], y: Optional[Char2L]) -> Optional[Char2L]:
    if x is None or y is None:
        return y if x is None else x
    return char_of(x.e * y.e)


def same_char(x: Optional[Char2L], y: Optional[Char2L]) -> bool:
    return char_mul(x, y) is None


@dataclass(frozen=True, eq=False)
class Char2P:
    """
    An order-2 character of the residue field l(a_p), represented by f with l(a_p)(sqrt(f(a_p))). The trivial
    character (f a square mod p) is allowed here; BrLUElem drops it.
    """
    p: IrredPoly
    f: QuadPoly

    def __post_init__(self):
        if self.f.d != self.p.d:
            raise ValueError(f"{self.f} and {self.p} lie over different fields")
        reduced = residue(self.f, self.p)
        if reduced.is_zero():
            raise ValueError(f"{self.f} vanishes modulo {self.p}")
        object.__setattr__(self, "f", reduced)

    @classmethod
    def trivial(cls, p: IrredPoly) -> 'Char2P':
        return cls(p, QuadPoly.constant(1, p.d))

    @property
    def d(self) -> int:
        return self.p.d

    def is_trivial(self) -> bool:
        return is_residue_square(self.f, self.p)

    def __mul__(self, other: 'Char2P') -> 'Char2P':
        if other.p != self.p:
            raise ValueError(f"characters at {self.p} and {other.p} cannot be multiplied")
        return Char2P(self.p, residue_mul(self.f, other.f, self.p))

    def __eq__(self, other):
        if not isinstance(other, Char2P):
            return NotImplemented
        return self.p == other.p and (self * other).is_trivial()

    def __str__(self):
        return f"chi[{self.p}; {self.f}]"


def sigma_char(chi: Optional[Char2L]) -> Optional[Char2L]:
    """e -> sigma(e); at exponent 2 this is also s*_uu since -chi = chi"""
    return None if chi is None else Char2L(chi.e.conj())


def cor_char(chi: Char2P) -> Optional[Char2L]:
    """corestriction from l(a_p) to l: the class of e = N(f) = Res(p, f), None when e is a square"""
    return char_of(residue_norm(chi.f, chi.p))


def s_pu_star(chi: Char2P) -> Optional[Char2L]:
    return sigma_char(cor_char(chi))


def s_ptilde_star(chi: Char2P, c: RationalLike) -> Char2P:
    """
    The component l(a_p) -> l(a_p~) of s*: the residue field isomorphism f(a_p) -> sigma(f)(c/a_p~). When
    p = p~ this is sigma~ with sigma~(a_p) = c/a_p, the inverse of u taken from the extended Euclidean algorithm.
    """
    target = tilde_poly(chi.p, c)
    return Char2P(target, reciprocal_image(chi.f, c, target))


def s_pp_star(chi: Char2P, c: RationalLike) -> Char2P:
    if chi.p.degree > MAX_SELF_TILDE_DEGREE:
        raise UnsupportedDegreeException(f"sigma~ is supported up to degree {MAX_SELF_TILDE_DEGREE}, "
                                         f"not {chi.p.degree}")
    if tilde_poly(chi.p, c) != chi.p:
        raise ValueError(f"{chi.p} is not fixed by p -> p~ for c = {c}")
    return s_ptilde_star(chi, c)


def cor_identity_check(chi: Char2P, c: RationalLike) -> bool:
    """Cor(s*_pp~(chi)) ~ sigma(Cor(chi)) as square classes"""
    return same_char(cor_char(s_ptilde_star(chi, c)), sigma_char(cor_char(chi)))


def cor_sum(chis: Iterable[Char2P]) -> Optional[Char2L]:
    total = None
    for chi in chis:
        total = char_mul(total, cor_char(chi))
    return total


def s_star_characters(chi_u: Optional[Char2L], chis: Mapping[IrredPoly, Char2P],
                      c: RationalLike) -> Tuple[Optional[Char2L], Dict[IrredPoly, Char2P]]:
    """
    The character rows of s*: chi_u -> s*_uu(chi_u) + sum s*_pu(chi_p) and chi_p -> s*_pp~(chi_p) placed at p~.
    Trivial characters are dropped.
    """
    new_u = sigma_char(chi_u)
    new_chis: Dict[IrredPoly, Char2P] = {}
    for chi in chis.values():
        new_u = char_mul(new_u, s_pu_star(chi))
        image = s_ptilde_star(chi, c)
        new_chis[image.p] = new_chis[image.p] * image if image.p in new_chis else image
    return new_u, {p: chi for p, chi in new_chis.items() if not chi.is_trivial()}


class WClass(Enum):
    NOT_GALOIS = "NotGalois"
    CYCLIC4 = "Cyclic4"
    KLEIN_W = "KleinW"


def w_membership(e: QuadElem) -> WClass:
    """
    Classify l(sqrt(e)) over k = Q: not Galois unless sigma(e)/e is a square in l; then the Klein four-group iff
    N(e) is a rational square, and cyclic of order 4 otherwise.
    """
    if not e or is_square_quad(e):
        raise ValueError(f"{e} is not a nonsquare of Q(sqrt({e.d}))")
    if not is_square_quad(e.conj() / e):
        result = WClass.NOT_GALOIS
    elif rational_sqrt(e.norm()) is not None:
        result = WClass.KLEIN_W
    else:
        result = WClass.CYCLIC4
    logging.info(f"l(sqrt({e})) over Q: N(e) = {e.norm()}, classified {result.value}")
    return result


def rational_representative(e: QuadElem) -> Fraction:
    """
    A rational r with e/r a square in l, for e of class KleinW: with n^2 = N(e) and e = a + b*sqrt(d),
    e * 2(a + n) = (e + n)^2.
    """
    if w_membership(e) != WClass.KLEIN_W:
        raise ValueError(f"the class of {e} has no rational representative")
    n = rational_sqrt(e.norm())
    for s in (n, -n):
        r = 2 * (e.a + s)
        if r:
            assert is_square_quad(e / r), f"{e}/{r} is not a square"
            return r
    raise ArithmeticError(f"no rational representative found for {e}")


def parse_char2l(text: str, d: Optional[int] = None) -> Char2L:
    """'chi[<element>]'"""
    scanner = Scanner(text)
    scanner.expect("chi[")
    e = scan_quad_elem(scanner, d)
    scanner.expect("]")
    scanner.expect_end()
    try:
        return Char2L(e)
    except ValueError as ex:
        raise ParseException(str(ex), text, None) from ex


def parse_char2p(text: str, d: int) -> Char2P:
    """'chi[<p>; <f>]', e.g. 'chi[u^2 - 3; u]'"""
    scanner = Scanner(text)
    scanner.expect("chi[")
    p_start = scanner.pos
    p = scan_quad_poly(scanner, d, stop=";")
    scanner.expect(";")
    f = scan_quad_poly(scanner, d, stop="]")
    scanner.expect("]")
    scanner.expect_end()
    try:
        return Char2P(IrredPoly(p), f)
    except (ValueError, UnsupportedDegreeException) as ex:
        raise ParseException(str(ex), text, p_start) from ex
