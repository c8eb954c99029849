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

"""
Arithmetic in the residue field l(a_p) = l[u]/(p) of a monic irreducible p, with elements stored as polynomials
of degree below deg p.
"""
from fractions import Fraction
from typing import Optional

from sympy import symbols

from genus_zero_brauer.exact_algebra.polynomials import QuadPoly, inverse_mod, resultant
from genus_zero_brauer.exact_algebra.quadratic_field import QuadElem, quad_sqrt
from genus_zero_brauer.kummer_chars.irreducible import IrredPoly, to_sympy_poly

# shifts f -> f*(u+k)^2 tried before the square test in degree 3 and 4 gives up
MAX_GENERATOR_SHIFTS = 12

_Z, _Y = symbols("z y")


def residue(f: QuadPoly, p: IrredPoly) -> QuadPoly:
    return f % p.poly


def residue_mul(f: QuadPoly, g: QuadPoly, p: IrredPoly) -> QuadPoly:
    return (f * g) % p.poly


def residue_inverse(f: QuadPoly, p: IrredPoly) -> QuadPoly:
    return inverse_mod(f, p.poly)


def residue_norm(f: QuadPoly, p: IrredPoly) -> QuadElem:
    """N_{l(a_p)/l}(f(a_p)) = Res(p, f) for monic p"""
    return resultant(p.poly, f)


def _quadratic_residue_sqrt(f: QuadPoly, p: IrredPoly) -> Optional[QuadPoly]:
    # p = u^2 + b*u + c, sqrt(D) = 2u + b with D = b^2 - 4c; f = x0 + x1*sqrt(D)
    d = p.d
    b, c = p.poly.coefficient(1), p.poly.coefficient(0)
    discriminant = b * b - 4 * c
    root_d = QuadPoly.of([b, 2], d)
    f0, f1 = f.coefficient(0), f.coefficient(1)
    x0, x1 = f0 - f1 * b / 2, f1 / 2
    candidates = []
    if not x1:
        y0 = quad_sqrt(x0)
        if y0 is not None:
            candidates.append(QuadPoly.constant(y0, d))
        y1 = quad_sqrt(x0 / discriminant)
        if y1 is not None:
            candidates.append(root_d * y1)
    else:
        n = quad_sqrt(x0 * x0 - discriminant * x1 * x1)
        if n is None:
            return None
        for s in (n, -n):
            t = (x0 + s) / 2
            y0 = quad_sqrt(t) if t else None
            if y0 is not None:
                candidates.append(QuadPoly.constant(y0, d) + root_d * (x1 / (2 * y0)))
    for y in candidates:
        y = y % p.poly
        if residue_mul(y, y, p) == f:
            return y
    return None


def residue_sqrt(f: QuadPoly, p: IrredPoly) -> Optional[QuadPoly]:
    """a square root of f in l(a_p) for deg p <= 2, or None"""
    f = residue(f, p)
    if f.is_zero():
        return f
    if p.degree == 1:
        root = quad_sqrt(f.constant_term())
        return None if root is None else QuadPoly.constant(root, p.d)
    if p.degree == 2:
        return _quadratic_residue_sqrt(f, p)
    raise ValueError(f"explicit square roots need deg p <= 2, not {p.degree}")


def _char_poly(x: QuadPoly, p: IrredPoly) -> QuadPoly:
    """
    Res_u(p, Z - x), monic of degree deg p in Z, interpolated from its values at Z = 0, ..., deg p.
    """
    nodes = range(p.degree + 1)
    char_poly = QuadPoly((), p.d)
    for k in nodes:
        shifted = k - x
        term = QuadPoly.constant(resultant(p.poly, shifted) if not shifted.is_zero() else 0, p.d)
        for j in nodes:
            if j != k:
                term = term * QuadPoly.of([-j, 1], p.d) * Fraction(1, k - j)
        char_poly = char_poly + term
    return char_poly


def _is_square_by_resultant(f: QuadPoly, p: IrredPoly) -> bool:
    """
    For x generating l(a_p) over l, x is a square in l(a_p) iff Q(Y^2) is reducible over l, Q the characteristic
    polynomial Res_u(p, Z - x) of x. Multiplying f by squares (u+k)^2 reaches a generator without changing its
    square class.
    """
    for k in range(MAX_GENERATOR_SHIFTS):
        shift = QuadPoly.of([k, 1], p.d)
        x = residue_mul(f, shift * shift, p)
        char_poly = _char_poly(x, p)
        sympy_char_poly = to_sympy_poly(char_poly, _Z)
        if sympy_char_poly.gcd(sympy_char_poly.diff(_Z)).degree() == 0:
            even = [c for coefficient in char_poly.coeffs for c in (coefficient, 0)]
            _, factors = to_sympy_poly(QuadPoly.of(even, p.d), _Y).factor_list()
            return len(factors) > 1 or factors[0][1] > 1
    raise ArithmeticError(f"no generator of the residue field of {p} found among the shifts of {f}")


def is_residue_square(f: QuadPoly, p: IrredPoly) -> bool:
    f = residue(f, p)
    if f.is_zero():
        raise ValueError("zero has no square class")
    if p.degree <= 2:
        return residue_sqrt(f, p) is not None
    return _is_square_by_resultant(f, p)


def reciprocal_image(f: QuadPoly, c, target: IrredPoly) -> QuadPoly:
    """sigma(f)(c/u) reduced mod *target*; u is a unit there since target(0) != 0"""
    u_inverse = residue_inverse(QuadPoly.monomial(1, target.d), target)
    point = (u_inverse * c) % target.poly
    image = QuadPoly((), target.d)
    for coefficient in reversed(f.conj().coeffs):
        image = (image * point + coefficient) % target.poly
    return image
