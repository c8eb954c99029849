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
from fractions import Fraction
from typing import List, Optional, Tuple

from sympy import symbols
from sympy.solvers.diophantine.diophantine import diop_ternary_quadratic_normal

from genus_zero_brauer.definitions import DEFAULT_CONIC_SEARCH_BOUND, DEFAULT_CONIC_SWEEP_BOUND
from genus_zero_brauer.exact_algebra.quadratic_field import QuadElem
from genus_zero_brauer.exact_algebra.rationals import RationalLike, rational_sqrt, squarefree_class, to_rational
from genus_zero_brauer.exact_algebra.symbols import PlaceQ, hilbert_symbols

Point = Tuple[Fraction, Fraction]

# directions tried for the second intersection through a point at infinity of the projective conic
_SECANT_DIRECTIONS = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1), (1, -1, 1), (2, 1, 1), (1, 2, 1)]


@dataclass
class QuaternionSplitting:
    splits: bool
    witnesses: List[PlaceQ]
    symbols: List[Tuple[PlaceQ, int]]


def quaternion_splits(c: RationalLike, d: RationalLike) -> QuaternionSplitting:
    """
    (c, d) splits over Q iff every local Hilbert symbol is +1; the witnesses are the places with symbol -1, an
    even number by the product formula.
    """
    c, d = to_rational(c), to_rational(d)
    if c == 0 or d == 0:
        raise ValueError("the quaternion algebra (c, d) needs nonzero c and d")
    local_symbols = hilbert_symbols(c, d)
    witnesses = [v for v, symbol in local_symbols if symbol == -1]
    assert len(witnesses) % 2 == 0, f"odd number of ramified places for ({c}, {d})"
    return QuaternionSplitting(splits=not witnesses, witnesses=witnesses, symbols=local_symbols)


def _height(x: Fraction) -> int:
    return max(abs(x.numerator), x.denominator)


def _on_conic(c: Fraction, d: Fraction, point: Point) -> bool:
    x, y = point
    return c * x * x + d * y * y == 1


def _sweep(c: Fraction, d: Fraction, bound: int) -> Optional[Point]:
    for z in range(1, bound + 1):
        for x in range(bound + 1):
            for y in range(bound + 1):
                if c * x * x + d * y * y == z * z:
                    return Fraction(x, z), Fraction(y, z)
    return None


def _square_factor(value: Fraction) -> Tuple[int, Fraction]:
    """value = squarefree * s^2 with s a positive rational"""
    squarefree = squarefree_class(value)
    s = rational_sqrt(value / squarefree)
    assert s is not None
    return squarefree, s


def _legendre_point(c: Fraction, d: Fraction) -> Optional[Point]:
    c_sf, c_scale = _square_factor(c)
    d_sf, d_scale = _square_factor(d)
    x, y, z = symbols("x y z", integer=True)
    solution = diop_ternary_quadratic_normal(c_sf * x ** 2 + d_sf * y ** 2 - z ** 2)
    if solution is None or solution[0] is None:
        return None
    big_x, big_y, big_z = (int(v) for v in solution)
    if big_z == 0:
        big_x, big_y, big_z = _second_intersection((big_x, big_y, big_z), c_sf, d_sf)
    return Fraction(big_x, big_z) / c_scale, Fraction(big_y, big_z) / d_scale


def _second_intersection(point: Tuple[int, int, int], c: int, d: int) -> Tuple[int, int, int]:
    """the other intersection of the conic c*X^2 + d*Y^2 - Z^2 = 0 with a line through *point*"""
    def form(u, v):
        return c * u[0] * v[0] + d * u[1] * v[1] - u[2] * v[2]

    for direction in _SECANT_DIRECTIONS:
        q_direction, b = form(direction, direction), form(point, direction)
        if q_direction == 0 or b == 0:
            continue
        other = tuple(q_direction * p - 2 * b * v for p, v in zip(point, direction))
        if other[2] != 0:
            return other
    raise ArithmeticError(f"no secant through {point} leaves the line at infinity")


def conic_point_search(c: RationalLike, d: RationalLike, height_bound: int = DEFAULT_CONIC_SEARCH_BOUND,
                       sweep_bound: int = DEFAULT_CONIC_SWEEP_BOUND) -> Optional[Point]:
    """
    A rational point on 1 = c*x^2 + d*y^2 whose numerators and denominators are at most *height_bound*, or None.
    Small points are found by an exhaustive sweep of x = X/Z, y = Y/Z with 0 <= X, Y and 1 <= Z up to the sweep
    bound; otherwise the ternary Legendre solver decides solubility on its own and supplies a point, kept only if it
    fits the height bound. The local Hilbert symbols are not consulted.
    """
    if height_bound < 1:
        raise ValueError("the height bound must be at least 1")
    c, d = to_rational(c), to_rational(d)
    point = _sweep(c, d, min(height_bound, sweep_bound))
    if point is None:
        point = _legendre_point(c, d)
    if point is None:
        return None
    point = (abs(point[0]), abs(point[1]))
    assert _on_conic(c, d, point), f"{point} is not on 1 = {c}x^2 + {d}y^2"
    if max(_height(point[0]), _height(point[1])) > height_bound:
        logging.warning(f"the conic 1 = {c}x^2 + {d}y^2 has the point {point}, beyond the height bound "
                        f"{height_bound}")
        return None
    return point


def conic_parametrize(u0: QuadElem, c: RationalLike) -> Tuple[QuadElem, QuadElem]:
    """
    x = 2/(u + c/u), y = (2u/(u + c/u) - 1)/sqrt(d): a point of 1 = c*x^2 + d*y^2 over l = Q(sqrt(d)) for every
    parameter u with u != 0 and u^2 != -c, which makes El = l(u).
    """
    c = to_rational(c)
    if not u0:
        raise ValueError("u = 0 is an excluded parameter")
    denominator = u0 + c / u0
    if not denominator:
        raise ValueError(f"u = {u0} has u^2 = -c, an excluded parameter")
    x = 2 / denominator
    y = (2 * u0 / denominator - 1) / QuadElem.sqrt_d(u0.d)
    assert c * x * x + u0.d * y * y == QuadElem.rational(1, u0.d)
    return x, y


def conic_uncoordinate(x: QuadElem, y: QuadElem) -> QuadElem:
    """u = (1 + sqrt(d)*y)/x, inverse to conic_parametrize"""
    if not x:
        raise ValueError("x = 0 has no parameter")
    return (1 + QuadElem.sqrt_d(x.d) * y) / x
