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
import random

from fractions import Fraction
from typing import Dict, List

import numpy as np
from sympy import primerange

from genus_zero_brauer.brauer_local.brauer_elem import BrauerElem, HALF
from genus_zero_brauer.brauer_local.places import PlaceL, SplittingKind, place_of, places_over
from genus_zero_brauer.exact_algebra.dyadic import Dyadic
from genus_zero_brauer.exact_algebra.polynomials import QuadPoly
from genus_zero_brauer.exact_algebra.quadratic_field import QuadElem, is_square_quad
from genus_zero_brauer.exact_algebra.symbols import PlaceQ, REAL_PLACE
from genus_zero_brauer.kummer_chars.characters import Char2L, Char2P
from genus_zero_brauer.kummer_chars.irreducible import IrredPoly, is_irreducible
from genus_zero_brauer.kummer_chars.residue_fields import residue
from genus_zero_brauer.kummer_chars.s_star import BrLUElem

SMALL_PRIMES = list(primerange(2, 30))
MAX_ATTEMPTS = 200


def finite_places(d: int) -> List[PlaceL]:
    return [p for base in SMALL_PRIMES for p in places_over(PlaceQ(base), d)]


def with_zero_sum(d: int, invariants: Dict[PlaceL, Dyadic]) -> BrauerElem:
    """adjust the invariant at the first finite place so that the invariants sum to zero"""
    total = sum(invariants.values(), Dyadic())
    anchor = finite_places(d)[0]
    invariants[anchor] = invariants.get(anchor, Dyadic()) - total
    return BrauerElem.of(d, invariants)


def random_brauer_elem(rng: random.Random, d: int = 2, size: int = 4, divisible: bool = True) -> BrauerElem:
    places = rng.sample(finite_places(d), size)
    invariants = {p: Dyadic.of(rng.randrange(64), 64) for p in places}
    if not divisible and d > 0:
        invariants[place_of(REAL_PLACE, d, 1)] = HALF
    return with_zero_sum(d, invariants)


def random_two_torsion_brauer_elem(rng: random.Random, d: int = 2, size: int = 3) -> BrauerElem:
    return with_zero_sum(d, {p: HALF for p in rng.sample(finite_places(d)[:12], size)})


def random_involution(rng: random.Random, fixed: int, negated: int, pairs: int) -> List[List[int]]:
    """
    B D B^-1 for D block diagonal with the given numbers of 1, -1 and swap blocks and B a random product of
    elementary integer matrices.
    """
    r = fixed + negated + 2 * pairs
    d = np.zeros((r, r), dtype=object)
    for i in range(fixed):
        d[i, i] = 1
    for i in range(fixed, fixed + negated):
        d[i, i] = -1
    for p in range(pairs):
        i = fixed + negated + 2 * p
        d[i, i + 1] = d[i + 1, i] = 1
    b = np.identity(r, dtype=object)
    b_inverse = np.identity(r, dtype=object)
    for _ in range(3 * r):
        if r < 2:
            break
        i, j = rng.sample(range(r), 2)
        factor = rng.randint(-3, 3)
        elementary = np.identity(r, dtype=object)
        elementary[i, j] = factor
        inverse = np.identity(r, dtype=object)
        inverse[i, j] = -factor
        b = b.dot(elementary)
        b_inverse = inverse.dot(b_inverse)
    return [[int(x) for x in row] for row in b.dot(d).dot(b_inverse)]


def random_rational(rng: random.Random, bound: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound * 3, bound * 3), rng.randint(1, 3))


def random_field_elem(rng: random.Random, d: int = 2) -> QuadElem:
    return QuadElem(random_rational(rng), random_rational(rng), d)


def random_irred_poly(rng: random.Random, d: int = 2, degree: int = 1) -> IrredPoly:
    for _ in range(MAX_ATTEMPTS):
        poly = QuadPoly.of([random_field_elem(rng, d) for _ in range(degree)] + [1], d)
        if poly.constant_term() and is_irreducible(poly):
            return IrredPoly(poly)
    raise ArithmeticError(f"no irreducible polynomial of degree {degree} found over Q(sqrt({d}))")


def random_self_tilde_poly(rng: random.Random, c: int, d: int = 2) -> IrredPoly:
    """u^2 + r*u + c with r rational, or u^2 + s*sqrt(d)*u - c: both are fixed by p -> p~"""
    for _ in range(MAX_ATTEMPTS):
        scale = random_rational(rng)
        if rng.random() < 0.5:
            poly = QuadPoly.of([c, scale, 1], d)
        else:
            poly = QuadPoly.of([-c, QuadElem(0, scale, d), 1], d)
        if is_irreducible(poly):
            return IrredPoly(poly)
    raise ArithmeticError(f"no irreducible self-tilde polynomial found for c = {c}")


def random_residue(rng: random.Random, p: IrredPoly) -> QuadPoly:
    for _ in range(MAX_ATTEMPTS):
        f = QuadPoly.of([random_field_elem(rng, p.d) for _ in range(p.degree)], p.d)
        if not residue(f, p).is_zero():
            return f
    raise ArithmeticError(f"no nonzero residue found modulo {p}")


def random_char2p(rng: random.Random, d: int = 2) -> Char2P:
    p = random_irred_poly(rng, d, rng.choice((1, 2)))
    return Char2P(p, random_residue(rng, p))


def random_brlu_elem(rng: random.Random, d: int = 2) -> BrLUElem:
    e = random_field_elem(rng, d)
    chi_u = Char2L(e) if e and not is_square_quad(e) and rng.random() < 0.5 else None
    chis = [random_char2p(rng, d) for _ in range(rng.randint(0, 2))]
    return BrLUElem.of(random_two_torsion_brauer_elem(rng, d, rng.randint(0, 3)), chi_u, chis)


def random_negated_elem(rng: random.Random, d: int = 2, size: int = 3) -> BrauerElem:
    """gamma' with sigma(gamma') = -gamma', supported on split pairs"""
    first_places = [p for p in finite_places(d) if p.kind == SplittingKind.SPLIT and p.index == 0]
    invariants = {}
    for p in rng.sample(first_places, min(size, len(first_places))):
        value = Dyadic.of(rng.randrange(64), 64)
        invariants[p] = value
        invariants[p.conjugate()] = -value
    return BrauerElem.of(d, invariants)
