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

from typing import Dict, Mapping, Optional, Tuple

from genus_zero_brauer.definitions import DEFAULT_BALANCING_UNIVERSE_SIZE
from genus_zero_brauer.exact_algebra.dyadic import Dyadic
from genus_zero_brauer.brauer_local.brauer_elem import BalancingPlaceException, BrauerElem, balancing_place, \
    galois_act, one_minus_sigma
from genus_zero_brauer.brauer_local.places import FIXED_FINITE_KINDS, PlaceL, SplittingKind


class PreconditionException(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(message)


def _split_pairs(b: BrauerElem, extra=()) -> Dict[PlaceL, PlaceL]:
    """representative -> partner for every split pair touched by b or *extra*, index 0 unless *extra* names one"""
    representatives: Dict[PlaceL, PlaceL] = {}
    named = {p for p in extra if p.kind == SplittingKind.SPLIT}
    for place in list(extra) + b.support:
        if place.kind != SplittingKind.SPLIT:
            continue
        if place in representatives or place.conjugate() in representatives:
            continue
        if place not in named and place.conjugate() in named:
            place = place.conjugate()
        elif place not in named and place.index == 1:
            place = place.conjugate()
        representatives[place] = place.conjugate()
    return representatives


def _check_balancing_place(b: BrauerElem, q: PlaceL):
    if q.kind not in FIXED_FINITE_KINDS:
        raise BalancingPlaceException(f"the balancing place {q} is not inert or ramified")
    if b.invariant(q):
        raise BalancingPlaceException(f"the balancing place {q} carries the nonzero invariant {b.invariant(q)}")


def construct_beta_i(beta: BrauerElem, z_map: Mapping[PlaceL, Dyadic], i: int,
                     balancing: Optional[PlaceL] = None,
                     universe_size: int = DEFAULT_BALANCING_UNIVERSE_SIZE) -> BrauerElem:
    """
    Build beta_i with 2^i * beta_i = beta place by place. On a split pair (p1, p2) with p1 the place named in
    z_map: (beta_i)_p1 = 2z + beta_p2 / 2^i and (beta_i)_p2 = beta_p2 / 2^i, where 2^(i+1) z = ((1-sigma)beta)_p1.
    At an inert or ramified place other than the balancing place q: beta_p / 2^i. At q, where beta vanishes:
    minus the sum of all other invariants. Archimedean invariants are 0.
    """
    if i < 0:
        raise ValueError("i must be nonnegative")
    if not beta.is_divisible():
        raise PreconditionException(f"{beta} has a nonzero archimedean invariant")
    if any(p.kind != SplittingKind.SPLIT for p in z_map):
        raise PreconditionException("z is given on split places only")
    q = balancing_place(beta, universe_size) if balancing is None else balancing
    _check_balancing_place(beta, q)

    difference = one_minus_sigma(beta)
    pairs = _split_pairs(beta, extra=z_map.keys())
    result: Dict[PlaceL, Dyadic] = {}
    for p1, p2 in pairs.items():
        if p2 in z_map:
            raise PreconditionException(f"z is given on both places over {p1.base}")
        z = z_map.get(p1, Dyadic())
        if (2 ** (i + 1)) * z != difference.invariant(p1):
            raise PreconditionException(f"2^{i + 1} z = {(2 ** (i + 1)) * z} differs from ((1-σ)β)_{p1} = "
                                        f"{difference.invariant(p1)}")
        tail = beta.invariant(p2).divide(i)
        result[p1] = 2 * z + tail
        result[p2] = tail
    for place, value in beta.invariants:
        if place.kind in FIXED_FINITE_KINDS and place != q:
            result[place] = value.divide(i)
    result[q] = -sum(result.values(), Dyadic())
    beta_i = BrauerElem.of(beta.d, result)

    assert (2 ** i) * beta_i == beta, f"2^{i} β_{i} differs from β"
    difference_i = one_minus_sigma(beta_i)
    for p1, p2 in pairs.items():
        assert difference_i.invariant(p1) == 2 * z_map.get(p1, Dyadic()), f"(1-σ)β_{i} is wrong at {p1}"
    assert all(p.kind == SplittingKind.SPLIT for p in difference_i.support)
    logging.info(f"constructed β_{i} = {beta_i} balanced at {q}")
    return beta_i


def construct_gamma(gamma_prime: BrauerElem, balancing: Optional[PlaceL] = None,
                    universe_size: int = DEFAULT_BALANCING_UNIVERSE_SIZE) -> BrauerElem:
    """
    gamma with (1-sigma) gamma = gamma_prime for a sigma-negated gamma_prime supported on split pairs:
    gamma_p1 = gamma_prime_p1, gamma_p2 = 0 on each pair (p1 of index 0) and a single inert or ramified place q
    absorbing minus their sum.
    """
    if galois_act(gamma_prime) != -gamma_prime:
        raise PreconditionException(f"{gamma_prime} is not σ-negated")
    if any(p.kind != SplittingKind.SPLIT for p in gamma_prime.support):
        raise PreconditionException(f"{gamma_prime} does not vanish off the split places")
    q = balancing_place(gamma_prime, universe_size) if balancing is None else balancing
    _check_balancing_place(gamma_prime, q)
    result = {p: v for p, v in gamma_prime.invariants if p.index == 0}
    result[q] = -sum(result.values(), Dyadic())
    gamma = BrauerElem.of(gamma_prime.d, result)

    assert one_minus_sigma(gamma) == gamma_prime, "(1-σ)γ differs from γ'"
    assert gamma.order() <= gamma_prime.order()
    return gamma


def construct_lifted_beta(gamma_prime: BrauerElem, balancing: Optional[PlaceL] = None,
                          universe_size: int = DEFAULT_BALANCING_UNIVERSE_SIZE) -> Tuple[BrauerElem, BrauerElem]:
    """(gamma, beta = 2*gamma) with (1-sigma) beta = 2 * gamma_prime"""
    gamma = construct_gamma(gamma_prime, balancing, universe_size)
    beta = 2 * gamma
    assert one_minus_sigma(beta) == 2 * gamma_prime
    return gamma, beta
