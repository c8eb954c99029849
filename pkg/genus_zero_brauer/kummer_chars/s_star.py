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
from typing import Dict, Iterable, Optional, Tuple

from genus_zero_brauer.exact_algebra.rationals import RationalLike
from genus_zero_brauer.brauer_local.brauer_elem import BrauerElem, galois_act, one_minus_sigma
from genus_zero_brauer.kummer_chars.characters import Char2L, Char2P, MAX_SELF_TILDE_DEGREE, char_mul, cor_sum, \
    s_ptilde_star, s_star_characters, same_char, sigma_char
from genus_zero_brauer.kummer_chars.irreducible import IrredPoly, UnsupportedDegreeException
from genus_zero_brauer.kummer_chars.s1_tables.s1_table_api import S1Table
from genus_zero_brauer.kummer_chars.s1_tables.tables import ZeroTable


class InconsistentTableException(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class BrLUElem:
    """
    beta + chi_u + sum chi_p in Br(l(u))[2] = Br(l) + X(l) + sum over p of X(l(a_p)), every component of order at
    most 2. Trivial characters at the places p are dropped.
    """
    beta: BrauerElem
    chi_u: Optional[Char2L] = None
    chis: Tuple[Char2P, ...] = ()

    def __post_init__(self):
        if 2 * self.beta:
            raise ValueError(f"{self.beta} has order above 2")
        if self.chi_u is not None and self.chi_u.d != self.d:
            raise ValueError(f"{self.chi_u} is a character of another field")
        merged: Dict[IrredPoly, Char2P] = {}
        for chi in self.chis:
            if chi.d != self.d:
                raise ValueError(f"{chi} is a character of another field")
            merged[chi.p] = merged[chi.p] * chi if chi.p in merged else chi
        kept = tuple(sorted((chi for chi in merged.values() if not chi.is_trivial()), key=lambda x: x.p.sort_key()))
        object.__setattr__(self, "chis", kept)

    @classmethod
    def of(cls, beta: BrauerElem, chi_u: Optional[Char2L] = None, chis: Iterable[Char2P] = ()) -> 'BrLUElem':
        return cls(beta, chi_u, tuple(chis))

    @classmethod
    def zero(cls, d: int) -> 'BrLUElem':
        return cls(BrauerElem.zero(d))

    @property
    def d(self) -> int:
        return self.beta.d

    @property
    def chi_map(self) -> Dict[IrredPoly, Char2P]:
        return {chi.p: chi for chi in self.chis}

    def __add__(self, other: 'BrLUElem') -> 'BrLUElem':
        return BrLUElem(self.beta + other.beta, char_mul(self.chi_u, other.chi_u), self.chis + other.chis)

    def __eq__(self, other):
        if not isinstance(other, BrLUElem):
            return NotImplemented
        if self.beta != other.beta or not same_char(self.chi_u, other.chi_u):
            return False
        mine, theirs = self.chi_map, other.chi_map
        return mine.keys() == theirs.keys() and all(mine[p] == theirs[p] for p in mine)

    def __str__(self):
        parts = [str(self.beta), str(self.chi_u) if self.chi_u else "chi_u=1"] + [str(chi) for chi in self.chis]
        return " + ".join(parts)


def _check_degrees(x: BrLUElem):
    for chi in x.chis:
        if chi.p.degree > MAX_SELF_TILDE_DEGREE:
            raise UnsupportedDegreeException(f"s* is supported on places of degree at most "
                                             f"{MAX_SELF_TILDE_DEGREE}, not on {chi.p}")


def apply_s_star(x: BrLUElem, c: RationalLike, table: S1Table = None, check_involution: bool = True) -> BrLUElem:
    """
    s*(beta + chi_u + sum chi_p) = (sigma(beta) + T(chi_u + sum chi_p)) + (sigma(chi_u) + sum sigma Cor chi_p)
    + sum s*_pp~(chi_p), with T the s_1^* table. Unless *check_involution* is off, s*(s*(x)) = x is verified.
    """
    table = table or ZeroTable()
    _check_degrees(x)
    chi_u, chis = s_star_characters(x.chi_u, x.chi_map, c)
    try:
        beta = galois_act(x.beta) + table.evaluate(x.d, x.chi_u, x.chi_map, c)
        image = BrLUElem(beta, chi_u, tuple(chis.values()))
    except ValueError as e:
        raise InconsistentTableException(f"{type(table).__name__} leaves Br(l)[2] on {x}: {e}") from e
    if check_involution:
        back = apply_s_star(image, c, table, check_involution=False)
        if back != x:
            raise InconsistentTableException(f"{type(table).__name__} does not make s* an involution: {x} is sent "
                                             f"to {image} and back to {back}")
    return image


def fixed_norm(x: BrLUElem, c: RationalLike, table: S1Table = None) -> BrLUElem:
    """x + s*(x), which s* fixes"""
    return x + apply_s_star(x, c, table)


@dataclass
class ConditionResult:
    passed: bool
    witness: Optional[str] = None


@dataclass
class FixedConditionsReport:
    permutes_places: ConditionResult
    u_component: ConditionResult
    brauer_component: ConditionResult

    @property
    def all_passed(self) -> bool:
        return self.permutes_places.passed and self.u_component.passed and self.brauer_component.passed


def check_fixed_conditions(x: BrLUElem, c: RationalLike, table: S1Table = None) -> FixedConditionsReport:
    """
    The conditions cutting out the s*-fixed subgroup: (i) s*_pp~(chi_p) = chi_p~ for all p; (ii)
    (1+sigma) chi_u = -Cor sum chi_p; (iii) (1-sigma) beta = s_1^*(chi_u + sum chi_p).
    """
    table = table or ZeroTable()
    _check_degrees(x)
    chi_map = x.chi_map

    permutes_places = ConditionResult(True)
    for chi in x.chis:
        image = s_ptilde_star(chi, c)
        target = chi_map.get(image.p)
        if not (image.is_trivial() if target is None else image == target):
            permutes_places = ConditionResult(False, f"s*({chi}) = {image} but the component at {image.p} is "
                                                     f"{target or 'trivial'}")
            break

    norm_side = char_mul(x.chi_u, sigma_char(x.chi_u))
    cor_side = cor_sum(x.chis)
    u_component = ConditionResult(True) if same_char(norm_side, cor_side) else \
        ConditionResult(False, f"(1+σ)χ_u = {norm_side or 1} but Cor Σχ_p = {cor_side or 1}")

    difference = one_minus_sigma(x.beta)
    table_value = table.evaluate(x.d, x.chi_u, chi_map, c)
    brauer_component = ConditionResult(True) if difference == table_value else \
        ConditionResult(False, f"(1-σ)β = {difference} but s1*(χ) = {table_value}")

    report = FixedConditionsReport(permutes_places, u_component, brauer_component)
    logging.info(f"fixed-subgroup conditions for {x}: (i) {permutes_places.passed}, (ii) {u_component.passed}, "
                 f"(iii) {brauer_component.passed}")
    return report
