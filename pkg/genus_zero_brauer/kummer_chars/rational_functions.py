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
from typing import Dict, Mapping, Tuple, Union

from genus_zero_brauer.exact_algebra.polynomials import QuadPoly
from genus_zero_brauer.exact_algebra.quadratic_field import QuadElem
from genus_zero_brauer.exact_algebra.rationals import RationalLike, to_rational
from genus_zero_brauer.kummer_chars.irreducible import IrredPoly


def tilde_poly(p: IrredPoly, c: RationalLike) -> IrredPoly:
    """
    p~ = X^deg(p) * sigma(p)(c/X) / sigma(p(0)), the monic irreducible polynomial whose roots are c/sigma(a) for
    the roots a of p. p -> p~ is an involution.
    """
    c = to_rational(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    n = p.degree
    conjugate = p.poly.conj()
    coeffs = [conjugate.coefficient(n - j) * c ** (n - j) for j in range(n + 1)]
    return IrredPoly(QuadPoly.of(coeffs, p.d).monic())


@dataclass(frozen=True)
class FactoredRF:
    """
    unit * u^u_exp * prod p^e_p, an element of l(u)* in the factorization l* x <u> x (free group on the monic
    irreducible p other than u).
    """
    unit: QuadElem
    u_exp: int = 0
    factors: Tuple[Tuple[IrredPoly, int], ...] = ()

    def __post_init__(self):
        if not self.unit:
            raise ValueError("the unit of a rational function is nonzero")
        merged: Dict[IrredPoly, int] = {}
        for p, e in self.factors:
            if p.d != self.unit.d:
                raise ValueError(f"{p} does not lie over Q(sqrt({self.unit.d}))")
            merged[p] = merged.get(p, 0) + e
        kept = tuple(sorted(((p, e) for p, e in merged.items() if e), key=lambda item: item[0].sort_key()))
        object.__setattr__(self, "factors", kept)

    @classmethod
    def of(cls, unit: Union[QuadElem, RationalLike], d: int, u_exp: int = 0,
           factors: Mapping[IrredPoly, int] = None) -> 'FactoredRF':
        unit = unit if isinstance(unit, QuadElem) else QuadElem.rational(unit, d)
        return cls(unit, u_exp, tuple((factors or {}).items()))

    @property
    def d(self) -> int:
        return self.unit.d

    def __mul__(self, other: 'FactoredRF') -> 'FactoredRF':
        return FactoredRF(self.unit * other.unit, self.u_exp + other.u_exp, self.factors + other.factors)

    def inverse(self) -> 'FactoredRF':
        return FactoredRF(self.unit.inverse(), -self.u_exp, tuple((p, -e) for p, e in self.factors))

    def __call__(self, t: Union[QuadElem, RationalLike]) -> QuadElem:
        value = self.unit * t ** self.u_exp if self.u_exp else self.unit
        for p, e in self.factors:
            value = value * p.poly(t) ** e
        return value

    def __str__(self):
        parts = [str(self.unit)]
        if self.u_exp:
            parts.append(f"u^{self.u_exp}")
        parts.extend(f"({p})^{e}" for p, e in self.factors)
        return " * ".join(parts)


def s_action_factored(x: FactoredRF, c: RationalLike) -> FactoredRF:
    """
    s = (sigma on coefficients, u -> c/u) on factored form: the unit goes to sigma(unit) c^u_exp times
    sigma(p(0))^e_p for each factor, u_exp to -u_exp - sum e_p deg p, and each p to p~ with the same exponent.
    """
    c = to_rational(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    unit = x.unit.conj() * c ** x.u_exp
    u_exp = -x.u_exp
    factors = []
    for p, e in x.factors:
        unit = unit * p.poly.constant_term().conj() ** e
        u_exp -= e * p.degree
        factors.append((tilde_poly(p, c), e))
    return FactoredRF(unit, u_exp, tuple(factors))
