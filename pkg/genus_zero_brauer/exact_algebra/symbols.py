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
from typing import List, Optional, Tuple

from sympy import isprime, multiplicity, primefactors

from genus_zero_brauer.exact_algebra.rationals import RationalLike, squarefree_part, to_rational


@dataclass(frozen=True, order=True)
class PlaceQ:
    """
    A place of Q: a rational prime, or the real place when *prime* is None.
    """
    prime: Optional[int] = None

    def __post_init__(self):
        if self.prime is not None and not isprime(self.prime):
            raise ValueError(f"{self.prime} is not a prime")

    @property
    def is_real(self) -> bool:
        return self.prime is None

    def sort_key(self) -> Tuple[int, int]:
        return (1, 0) if self.prime is None else (0, self.prime)

    def __str__(self):
        return "inf" if self.prime is None else str(self.prime)


REAL_PLACE = PlaceQ(None)


def parse_place_q(text: str) -> PlaceQ:
    text = text.strip()
    if text in ("inf", "oo", "real"):
        return REAL_PLACE
    try:
        return PlaceQ(int(text))
    except ValueError as e:
        raise ValueError(f"'{text}' is neither a prime nor 'inf'") from e


def legendre_symbol(a: int, p: int) -> int:
    """
    Quadratic residue symbol (a/p) for an odd prime p by Euler's criterion a^((p-1)/2) mod p.
    """
    if p == 2 or not isprime(p):
        raise ValueError(f"{p} is not an odd prime")
    residue = pow(a % p, (p - 1) // 2, p)
    if residue == 0:
        return 0
    return 1 if residue == 1 else -1


def _integer_representative(x: Fraction) -> int:
    # p/q and p*q differ by the square q^2
    return x.numerator * x.denominator


def hilbert_symbol(a: RationalLike, b: RationalLike, v: PlaceQ) -> int:
    """
    Hilbert symbol (a, b)_v: +1 iff z^2 = a*x^2 + b*y^2 has a nontrivial solution over Q_v.
    For p odd, writing a = p^alpha*u and b = p^beta*w with units u, w:
        (a, b)_p = (-1)^(alpha*beta*(p-1)/2) * (u/p)^beta * (w/p)^alpha
    and for p = 2:
        (a, b)_2 = (-1)^(eps(u)*eps(w) + alpha*omega(w) + beta*omega(u))
    with eps(u) = (u-1)/2 and omega(u) = (u^2-1)/8 mod 2.
    """
    a, b = to_rational(a), to_rational(b)
    if a == 0 or b == 0:
        raise ValueError("the Hilbert symbol is defined for nonzero arguments only")
    if v.is_real:
        return -1 if a < 0 and b < 0 else 1
    p = v.prime
    a_int, b_int = _integer_representative(a), _integer_representative(b)
    alpha, beta = multiplicity(p, abs(a_int)), multiplicity(p, abs(b_int))
    u, w = a_int // p ** alpha, b_int // p ** beta
    if p != 2:
        sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 == 1 else 1
        return sign * legendre_symbol(u, p) ** beta * legendre_symbol(w, p) ** alpha

    def eps(x):
        return ((x - 1) // 2) % 2

    def omega(x):
        return ((x * x - 1) // 8) % 2

    exponent = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u)
    return -1 if exponent % 2 == 1 else 1


def relevant_places(*values: RationalLike) -> List[PlaceQ]:
    """
    The real place followed by every prime dividing 2 and the numerators and denominators of *values*;
    outside these places all Hilbert symbols of the values are +1.
    """
    primes = {2}
    for x in values:
        x = to_rational(x)
        primes.update(primefactors(abs(x.numerator)))
        primes.update(primefactors(x.denominator))
    return [REAL_PLACE] + [PlaceQ(p) for p in sorted(primes)]


def hilbert_symbols(a: RationalLike, b: RationalLike) -> List[Tuple[PlaceQ, int]]:
    return [(v, hilbert_symbol(a, b, v)) for v in relevant_places(a, b)]


def solubility_exponent(a: int, b: int, p: int) -> int:
    """2*v_p(16ab) + 3: solubility of z^2 = a*x^2 + b*y^2 modulo p^k for this k lifts to Q_p for any a and b"""
    return 2 * multiplicity(p, abs(16 * a * b)) + 3


def locally_soluble_bruteforce(a: int, b: int, p: int, exponent: Optional[int] = None) -> bool:
    """
    Search for a primitive solution of z^2 = a*x^2 + b*y^2 modulo p^k. A primitive solution has x or y a unit
    (otherwise z^2 would be a unit divisible by p), so one of them can be scaled to 1.

    Without an explicit *exponent*, a and b are first replaced by squarefree representatives, which leaves the
    Hilbert symbol unchanged, and k = 1 + v(a) + v(b) for odd p, k = 3 + v(a) + v(b) for p = 2. With v(a) and
    v(b) at most 1 a solution modulo this p^k lifts to Q_p by Hensel's lemma. The general bound
    solubility_exponent holds for any a and b but is far too large to search at p <= 50. An explicit *exponent*
    searches modulo p^exponent with a and b as given.
    """
    if exponent is None:
        a, b = squarefree_part(a), squarefree_part(b)
        exponent = multiplicity(p, abs(a)) + multiplicity(p, abs(b)) + (3 if p == 2 else 1)
    modulus = p ** exponent
    squares = {(z * z) % modulus for z in range(modulus)}
    for t in range(modulus):
        if (a + b * t * t) % modulus in squares or (a * t * t + b) % modulus in squares:
            return True
    return False
