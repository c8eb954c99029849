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
from typing import Tuple

from genus_zero_brauer.exact_algebra.parsing import ParseException
from genus_zero_brauer.exact_algebra.rationals import parse_rational, to_rational


@dataclass(frozen=True, order=True)
class Dyadic:
    """
    An element of Q_2/Z_2, stored as its representative in [0, 1); the denominator is a power of 2.
    """
    value: Fraction = Fraction(0)

    def __post_init__(self):
        value = to_rational(self.value)
        denominator = value.denominator
        if denominator & (denominator - 1):
            raise ValueError(f"{value} does not have a power of two denominator")
        object.__setattr__(self, "value", value - (value.numerator // denominator))

    @classmethod
    def of(cls, numerator: int, denominator: int = 1) -> 'Dyadic':
        return cls(Fraction(numerator, denominator))

    def __add__(self, other: 'Dyadic') -> 'Dyadic':
        return Dyadic(self.value + other.value)

    def __sub__(self, other: 'Dyadic') -> 'Dyadic':
        return Dyadic(self.value - other.value)

    def __neg__(self) -> 'Dyadic':
        return Dyadic(-self.value)

    def __mul__(self, m: int) -> 'Dyadic':
        if not isinstance(m, int):
            return NotImplemented
        return Dyadic(self.value * m)

    __rmul__ = __mul__

    def __bool__(self):
        return self.value != 0

    def order(self) -> int:
        return self.value.denominator

    def divide(self, power_of_two_exponent: int) -> 'Dyadic':
        """
        The canonical y with 2^k * y = self: the representative in [0, 1) divided by 2^k. Fixing this choice
        makes repeated division compatible: 2 * x.divide(k + 1) == x.divide(k).
        """
        return Dyadic(self.value / (2 ** power_of_two_exponent))

    def halves(self) -> Tuple['Dyadic', 'Dyadic']:
        half = self.divide(1)
        return half, half + Dyadic(Fraction(1, 2))

    def __str__(self):
        return str(self.value)


def as_dyadic(x) -> Dyadic:
    if isinstance(x, Dyadic):
        return x
    return Dyadic(to_rational(x))


def parse_dyadic(text: str) -> Dyadic:
    value = parse_rational(text)
    try:
        return Dyadic(value)
    except ValueError as e:
        raise ParseException(str(e), text, 0) from e
