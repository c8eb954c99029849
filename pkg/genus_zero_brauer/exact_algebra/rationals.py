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

from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from sympy import factorint, integer_nthroot

from genus_zero_brauer.definitions import INPUT_CAP
from genus_zero_brauer.exact_algebra.parsing import ParseException, Scanner

RationalLike = Union[int, Fraction]


class InputTooLargeException(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(message)


def to_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


def check_input_cap(x: Fraction):
    if abs(x.numerator) > INPUT_CAP or x.denominator > INPUT_CAP:
        raise InputTooLargeException(f"{x} exceeds the input cap of 2^63 on numerator and denominator")


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q", "p" or "-p/q" into a reduced Fraction. The 2^63 cap on numerator and denominator keeps
    factorization of the inputs at desk scale.
    """
    scanner = Scanner(text)
    value = scan_rational(scanner)
    scanner.expect_end()
    return value


def scan_rational(scanner: Scanner) -> Fraction:
    numerator = scanner.integer()
    denominator = 1
    if scanner.accept("/"):
        start = scanner.pos
        denominator = scanner.integer()
        if denominator <= 0:
            raise ParseException("denominator must be positive", scanner.text, start)
    value = Fraction(numerator, denominator)
    check_input_cap(value)
    return value


def is_square_integer(n: int) -> bool:
    if n < 0:
        return False
    return integer_nthroot(n, 2)[1]


def rational_sqrt(x: RationalLike) -> Optional[Fraction]:
    """
    :return: the nonnegative rational square root of x, or None if x is not a square in Q
    """
    x = to_rational(x)
    if x < 0:
        return None
    num_root, num_exact = integer_nthroot(x.numerator, 2)
    den_root, den_exact = integer_nthroot(x.denominator, 2)
    if not (num_exact and den_exact):
        return None
    return Fraction(int(num_root), int(den_root))


def is_square_rational(x: RationalLike) -> bool:
    return rational_sqrt(x) is not None


@lru_cache(maxsize=4096)
def squarefree_part(n: int) -> int:
    if n == 0:
        raise ValueError("zero has no square class")
    result = -1 if n < 0 else 1
    for prime, exponent in factorint(abs(n)).items():
        if exponent % 2 == 1:
            result *= prime
    return result


def squarefree_class(x: RationalLike) -> int:
    """
    :return: the squarefree integer representing the class of x in Q*/Q*^2 (p/q is in the class of p*q)
    """
    x = to_rational(x)
    if x == 0:
        raise ValueError("zero has no square class")
    return squarefree_part(x.numerator * x.denominator)


def is_squarefree(n: int) -> bool:
    return n != 0 and squarefree_part(n) == n


def two_adic_valuation(n: int) -> int:
    if n == 0:
        raise ValueError("the valuation of zero is infinite")
    return (n & -n).bit_length() - 1
