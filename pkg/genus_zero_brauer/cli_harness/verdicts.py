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

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from genus_zero_brauer.brauer_local.brauer_elem import quaternion_invariants, restriction_from_q
from genus_zero_brauer.brauer_local.conics import conic_point_search, quaternion_splits
from genus_zero_brauer.definitions import CERTIFICATE_VERSION, DEFAULT_CONIC_SEARCH_BOUND, \
    DEFAULT_CONIC_SWEEP_BOUND
from genus_zero_brauer.exact_algebra.quadratic_field import QuadElem
from genus_zero_brauer.exact_algebra.rationals import RationalLike, check_input_cap, is_square_rational, \
    squarefree_class, to_rational
from genus_zero_brauer.kummer_chars.characters import WClass, w_membership

# Q(sqrt(2+sqrt(2))) is the quadratic step of Q(zeta_16)^+ over Q(sqrt(2)), the first cyclotomic layer over l
CYCLOTOMIC_FIELD_PARAMETER = 2
FIRST_LAYER_GENERATOR = QuadElem(Fraction(2), Fraction(1), CYCLOTOMIC_FIELD_PARAMETER)


class VerdictStatus(Enum):
    RATIONAL_CONIC = "RationalConic"
    ISOMORPHIC_TO_BR_QT = "IsomorphicToBrQt"
    OUT_OF_SCOPE = "OutOfScope"


@dataclass
class Verdict:
    status: VerdictStatus
    certificate: Dict[str, Any] = field(default_factory=dict)

    @property
    def witnesses(self) -> List[str]:
        return self.certificate["verdict"]["witnesses"]

    @property
    def explanation(self) -> str:
        return self.certificate["verdict"]["explanation"]


@dataclass
class WCheck:
    e: QuadElem
    norm: Fraction
    classification: WClass
    criterion: bool

    @property
    def passed(self) -> bool:
        return self.classification == WClass.CYCLIC4 and self.criterion

    def to_dict(self) -> Dict[str, Any]:
        return {"e": str(self.e), "norm": str(self.norm), "classification": self.classification.value,
                "criterion": {"statement": f"{self.e.d}*N(e) is a rational square", "holds": self.criterion}}


def check_first_layer(e: QuadElem = FIRST_LAYER_GENERATOR) -> WCheck:
    """
    l(sqrt(e)) is the first layer of the cyclotomic Z_2-extension over l = Q(sqrt(2)) only if it is cyclic of
    order 4 over Q. A Galois quadratic extension of l is cyclic quartic iff d*N(e) is a square, which is checked
    independently of w_membership.
    """
    norm = e.norm()
    result = WCheck(e=e, norm=norm, classification=w_membership(e), criterion=is_square_rational(e.d * norm))
    assert (result.classification == WClass.CYCLIC4) == result.criterion or \
        result.classification == WClass.NOT_GALOIS, f"the W classification of {e} contradicts d*N(e)"
    return result


def _point_text(point) -> Optional[List[str]]:
    return None if point is None else [str(point[0]), str(point[1])]


def check_pair(c: RationalLike, d: RationalLike, conic_bound: int = DEFAULT_CONIC_SEARCH_BOUND,
               sweep_bound: int = DEFAULT_CONIC_SWEEP_BOUND) -> Verdict:
    """
    Decide Br(E) for the function field E of the conic 1 = c*x^2 + d*y^2: rational when (c, d) splits, isomorphic
    to Br(Q(t)) when (c, d) is nonsplit and split by Q(sqrt(2)) and out of scope otherwise. Every step is
    recorded in the certificate of the returned verdict.
    """
    c, d = to_rational(c), to_rational(d)
    if c == 0 or d == 0:
        raise ValueError("the conic 1 = c*x^2 + d*y^2 needs nonzero c and d")
    check_input_cap(c)
    check_input_cap(d)

    certificate: Dict[str, Any] = {"version": CERTIFICATE_VERSION, "inputs": {"c": str(c), "d": str(d)}}
    c_class, d_class = squarefree_class(c), squarefree_class(d)
    certificate["square_class_normalization"] = {"c": c_class, "d": d_class}
    logging.info(f"square classes of ({c}, {d}): ({c_class}, {d_class})")

    splitting = quaternion_splits(c_class, d_class)
    certificate["local_symbols"] = [{"place": str(v), "symbol": symbol} for v, symbol in splitting.symbols]
    witnesses = [str(v) for v in splitting.witnesses]
    logging.info(f"local symbols of ({c_class}, {d_class}): {certificate['local_symbols']}")

    point = conic_point_search(c, d, height_bound=conic_bound, sweep_bound=sweep_bound)
    certificate["conic_search"] = {"bound": conic_bound, "result": _point_text(point)}
    assert point is None or splitting.splits, f"the point {point} lies on a conic whose algebra does not split"
    logging.info(f"conic search for 1 = {c}x^2 + {d}y^2 up to height {conic_bound}: {point}")

    certificate["w_check"] = None
    certificate["restriction_to_l"] = None
    if splitting.splits:
        if point is None:
            logging.warning(f"({c_class}, {d_class}) splits but no point was found within the height bound")
        return _finish(certificate, VerdictStatus.RATIONAL_CONIC, witnesses,
                       "the quaternion algebra splits, so E is rational and Br(E) = Br(Q(t))")
    if d_class != CYCLOTOMIC_FIELD_PARAMETER:
        return _finish(certificate, VerdictStatus.OUT_OF_SCOPE, witnesses,
                       f"d is in the square class of {d_class}, not of 2, so E is not split by Q(sqrt(2))")

    w_check = check_first_layer()
    certificate["w_check"] = w_check.to_dict()
    restricted = restriction_from_q(quaternion_invariants(c_class, d_class), d_class)
    certificate["restriction_to_l"] = {"invariants": str(restricted), "trivial": not restricted}
    assert not restricted, f"({c_class}, {d_class}) does not split over Q(sqrt({d_class}))"
    if not w_check.passed:
        return _finish(certificate, VerdictStatus.OUT_OF_SCOPE, witnesses,
                       f"l(sqrt({w_check.e})) is {w_check.classification.value}, not the cyclic first layer")
    return _finish(certificate, VerdictStatus.ISOMORPHIC_TO_BR_QT, witnesses,
                   "nonsplit conic split by Q(sqrt(2)) with W = 0, so Br(E) is isomorphic to Br(Q(t))")


def _finish(certificate: Dict[str, Any], status: VerdictStatus, witnesses: List[str], explanation: str) -> Verdict:
    certificate["verdict"] = {"status": status.value, "witnesses": witnesses, "explanation": explanation}
    logging.info(f"verdict {status.value}: {explanation}")
    return Verdict(status, certificate)
