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

from typing import Any, Dict, List

import ujson

from genus_zero_brauer.brauer_local.brauer_elem import quaternion_invariants, restriction_from_q
from genus_zero_brauer.cli_harness.verdicts import CYCLOTOMIC_FIELD_PARAMETER, Verdict, VerdictStatus, \
    check_first_layer
from genus_zero_brauer.definitions import CERTIFICATE_VERSION
from genus_zero_brauer.exact_algebra.parsing import ParseException
from genus_zero_brauer.exact_algebra.quadratic_field import parse_quad_elem
from genus_zero_brauer.exact_algebra.rationals import parse_rational, squarefree_class
from genus_zero_brauer.exact_algebra.symbols import hilbert_symbol, parse_place_q, relevant_places


class CertificateReplayException(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(message)


def certificate_to_json(certificate: Dict[str, Any]) -> str:
    return ujson.dumps(certificate, indent=2, ensure_ascii=False)


def write_certificate(verdict: Verdict, path: str):
    with open(path, "w", encoding="utf-8") as f:
        f.write(certificate_to_json(verdict.certificate))
    logging.info(f"certificate with verdict {verdict.status.value} written to {path}")


def read_certificate(path: str) -> Dict[str, Any]:
    with open(path, encoding="utf-8") as f:
        try:
            return ujson.load(f)
        except ValueError as e:
            raise CertificateReplayException(f"{path} is not a JSON certificate: {e}") from e


def _expect(condition: bool, message: str):
    if not condition:
        raise CertificateReplayException(message)


def _replay_symbols(certificate: Dict[str, Any], c_class: int, d_class: int) -> List[str]:
    recorded = certificate["local_symbols"]
    places = [parse_place_q(entry["place"]) for entry in recorded]
    _expect(places == relevant_places(c_class, d_class),
            f"the recorded places {[str(v) for v in places]} are not the relevant places of ({c_class}, {d_class})")
    product = 1
    for v, entry in zip(places, recorded):
        symbol = hilbert_symbol(c_class, d_class, v)
        _expect(symbol == entry["symbol"], f"the symbol at {v} is {symbol}, recorded {entry['symbol']}")
        product *= symbol
    _expect(product == 1, "the recorded symbols violate the product formula")
    return [entry["place"] for entry in recorded if entry["symbol"] == -1]


def _replay_conic_point(certificate: Dict[str, Any], c, d):
    search = certificate["conic_search"]
    _expect(isinstance(search.get("bound"), int) and search["bound"] >= 1, "the conic search bound is invalid")
    if search["result"] is None:
        return
    x, y = (parse_rational(value) for value in search["result"])
    _expect(c * x * x + d * y * y == 1, f"({x}, {y}) is not on 1 = {c}x^2 + {d}y^2")
    _expect(max(abs(v.numerator) for v in (x, y)) <= search["bound"] and
            max(v.denominator for v in (x, y)) <= search["bound"],
            f"({x}, {y}) exceeds the recorded height bound {search['bound']}")


def _replay_w_check(certificate: Dict[str, Any]) -> bool:
    recorded = certificate["w_check"]
    _expect(recorded is not None, "the W check is missing")
    e = parse_quad_elem(recorded["e"], CYCLOTOMIC_FIELD_PARAMETER)
    w_check = check_first_layer(e)
    _expect(str(w_check.norm) == recorded["norm"], f"N({e}) is {w_check.norm}, recorded {recorded['norm']}")
    _expect(w_check.classification.value == recorded["classification"],
            f"{e} is {w_check.classification.value}, recorded {recorded['classification']}")
    _expect(w_check.criterion == recorded["criterion"]["holds"], "the cyclic quartic criterion does not replay")
    return w_check.passed


def replay(certificate: Dict[str, Any]) -> Verdict:
    """
    Re-verify every recorded check of a certificate through the library and re-derive its verdict from them.
    :raises CertificateReplayException: on any disagreement
    """
    _expect(certificate.get("version") == CERTIFICATE_VERSION,
            f"unsupported certificate version {certificate.get('version')}")
    try:
        c, d = parse_rational(certificate["inputs"]["c"]), parse_rational(certificate["inputs"]["d"])
        c_class, d_class = squarefree_class(c), squarefree_class(d)
        _expect(certificate["square_class_normalization"] == {"c": c_class, "d": d_class},
                f"the square classes of ({c}, {d}) are ({c_class}, {d_class})")
        witnesses = _replay_symbols(certificate, c_class, d_class)
        _replay_conic_point(certificate, c, d)

        if not witnesses:
            status = VerdictStatus.RATIONAL_CONIC
        elif d_class != CYCLOTOMIC_FIELD_PARAMETER:
            status = VerdictStatus.OUT_OF_SCOPE
        else:
            restricted = restriction_from_q(quaternion_invariants(c_class, d_class), d_class)
            _expect(certificate["restriction_to_l"] == {"invariants": str(restricted), "trivial": not restricted},
                    f"the restriction to Q(sqrt({d_class})) does not replay")
            passed = _replay_w_check(certificate)
            status = VerdictStatus.ISOMORPHIC_TO_BR_QT if passed else VerdictStatus.OUT_OF_SCOPE

        recorded = certificate["verdict"]
        _expect(recorded["status"] == status.value, f"the checks give {status.value}, recorded {recorded['status']}")
        _expect(recorded["witnesses"] == witnesses, f"the witnesses are {witnesses}, recorded {recorded['witnesses']}")
    except (KeyError, TypeError) as e:
        raise CertificateReplayException(f"malformed certificate: missing or invalid {e}") from e
    except (ParseException, ValueError) as e:
        raise CertificateReplayException(f"malformed certificate value: {e}") from e
    logging.info(f"certificate for ({c}, {d}) replayed: {status.value}")
    return Verdict(status, certificate)
