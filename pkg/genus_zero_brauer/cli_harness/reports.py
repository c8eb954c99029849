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

from typing import Any, Dict, List, Optional

import ujson

from genus_zero_brauer.definitions import DEFAULT_TOWER_DEPTH, DEFAULT_TRUNCATION, DEFAULT_ULM_CUTOFF
from genus_zero_brauer.exact_algebra.parsing import ParseException
from genus_zero_brauer.exact_algebra.rationals import RationalLike, check_input_cap, to_rational
from genus_zero_brauer.exact_algebra.symbols import PlaceQ, hilbert_symbol, hilbert_symbols
from genus_zero_brauer.torsion_core.descriptors import GroupDescriptor, NotAnInvolutionException
from genus_zero_brauer.torsion_core.heights import ulm_invariant, ulm_oracle, ulm_sequence
from genus_zero_brauer.torsion_core.involution import check_action_laws, check_spans_torsion, inp_decompose
from genus_zero_brauer.torsion_core.ordinals import OMEGA_TWO, Ordinal

# the decomposition is checked on the 2^k-torsion for this k
SPAN_CHECK_EXPONENT = 10


def ulm_report(g: GroupDescriptor, cutoff: int = DEFAULT_ULM_CUTOFF, verify: bool = False,
               truncation_level: int = DEFAULT_TRUNCATION) -> Dict[str, Any]:
    sequence = ulm_sequence(g, cutoff)
    report = {"group": str(g), "cutoff": cutoff,
              "finite": sequence.finite, "transfinite": sequence.transfinite,
              "omega_two": ulm_invariant(g, OMEGA_TWO), "divisible_rank": sequence.divisible_rank}
    if verify:
        levels = [Ordinal.finite(j) for j in range(cutoff)] + [Ordinal.omega_plus(j) for j in range(cutoff)] + \
                 [OMEGA_TWO]
        mismatches = []
        for level in levels:
            oracle = sum(ulm_oracle(s, level, truncation_level) for s in g.summands)
            if oracle != ulm_invariant(g, level):
                mismatches.append({"level": str(level), "table": ulm_invariant(g, level), "oracle": oracle})
        if mismatches:
            logging.warning(f"the Ulm invariants of {g} disagree with truncation at level {truncation_level}: "
                            f"{mismatches}")
        report["verification"] = {"truncation_level": truncation_level, "mismatches": mismatches,
                                  "passed": not mismatches}
    return report


def format_ulm_report(report: Dict[str, Any]) -> List[str]:
    lines = [f"Ulm invariants of {report['group']}"]
    lines += [f"U({j}) = {u}" for j, u in enumerate(report["finite"])]
    lines += [f"U({Ordinal.omega_plus(j)}) = {u}" for j, u in enumerate(report["transfinite"])]
    lines.append(f"U({OMEGA_TWO}) = {report['omega_two']}")
    lines.append(f"divisible rank = {report['divisible_rank']}")
    if "verification" in report:
        verification = report["verification"]
        status = "passed" if verification["passed"] else f"FAILED at {verification['mismatches']}"
        lines.append(f"truncation oracle (level {verification['truncation_level']}): {status}")
    return lines


def parse_matrix(text: str) -> List[List[int]]:
    try:
        rows = ujson.loads(text)
    except ValueError as e:
        raise ParseException(f"malformed matrix: {e}", text, None) from e
    if not isinstance(rows, list) or not rows or \
            not all(isinstance(row, list) and all(isinstance(v, int) for v in row) for row in rows):
        raise ParseException("the matrix must be a nonempty list of integer rows", text, None)
    if any(len(row) != len(rows) for row in rows):
        raise NotAnInvolutionException(f"the matrix is not square: {len(rows)} rows of lengths "
                                       f"{[len(row) for row in rows]}")
    return rows


def inp_report(matrix: List[List[int]], depth: int = DEFAULT_TOWER_DEPTH, samples: int = 1000,
               seed: int = 0) -> Dict[str, Any]:
    """
    Decompose (Q_2/Z_2)^r under the involution *matrix* and verify the action laws to *depth* and that the
    towers span the 2^10-torsion.
    :raises NotAnInvolutionException: when matrix^2 is not the identity
    """
    decomposition = inp_decompose(len(matrix), matrix, depth)
    laws = check_action_laws(decomposition)
    spans = check_spans_torsion(decomposition, SPAN_CHECK_EXPONENT, samples=samples, seed=seed)
    return {"matrix": matrix, "rank": decomposition.rank,
            "fixed_rank": len(decomposition.fixed_basis), "neg_rank": len(decomposition.neg_basis),
            "pairs": len(decomposition.pair_basis),
            "fixed_basis": [list(v) for v in decomposition.fixed_basis],
            "neg_basis": [list(v) for v in decomposition.neg_basis],
            "pair_basis": [[list(v), list(w)] for v, w in decomposition.pair_basis],
            "depth": depth, "action_laws": laws, "spans_torsion": spans, "verified": laws and spans}


def format_inp_report(report: Dict[str, Any]) -> List[str]:
    return [f"I-rank {report['fixed_rank']}, N-rank {report['neg_rank']}, P-pairs {report['pairs']}",
            f"I basis: {report['fixed_basis']}",
            f"N basis: {report['neg_basis']}",
            f"P pairs: {report['pair_basis']}",
            f"action laws to depth {report['depth']}: {'ok' if report['action_laws'] else 'FAILED'}",
            f"spans the 2^{SPAN_CHECK_EXPONENT}-torsion: {'ok' if report['spans_torsion'] else 'FAILED'}"]


def hilbert_report(a: RationalLike, b: RationalLike, place: Optional[PlaceQ] = None) -> Dict[str, Any]:
    """the symbol at *place*, or every relevant symbol and their product when no place is given"""
    a, b = to_rational(a), to_rational(b)
    check_input_cap(a)
    check_input_cap(b)
    if place is not None:
        return {"a": str(a), "b": str(b), "symbols": [{"place": str(place), "symbol": hilbert_symbol(a, b, place)}]}
    local_symbols = hilbert_symbols(a, b)
    product = 1
    for _, symbol in local_symbols:
        product *= symbol
    return {"a": str(a), "b": str(b),
            "symbols": [{"place": str(v), "symbol": symbol} for v, symbol in local_symbols], "product": product}


def format_hilbert_report(report: Dict[str, Any]) -> List[str]:
    lines = [f"({report['a']}, {report['b']})_{entry['place']} = {entry['symbol']:+d}" for entry in report["symbols"]]
    if "product" in report:
        lines.append(f"product = {report['product']:+d}")
    return lines
