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

import itertools
import logging
import random
import time

from concurrent.futures.thread import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import ujson

from sympy import primerange

from genus_zero_brauer.brauer_local.brauer_elem import galois_act, one_minus_sigma
from genus_zero_brauer.brauer_local.conics import conic_point_search, quaternion_splits
from genus_zero_brauer.brauer_local.constructions import construct_beta_i, construct_gamma, construct_lifted_beta
from genus_zero_brauer.brauer_local.places import SplittingKind, balancing_candidates
from genus_zero_brauer.cli_harness.certificates import certificate_to_json, replay
from genus_zero_brauer.cli_harness.lifting import PreimagePolicy, QuotientModel, divided_tower, lift_tower
from genus_zero_brauer.cli_harness.reports import SPAN_CHECK_EXPONENT
from genus_zero_brauer.cli_harness.samplers import random_brauer_elem, random_brlu_elem, random_char2p, \
    random_involution, random_irred_poly, random_negated_elem, random_self_tilde_poly, random_residue
from genus_zero_brauer.cli_harness.verdicts import FIRST_LAYER_GENERATOR, VerdictStatus, check_pair
from genus_zero_brauer.config import Configuration
from genus_zero_brauer.exact_algebra.dyadic import Dyadic
from genus_zero_brauer.exact_algebra.polynomials import QuadPoly
from genus_zero_brauer.exact_algebra.quadratic_field import QuadElem
from genus_zero_brauer.exact_algebra.rationals import RationalLike, is_squarefree
from genus_zero_brauer.exact_algebra.symbols import PlaceQ, hilbert_symbol, locally_soluble_bruteforce, \
    relevant_places
from genus_zero_brauer.kummer_chars.characters import Char2P, WClass, cor_identity_check, s_pp_star, w_membership
from genus_zero_brauer.kummer_chars.rational_functions import FactoredRF, s_action_factored, tilde_poly
from genus_zero_brauer.kummer_chars.residue_fields import reciprocal_image
from genus_zero_brauer.kummer_chars.s1_tables.s1_table_factory import S1TableFactory
from genus_zero_brauer.kummer_chars.s_star import apply_s_star, check_fixed_conditions, fixed_norm
from genus_zero_brauer.torsion_core.descriptors import GroupDescriptor, Summand, parse_descriptor
from genus_zero_brauer.torsion_core.elements import GroupElem, apply_action, pruefer_vector, torsion_elements
from genus_zero_brauer.torsion_core.heights import height, height_oracle, ulm_invariant, ulm_oracle
from genus_zero_brauer.torsion_core.involution import check_action_laws, check_spans_torsion, inp_decompose
from genus_zero_brauer.torsion_core.ordinals import Ordinal
from genus_zero_brauer.torsion_core.towers import Tower, build_fixed_tower, verify_tower

HilbertFunction = Callable[[RationalLike, RationalLike, PlaceQ], int]

CONIC_PARAMETERS = (3, 5, 7)
MAX_REPORTED_FAILURES = 20
SELFTEST_SUMMANDS = [Summand.cyclic(1), Summand.cyclic(2), Summand.cyclic(3), Summand.cyclic(4), Summand.pruefer(),
                     Summand.gen_pruefer(1), Summand.gen_pruefer(2)]
ULM_LEVELS = [Ordinal.finite(j) for j in range(6)] + [Ordinal.omega_plus(0), Ordinal.omega_plus(1)]


@dataclass(frozen=True)
class SweepSizes:
    """
    How far the exhaustive suites reach. torsion_exponents maps a number of summands to the exponent e of the
    2^e-torsion enumerated for every descriptor of that many summands.
    """
    hilbert_prime_bound: int
    hilbert_value_bound: int
    conic_value_bound: int
    conic_height_bound: int
    torsion_exponents: Tuple[Tuple[int, int], ...]
    involution_instances: int


# the full 2^6-torsion of four summands has up to 2^24 elements, so three and four summands use the 2^2-torsion
FULL_SWEEPS = SweepSizes(hilbert_prime_bound=50, hilbert_value_bound=30, conic_value_bound=20,
                         conic_height_bound=10 ** 4, torsion_exponents=((1, 6), (2, 6), (3, 2), (4, 2)),
                         involution_instances=1000)
QUICK_SWEEPS = SweepSizes(hilbert_prime_bound=7, hilbert_value_bound=12, conic_value_bound=12,
                          conic_height_bound=10 ** 4, torsion_exponents=((1, 6), (2, 3)), involution_instances=25)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    failures: List[str] = field(default_factory=list)
    error: Optional[str] = None


@dataclass
class SelfTestReport:
    results: List[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "suites": [asdict(r) for r in self.results]}

    def to_json(self) -> str:
        return ujson.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def summary_lines(self) -> List[str]:
        lines = []
        for r in self.results:
            status = "ok" if r.passed else "FAILED"
            lines.append(f"{r.name:<28} {status:<7} {r.checks} checks")
            lines += [f"    {failure}" for failure in r.failures]
            if r.error:
                lines.append(f"    error: {r.error}")
        lines.append("all suites passed" if self.passed else "self-test FAILED")
        return lines


class Recorder:
    def __init__(self):
        self.checks = 0
        self.failures: List[str] = []

    def check(self, condition: bool, message: str):
        self.checks += 1
        if not condition and len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(message)


def _random_rational(rng: random.Random, bound: int = 10 ** 4) -> Fraction:
    return Fraction(rng.choice([-1, 1]) * rng.randint(1, bound), rng.randint(1, bound))


class SelfTest:
    """
    The acceptance suites, run on a thread pool. Results are collected in declaration order, so the report
    does not depend on scheduling. A quick run shrinks the exhaustive sweeps.
    """
    def __init__(self, config: Configuration, hilbert: HilbertFunction = hilbert_symbol, quick: bool = False):
        self.config = config
        self.hilbert = hilbert
        self.sizes = QUICK_SWEEPS if quick else FULL_SWEEPS
        self.table = S1TableFactory().get_table(config.s1_table)
        self.suites: List[Tuple[str, Callable[[Recorder, random.Random], None]]] = [
            ("hilbert_product_formula", self.hilbert_product_formula),
            ("conic_symbol_consistency", self.conic_symbol_consistency),
            ("galois_action", self.galois_action),
            ("reciprocal_involution", self.reciprocal_involution),
            ("characters_and_corestriction", self.characters_and_corestriction),
            ("involution_decomposition", self.involution_decomposition),
            ("heights_and_ulm_invariants", self.heights_and_ulm_invariants),
            ("brauer_constructions", self.brauer_constructions),
            ("tower_machinery", self.tower_machinery),
            ("end_to_end_verdicts", self.end_to_end_verdicts),
        ]

    @property
    def suite_names(self) -> List[str]:
        return [name for name, _ in self.suites]

    def run(self, names: Optional[Sequence[str]] = None) -> SelfTestReport:
        selected = [(i, name, suite) for i, (name, suite) in enumerate(self.suites) if names is None or name in names]
        unknown = set(names or []) - set(self.suite_names)
        if unknown:
            raise ValueError(f"unknown self-test suites {sorted(unknown)}")
        workers = self.config.selftest_workers
        with ThreadPoolExecutor(workers, thread_name_prefix=f"selftest_{workers}_threadpool") as executor:
            futures = [executor.submit(self._run_suite, i, name, suite) for i, name, suite in selected]
            report = SelfTestReport([future.result() for future in futures])
        logging.info(f"self-test finished: {sum(r.passed for r in report.results)} of {len(report.results)} "
                     f"suites passed")
        return report

    def _run_suite(self, index: int, name: str, suite: Callable[[Recorder, random.Random], None]) -> SuiteResult:
        recorder = Recorder()
        start = time.time()
        try:
            suite(recorder, random.Random(self.config.random_seed + index))
        except Exception as e:
            logging.exception(f"self-test suite {name} raised")
            return SuiteResult(name, False, recorder.checks, recorder.failures, error=f"{type(e).__name__}: {e}")
        passed = not recorder.failures
        logging.info(f"self-test suite {name}: {'passed' if passed else 'FAILED'} {recorder.checks} checks in "
                     f"{time.time() - start:.1f}s")
        return SuiteResult(name, passed, recorder.checks, recorder.failures)

    def hilbert_product_formula(self, rec: Recorder, rng: random.Random):
        for _ in range(2 * self.config.selftest_samples):
            a, b = _random_rational(rng), _random_rational(rng)
            product = 1
            for v in relevant_places(a, b):
                product *= self.hilbert(a, b, v)
            rec.check(product == 1, f"product formula fails for ({a}, {b})")
        bound = self.sizes.hilbert_value_bound
        values = [x for x in range(-bound, bound + 1) if x]
        for p in primerange(2, self.sizes.hilbert_prime_bound + 1):
            for a, b in itertools.product(values, values):
                rec.check(locally_soluble_bruteforce(a, b, p) == (self.hilbert(a, b, PlaceQ(p)) == 1),
                          f"({a}, {b})_{p} disagrees with local solubility")

    def conic_symbol_consistency(self, rec: Recorder, rng: random.Random):
        bound = self.sizes.conic_value_bound
        values = [x for x in range(-bound, bound + 1) if x and is_squarefree(x)]
        for c, d in itertools.product(values, values):
            splitting = quaternion_splits(c, d)
            rec.check(len(splitting.witnesses) % 2 == 0, f"odd witness set for ({c}, {d})")
            rec.check(splitting.splits or bool(splitting.witnesses), f"nonsplit ({c}, {d}) without witnesses")
            point = conic_point_search(c, d, self.sizes.conic_height_bound, self.config.conic_sweep_bound)
            rec.check(splitting.splits == (point is not None),
                      f"({c}, {d}) {'splits' if splitting.splits else 'does not split'} but the search gave {point}")
            if point is not None:
                x, y = point
                rec.check(c * x * x + d * y * y == 1, f"bad point {point} for ({c}, {d})")

    def galois_action(self, rec: Recorder, rng: random.Random):
        for _ in range(self.config.selftest_samples):
            b = random_brauer_elem(rng, 2, size=4, divisible=rng.random() < 0.5)
            c = random_brauer_elem(rng, 2, size=3)
            rec.check(galois_act(galois_act(b)) == b, f"sigma is not an involution on {b}")
            rec.check(galois_act(b + c) == galois_act(b) + galois_act(c), f"sigma is not additive on {b}, {c}")
            out = one_minus_sigma(b)
            rec.check(galois_act(out) == -out, f"(1-sigma){b} is not sigma-negated")
            rec.check(all(p.is_paired for p in out.support), f"(1-sigma){b} lives off the paired places")
            rec.check(not sum((v for _, v in out.invariants), Dyadic()), f"(1-sigma){b} does not sum to zero")

    def reciprocal_involution(self, rec: Recorder, rng: random.Random):
        for _ in range(self.config.selftest_samples):
            c = rng.choice(CONIC_PARAMETERS)
            p = random_irred_poly(rng, 2, rng.choice((1, 2)))
            tilde = tilde_poly(p, c)
            rec.check(tilde_poly(tilde, c) == p, f"p -> p~ is not an involution on {p} for c = {c}")
            # sigma(p) vanishes at c/a~ for a~ the class of u in the residue field of p~
            rec.check(reciprocal_image(p.poly, c, tilde).is_zero(),
                      f"{p}~ = {tilde} does not have the roots c/sigma(a) of {p}")
            if p.degree == 1:
                root = -p.poly.coefficient(0).conj()
                rec.check(QuadPoly.linear(c / root) == tilde.poly, f"{p}~ = {tilde} is not u - c/{root}")
            factors = {random_irred_poly(rng, 2, rng.choice((1, 2))): rng.randint(-2, 2) for _ in range(2)}
            unit = QuadElem(rng.randint(1, 9), rng.randint(-9, 9), 2)
            x = FactoredRF.of(unit, 2, rng.randint(-3, 3), factors)
            rec.check(s_action_factored(s_action_factored(x, c), c) == x, f"s is not an involution on {x}")

    def characters_and_corestriction(self, rec: Recorder, rng: random.Random):
        for _ in range(self.config.selftest_samples):
            c = rng.choice(CONIC_PARAMETERS)
            p = random_self_tilde_poly(rng, c)
            chi = Char2P(p, random_residue(rng, p))
            rec.check(cor_identity_check(chi, c), f"Cor identity fails for {chi}, c = {c}")
            rec.check(s_pp_star(s_pp_star(chi, c), c) == chi, f"sigma~ is not an involution on {chi}, c = {c}")
            other = random_char2p(rng)
            rec.check(cor_identity_check(other, c), f"Cor identity fails for {other}, c = {c}")
            x = fixed_norm(random_brlu_elem(rng), c, self.table)
            report = check_fixed_conditions(x, c, self.table)
            rec.check(report.all_passed, f"x + s*(x) = {x} violates the fixed conditions: {report}")
            rec.check(apply_s_star(x, c, self.table) == x, f"x + s*(x) = {x} is not s*-fixed")

    def involution_decomposition(self, rec: Recorder, rng: random.Random):
        for _ in range(self.sizes.involution_instances):
            fixed, negated, pairs = rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 1)
            if fixed + negated + pairs == 0:
                fixed = 1
            m = random_involution(rng, fixed, negated, pairs)
            decomposition = inp_decompose(len(m), m, depth=self.config.tower_depth)
            ranks = (len(decomposition.fixed_basis), len(decomposition.neg_basis), len(decomposition.pair_basis))
            rec.check(ranks == (fixed, negated, pairs), f"ranks {ranks} for {m}, expected {(fixed, negated, pairs)}")
            rec.check(check_action_laws(decomposition), f"the action laws fail for {m}")
            rec.check(check_spans_torsion(decomposition, SPAN_CHECK_EXPONENT, samples=50, seed=rng.randrange(2 ** 16)),
                      f"the towers of {m} do not span the 2^{SPAN_CHECK_EXPONENT}-torsion")

    def heights_and_ulm_invariants(self, rec: Recorder, rng: random.Random):
        truncation = self.config.truncation_level
        for size, exponent in self.sizes.torsion_exponents:
            for summands in itertools.combinations_with_replacement(SELFTEST_SUMMANDS, size):
                g = GroupDescriptor(summands)
                for level in ULM_LEVELS:
                    oracle = sum(ulm_oracle(s, level, truncation) for s in summands)
                    rec.check(ulm_invariant(g, level) == oracle, f"U({level}) of {g} disagrees with truncation")
                for x in torsion_elements(g, exponent):
                    rec.check(height(x) == height_oracle(x, truncation), f"height of {x} in {g} disagrees")

    def brauer_constructions(self, rec: Recorder, rng: random.Random):
        for _ in range(self.config.selftest_samples):
            beta = random_brauer_elem(rng, 2, size=5)
            i = rng.randrange(5)
            difference = one_minus_sigma(beta)
            z = {p: difference.invariant(p).divide(i + 1) for p in difference.support
                 if p.kind == SplittingKind.SPLIT and p.index == 0}
            beta_i = construct_beta_i(beta, z, i, universe_size=self.config.balancing_universe_size)
            rec.check((2 ** i) * beta_i == beta, f"2^{i} beta_{i} != beta for {beta}")

            gamma_prime = random_negated_elem(rng)
            gamma = construct_gamma(gamma_prime, universe_size=self.config.balancing_universe_size)
            rec.check(one_minus_sigma(gamma) == gamma_prime, f"(1-sigma) gamma != {gamma_prime}")
            rec.check(gamma.order() <= gamma_prime.order(), f"gamma for {gamma_prime} has a larger order")
            first, second = balancing_candidates(2, 2)[:2]
            balanced = [construct_gamma(gamma_prime, q) for q in (first, second)]
            difference = balanced[0] - balanced[1]
            rec.check(galois_act(difference) == difference and set(difference.support) <= {first, second},
                      f"the gammas for {gamma_prime} balanced at {first} and {second} differ off a fixed class")
            rec.check(all(not sum((v for _, v in g.invariants), Dyadic()) for g in balanced),
                      f"a gamma for {gamma_prime} violates reciprocity")
            gamma, beta = construct_lifted_beta(gamma_prime, universe_size=self.config.balancing_universe_size)
            rec.check(one_minus_sigma(beta) == 2 * gamma_prime, f"(1-sigma) 2 gamma != 2 {gamma_prime}")

    def tower_machinery(self, rec: Recorder, rng: random.Random):
        depth = self.config.tower_depth
        source = parse_descriptor("P+P | swap(0,1)")
        targets = parse_descriptor("P+P+P+P | fixed,neg,swap(2,3)")
        killing = QuotientModel.parse("C1+P", "P", ["kill:0", "identity:1->0"])
        reducing = QuotientModel.parse("C2+P", "C1+P", ["reduce:0->0", "double:1->1"])
        for _ in range(self.config.selftest_samples // 4 + 1):
            fixed_row = [rng.randint(-5, 5) for _ in range(2)]
            pair_row = [rng.randint(-5, 5) for _ in range(2)]
            corestriction = [fixed_row, [0, 0], pair_row, list(pair_row)]
            numerators = [rng.randrange(64), rng.randrange(64)]
            source_tower = Tower(source, generator=lambda i, v=numerators: pruefer_vector(
                source, [Fraction(n, 2 ** (i + 1)) for n in v]))
            tower = build_fixed_tower(corestriction, source_tower, targets, depth)
            rec.check(verify_tower(tower, depth), f"the fixed tower for {corestriction} is not divisible")
            for i in range(depth + 1):
                chi_u = GroupElem(targets, tower[i].coords[:targets.rank])
                cor = [sum(m * v.value for m, v in zip(row, source_tower[i].coords)) for row in corestriction]
                rec.check(chi_u + apply_action(chi_u) == pruefer_vector(targets, [-v for v in cor]),
                          f"(1+sigma) chi_u^({i}) != -Cor chi^({i}) for {corestriction}")

            # the reduced part of alpha must map to zero for phi(alpha) to be divisible
            alphas = [GroupElem(killing.domain, (rng.randrange(2), Dyadic.of(rng.randrange(64), 64))),
                      GroupElem(reducing.domain, (2 * rng.randrange(2), Dyadic.of(rng.randrange(64), 64)))]
            for model, alpha in zip((killing, reducing), alphas):
                tower_down = divided_tower(model.apply(alpha))
                least = lift_tower(model, alpha, tower_down, depth)
                alternate = lift_tower(model, alpha, tower_down, depth, PreimagePolicy.ALTERNATE)
                rec.check(least.prefix(depth + 1) == alternate.prefix(depth + 1),
                          f"the lift over {alpha} depends on the preimages chosen")
                rec.check(verify_tower(least, depth), f"the lift over {alpha} is not divisible")

    def end_to_end_verdicts(self, rec: Recorder, rng: random.Random):
        expected = [((3, 2), VerdictStatus.ISOMORPHIC_TO_BR_QT, ["2", "3"]),
                    ((1, 2), VerdictStatus.RATIONAL_CONIC, []),
                    ((3, 5), VerdictStatus.OUT_OF_SCOPE, ["3", "5"])]
        for (c, d), status, witnesses in expected:
            verdict = check_pair(c, d, self.config.conic_search_bound, self.config.conic_sweep_bound)
            rec.check(verdict.status == status, f"({c}, {d}) gave {verdict.status.value}, expected {status.value}")
            rec.check(verdict.witnesses == witnesses, f"({c}, {d}) has witnesses {verdict.witnesses}")
            replayed = replay(ujson.loads(certificate_to_json(verdict.certificate)))
            rec.check(replayed.status == status, f"the certificate of ({c}, {d}) does not replay")
        rec.check(w_membership(FIRST_LAYER_GENERATOR) == WClass.CYCLIC4,
                  f"l(sqrt({FIRST_LAYER_GENERATOR})) is not cyclic of order 4 over Q")
