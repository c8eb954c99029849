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
import os
import sys

from argparse import ArgumentParser
from logging.handlers import RotatingFileHandler

import ujson

from genus_zero_brauer.cli_harness.certificates import CertificateReplayException, certificate_to_json, \
    read_certificate, replay, write_certificate
from genus_zero_brauer.cli_harness.reports import format_hilbert_report, format_inp_report, format_ulm_report, \
    hilbert_report, inp_report, parse_matrix, ulm_report
from genus_zero_brauer.cli_harness.selftest import SelfTest
from genus_zero_brauer.cli_harness.verdicts import check_pair
from genus_zero_brauer.config import Configuration, ConfigurationException, load_config
from genus_zero_brauer.definitions import CONFIG_PATH
from genus_zero_brauer.exact_algebra.parsing import ParseException
from genus_zero_brauer.exact_algebra.rationals import InputTooLargeException, parse_rational
from genus_zero_brauer.exact_algebra.symbols import parse_place_q
from genus_zero_brauer.torsion_core.descriptors import DescriptorMismatchException, NotAnInvolutionException, \
    parse_descriptor
from genus_zero_brauer.torsion_core.towers import InvalidTowerException

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

LOG_FORMAT = '%(asctime)s %(levelname)-8s [%(filename)s:%(lineno)d] %(message)s'


def add_file_logger(output_path):
    """
    add a rotating file logger. Files will be written to <output_path>/logs/
    """
    log_dir = os.path.join(output_path, "logs")
    os.makedirs(log_dir, exist_ok=True)
    handler = RotatingFileHandler(os.path.join(log_dir, "gzb.log"), maxBytes=(1048576 * 5), backupCount=7)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logging.getLogger().addHandler(handler)


def _emit(lines):
    for line in lines:
        print(line)


def run_check(args, config: Configuration) -> int:
    bound = config.conic_search_bound if args.conic_bound is None else args.conic_bound
    verdict = check_pair(parse_rational(args.c), parse_rational(args.d), conic_bound=bound,
                         sweep_bound=config.conic_sweep_bound)
    if args.out:
        write_certificate(verdict, args.out)
    if args.json:
        print(certificate_to_json(verdict.certificate))
    else:
        _emit([f"verdict: {verdict.status.value}",
               f"witnesses: {', '.join(verdict.witnesses) if verdict.witnesses else 'none'}",
               verdict.explanation])
    return EXIT_OK


def run_ulm(args, config: Configuration) -> int:
    cutoff = config.ulm_cutoff if args.cutoff is None else args.cutoff
    report = ulm_report(parse_descriptor(args.group), cutoff, args.verify, config.truncation_level)
    if args.json:
        print(ujson.dumps(report, indent=2, ensure_ascii=False))
    else:
        _emit(format_ulm_report(report))
    return EXIT_OK if report.get("verification", {}).get("passed", True) else EXIT_FAILURE


def run_inp(args, config: Configuration) -> int:
    depth = config.tower_depth if args.depth is None else args.depth
    report = inp_report(parse_matrix(args.matrix), depth, samples=config.selftest_samples, seed=config.random_seed)
    if args.json:
        print(ujson.dumps(report, indent=2))
    else:
        _emit(format_inp_report(report))
    return EXIT_OK if report["verified"] else EXIT_FAILURE


def run_hilbert(args, config: Configuration) -> int:
    try:
        place = None if args.place is None else parse_place_q(args.place)
    except ValueError as e:
        raise ParseException(str(e), args.place, None) from e
    report = hilbert_report(parse_rational(args.a), parse_rational(args.b), place)
    if args.json:
        print(ujson.dumps(report, indent=2))
    else:
        _emit(format_hilbert_report(report))
    return EXIT_OK


def run_selftest(args, config: Configuration) -> int:
    report = SelfTest(config, quick=args.quick).run(args.suite)
    if args.json:
        print(report.to_json())
    else:
        _emit(report.summary_lines())
    return EXIT_OK if report.passed else EXIT_FAILURE


def run_replay(args, config: Configuration) -> int:
    verdict = replay(read_certificate(args.certificate))
    print(f"replayed: {verdict.status.value}")
    return EXIT_OK


COMMANDS = {
    "check": run_check,
    "ulm": run_ulm,
    "inp": run_inp,
    "hilbert": run_hilbert,
    "selftest": run_selftest,
    "replay": run_replay,
}


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="gzb", description="Brauer groups of genus zero extensions of Q")
    parser.add_argument('--config_path', type=str, help=f'Config file path. Default is {CONFIG_PATH}',
                        default=CONFIG_PATH)
    parser.add_argument('--log_dir', type=str, help='write a rotating log file under <log_dir>/logs/',
                        default=None)
    parser.add_argument('--quiet', action='store_true', help='log warnings and errors only')
    subparsers = parser.add_subparsers(dest="command", required=True)

    check = subparsers.add_parser("check", help="decide Br(E) for E the function field of 1 = c*x^2 + d*y^2")
    check.add_argument('--c', type=str, required=True, help='rational c, e.g. 3 or -7/2')
    check.add_argument('--d', type=str, required=True, help='rational d')
    check.add_argument('--conic-bound', dest="conic_bound", type=int, default=None,
                       help='height bound of the conic point search. Default from the config')
    check.add_argument('--out', type=str, default=None, help='write the certificate to this file')
    check.add_argument('--json', action='store_true', help='print the certificate')

    ulm = subparsers.add_parser("ulm", help="Ulm invariants of a group descriptor")
    ulm.add_argument('--group', type=str, required=True, help='descriptor, e.g. "C1+C3+P"')
    ulm.add_argument('--cutoff', type=int, default=None, help='number of finite and transfinite levels')
    ulm.add_argument('--verify', action='store_true', help='recompute every invariant by truncation')
    ulm.add_argument('--json', action='store_true')

    inp = subparsers.add_parser("inp", help="I + N + P decomposition of an involution of (Q_2/Z_2)^r")
    inp.add_argument('--matrix', type=str, required=True, help="integer matrix as JSON, e.g. '[[0,1],[1,0]]'")
    inp.add_argument('--depth', type=int, default=None, help='tower depth of the verification')
    inp.add_argument('--json', action='store_true')

    hilbert = subparsers.add_parser("hilbert", help="Hilbert symbols (a, b)_v")
    hilbert.add_argument('--a', type=str, required=True)
    hilbert.add_argument('--b', type=str, required=True)
    hilbert.add_argument('--place', type=str, default=None, help='a prime or inf. Default: every relevant place')
    hilbert.add_argument('--json', action='store_true')

    selftest = subparsers.add_parser("selftest", help="run the acceptance suites")
    selftest.add_argument('--suite', action='append', default=None, help='run only this suite (repeatable)')
    selftest.add_argument('--json', action='store_true', help='machine readable report')
    selftest.add_argument('--quick', action='store_true', help='shrink the exhaustive sweeps')

    replay_parser = subparsers.add_parser("replay", help="re-verify a stored certificate")
    replay_parser.add_argument('certificate', type=str)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO, format=LOG_FORMAT)
    if args.log_dir:
        add_file_logger(args.log_dir)
    try:
        config = load_config(args.config_path)
        logging.info(f"running gzb {args.command} with config file {args.config_path}")
        return COMMANDS[args.command](args, config)
    except (ParseException, InputTooLargeException, ConfigurationException, DescriptorMismatchException,
            ValueError, OSError) as e:
        logging.error(f"gzb {args.command}: {e}")
        return EXIT_USAGE
    except (NotAnInvolutionException, CertificateReplayException, InvalidTowerException) as e:
        logging.error(f"gzb {args.command}: {e}")
        return EXIT_FAILURE


if __name__ == '__main__':
    sys.exit(main())
