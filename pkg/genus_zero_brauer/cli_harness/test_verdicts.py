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

import copy
import os
import tempfile
import unittest

from fractions import Fraction

from genus_zero_brauer.cli_harness.certificates import CertificateReplayException, read_certificate, replay, \
    write_certificate
from genus_zero_brauer.cli_harness.verdicts import VerdictStatus, check_first_layer, check_pair
from genus_zero_brauer.exact_algebra.quadratic_field import QuadElem
from genus_zero_brauer.exact_algebra.rationals import InputTooLargeException
from genus_zero_brauer.kummer_chars.characters import WClass

CERTIFICATE_KEYS = ["version", "inputs", "square_class_normalization", "local_symbols", "conic_search", "w_check",
                    "restriction_to_l", "verdict"]


class TestCheckPair(unittest.TestCase):
    def test_isomorphic_to_br_qt(self):
        verdict = check_pair(3, 2)
        self.assertEqual(VerdictStatus.ISOMORPHIC_TO_BR_QT, verdict.status)
        self.assertEqual(["2", "3"], verdict.witnesses)
        certificate = verdict.certificate
        self.assertEqual(CERTIFICATE_KEYS, list(certificate.keys()))
        self.assertIsNone(certificate["conic_search"]["result"])
        self.assertEqual("Cyclic4", certificate["w_check"]["classification"])
        self.assertEqual("2", certificate["w_check"]["norm"])
        self.assertTrue(certificate["w_check"]["criterion"]["holds"])
        self.assertTrue(certificate["restriction_to_l"]["trivial"])
        self.assertEqual("IsomorphicToBrQt", certificate["verdict"]["status"])

    def test_rational_conic(self):
        verdict = check_pair(1, 2)
        self.assertEqual(VerdictStatus.RATIONAL_CONIC, verdict.status)
        self.assertEqual([], verdict.witnesses)
        self.assertIsNotNone(verdict.certificate["conic_search"]["result"])
        self.assertIsNone(verdict.certificate["w_check"])
        self.assertIsNone(verdict.certificate["restriction_to_l"])

    def test_out_of_scope(self):
        verdict = check_pair(3, 5)
        self.assertEqual(VerdictStatus.OUT_OF_SCOPE, verdict.status)
        self.assertEqual(["3", "5"], verdict.witnesses)
        self.assertIsNone(verdict.certificate["w_check"])
        self.assertEqual(CERTIFICATE_KEYS, list(verdict.certificate.keys()))

    def test_square_classes(self):
        verdict = check_pair(12, 8)
        self.assertEqual(VerdictStatus.ISOMORPHIC_TO_BR_QT, verdict.status)
        self.assertEqual({"c": 3, "d": 2}, verdict.certificate["square_class_normalization"])
        self.assertEqual({"c": "12", "d": "8"}, verdict.certificate["inputs"])
        self.assertEqual(VerdictStatus.ISOMORPHIC_TO_BR_QT, check_pair(Fraction(3, 4), Fraction(1, 2)).status)

    def test_split_pairs(self):
        for c, d in [(1, 1), (2, -1), (-1, 2), (5, 5), (Fraction(1, 9), 7)]:
            with self.subTest(c=c, d=d):
                verdict = check_pair(c, d)
                self.assertEqual(VerdictStatus.RATIONAL_CONIC, verdict.status)
                x, y = (Fraction(v) for v in verdict.certificate["conic_search"]["result"])
                self.assertEqual(1, Fraction(c) * x * x + Fraction(d) * y * y)

    def test_invalid_inputs(self):
        self.assertRaises(ValueError, check_pair, 0, 2)
        self.assertRaises(ValueError, check_pair, 3, 0)
        self.assertRaises(InputTooLargeException, check_pair, 2 ** 64, 2)
        self.assertRaises(InputTooLargeException, check_pair, 3, Fraction(1, 2 ** 64))


class TestFirstLayer(unittest.TestCase):
    def test_cyclotomic_layer(self):
        w_check = check_first_layer()
        self.assertEqual(WClass.CYCLIC4, w_check.classification)
        self.assertEqual(2, w_check.norm)
        self.assertTrue(w_check.passed)

    def test_other_generators(self):
        # sqrt(3) generates a biquadratic field
        w_check = check_first_layer(QuadElem(Fraction(3), Fraction(0), 2))
        self.assertEqual(WClass.KLEIN_W, w_check.classification)
        self.assertFalse(w_check.passed)
        self.assertFalse(check_first_layer(QuadElem(Fraction(1), Fraction(1), 2)).passed)


class TestCertificates(unittest.TestCase):
    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.temp_dir.cleanup()

    def test_write_read_replay(self):
        for c, d in [(3, 2), (1, 2), (3, 5), (Fraction(-7, 3), 18)]:
            with self.subTest(c=c, d=d):
                verdict = check_pair(c, d)
                path = os.path.join(self.temp_dir.name, "certificate.json")
                write_certificate(verdict, path)
                certificate = read_certificate(path)
                self.assertEqual(verdict.certificate, certificate)
                self.assertEqual(CERTIFICATE_KEYS, list(certificate.keys()))
                self.assertEqual(verdict.status, replay(certificate).status)

    def test_tampered_certificates(self):
        original = check_pair(3, 2).certificate

        def tampered(change):
            certificate = copy.deepcopy(original)
            change(certificate)
            return certificate

        def set_status(cert):
            cert["verdict"]["status"] = "RationalConic"

        def flip_symbol(cert):
            cert["local_symbols"][0]["symbol"] *= -1

        def drop_place(cert):
            cert["local_symbols"].pop()

        def fake_point(cert):
            cert["conic_search"]["result"] = ["1", "1"]

        def drop_w_check(cert):
            cert["w_check"] = None

        def wrong_norm(cert):
            cert["w_check"]["norm"] = "3"

        def wrong_witnesses(cert):
            cert["verdict"]["witnesses"] = ["3"]

        def wrong_class(cert):
            cert["square_class_normalization"]["c"] = 12

        def bad_input(cert):
            cert["inputs"]["c"] = "three"

        def missing_key(cert):
            del cert["conic_search"]

        def bad_version(cert):
            cert["version"] = 99

        for change in [set_status, flip_symbol, drop_place, fake_point, drop_w_check, wrong_norm, wrong_witnesses,
                       wrong_class, bad_input, missing_key, bad_version]:
            with self.subTest(change=change.__name__):
                self.assertRaises(CertificateReplayException, replay, tampered(change))
        self.assertEqual(VerdictStatus.ISOMORPHIC_TO_BR_QT, replay(original).status)

    def test_point_outside_bound(self):
        certificate = check_pair(1, 2).certificate
        certificate["conic_search"]["bound"] = 1
        certificate["conic_search"]["result"] = ["1/3", "2/3"]
        self.assertRaises(CertificateReplayException, replay, certificate)

    def test_unreadable_file(self):
        path = os.path.join(self.temp_dir.name, "broken.json")
        with open(path, "w") as f:
            f.write("{not json")
        self.assertRaises(CertificateReplayException, read_certificate, path)


if __name__ == "__main__":
    unittest.main()
