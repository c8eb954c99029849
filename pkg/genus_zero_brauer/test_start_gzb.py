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

import contextlib
import io
import os
import tempfile
import unittest

import ujson

from genus_zero_brauer.definitions import CONFIG_FOR_TESTS_PATH
from genus_zero_brauer.start_gzb import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main


class TestStartGzb(unittest.TestCase):
    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.temp_dir.cleanup()

    def run_main(self, *args):
        out = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
            code = main(["--config_path", CONFIG_FOR_TESTS_PATH, "--quiet", *args])
        return code, out.getvalue()

    def test_check(self):
        code, out = self.run_main("check", "--c", "3", "--d", "2")
        self.assertEqual(EXIT_OK, code)
        self.assertIn("verdict: IsomorphicToBrQt", out)
        self.assertIn("witnesses: 2, 3", out)
        code, out = self.run_main("check", "--c=-7/2", "--d", "5", "--json")
        self.assertEqual(EXIT_OK, code)
        self.assertEqual({"c": "-7/2", "d": "5"}, ujson.loads(out)["inputs"])

    def test_check_and_replay(self):
        path = os.path.join(self.temp_dir.name, "certificate.json")
        self.assertEqual(EXIT_OK, self.run_main("check", "--c", "3", "--d", "5", "--out", path)[0])
        code, out = self.run_main("replay", path)
        self.assertEqual(EXIT_OK, code)
        self.assertIn("OutOfScope", out)
        with open(path) as f:
            certificate = ujson.load(f)
        certificate["verdict"]["status"] = "RationalConic"
        with open(path, "w") as f:
            ujson.dump(certificate, f)
        self.assertEqual(EXIT_FAILURE, self.run_main("replay", path)[0])
        self.assertEqual(EXIT_USAGE, self.run_main("replay", os.path.join(self.temp_dir.name, "missing.json"))[0])

    def test_usage_errors(self):
        for args in [("check", "--c", "x", "--d", "2"), ("check", "--c", "0", "--d", "2"),
                     ("check", "--c", str(2 ** 64), "--d", "2"), ("check", "--c", "3"), ("ulm", "--group", "Q7"),
                     ("hilbert", "--a", "3", "--b", "2", "--place", "4"), ("inp", "--matrix", "[[1,"),
                     ("selftest", "--suite", "no_such_suite"), ("frobnicate",)]:
            with self.subTest(args=args):
                self.assertEqual(EXIT_USAGE, self.run_main(*args)[0])
        self.assertEqual(EXIT_USAGE, main(["--config_path", os.path.join(self.temp_dir.name, "none.json"), "check",
                                           "--c", "3", "--d", "2"]))

    def test_reports(self):
        code, out = self.run_main("ulm", "--group", "C1+C3+P", "--verify")
        self.assertEqual(EXIT_OK, code)
        self.assertIn("U(2) = 1", out)
        self.assertIn("divisible rank = 1", out)
        code, out = self.run_main("inp", "--matrix", "[[0,1],[1,0]]", "--depth", "6")
        self.assertEqual(EXIT_OK, code)
        self.assertTrue(out.startswith("I-rank 0, N-rank 0, P-pairs 1"))
        self.assertEqual(EXIT_FAILURE, self.run_main("inp", "--matrix", "[[1,1],[0,1]]")[0])
        code, out = self.run_main("hilbert", "--a", "3", "--b", "2")
        self.assertEqual(EXIT_OK, code)
        self.assertIn("product = +1", out)
        code, out = self.run_main("hilbert", "--a", "3", "--b", "2", "--place", "3", "--json")
        self.assertEqual([{"place": "3", "symbol": -1}], ujson.loads(out)["symbols"])

    def test_selftest(self):
        code, out = self.run_main("selftest", "--quick", "--suite", "hilbert_product_formula", "--json")
        self.assertEqual(EXIT_OK, code)
        self.assertTrue(ujson.loads(out)["passed"])


if __name__ == "__main__":
    unittest.main()
