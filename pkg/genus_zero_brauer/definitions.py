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

import os

DEFAULT_TRUNCATION = 24
TRUNCATION_ENV_VAR = "GZB_TRUNCATION"
# truncated groups distort heights this close to the cut
TRUNCATION_MARGIN = 2
MIN_TRUNCATION = 4

DEFAULT_TOWER_DEPTH = 16
DEFAULT_CONIC_SEARCH_BOUND = 1000
DEFAULT_CONIC_SWEEP_BOUND = 12
DEFAULT_BALANCING_UNIVERSE_SIZE = 20
DEFAULT_ULM_CUTOFF = 6

INPUT_CAP = 2 ** 63
CERTIFICATE_VERSION = 1

PROJECT_ROOT = os.path.abspath(os.path.join(__file__, os.pardir))
CONFIG_PATH = os.path.join(PROJECT_ROOT, "config.json")
CONFIG_FOR_TESTS_PATH = os.path.join(PROJECT_ROOT, "config_for_tests.json")
