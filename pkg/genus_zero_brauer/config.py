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

from dataclasses import dataclass

import dacite
import ujson

from genus_zero_brauer.definitions import DEFAULT_BALANCING_UNIVERSE_SIZE, DEFAULT_CONIC_SEARCH_BOUND, \
    DEFAULT_CONIC_SWEEP_BOUND, DEFAULT_TOWER_DEPTH, DEFAULT_TRUNCATION, DEFAULT_ULM_CUTOFF, MIN_TRUNCATION, \
    TRUNCATION_ENV_VAR
from genus_zero_brauer.kummer_chars.s1_tables.catalog import S1TablesCatalog
from genus_zero_brauer.kummer_chars.s1_tables.s1_table_api import S1TableType


class ConfigurationException(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(message)


@dataclass
class Configuration:
    s1_table: S1TableType
    truncation_level: int = DEFAULT_TRUNCATION
    tower_depth: int = DEFAULT_TOWER_DEPTH
    conic_search_bound: int = DEFAULT_CONIC_SEARCH_BOUND
    conic_sweep_bound: int = DEFAULT_CONIC_SWEEP_BOUND
    balancing_universe_size: int = DEFAULT_BALANCING_UNIVERSE_SIZE
    ulm_cutoff: int = DEFAULT_ULM_CUTOFF
    selftest_workers: int = 4
    selftest_samples: int = 100
    random_seed: int = 0


converters = {
    S1TableType: lambda x: getattr(S1TablesCatalog, x)
}


def apply_environment(config: Configuration) -> Configuration:
    raw = os.environ.get(TRUNCATION_ENV_VAR)
    if raw is None:
        return config
    try:
        level = int(raw)
    except ValueError as e:
        raise ConfigurationException(f"{TRUNCATION_ENV_VAR}='{raw}' is not an integer") from e
    if level < MIN_TRUNCATION:
        raise ConfigurationException(f"{TRUNCATION_ENV_VAR}={level} is below the minimum of {MIN_TRUNCATION}")
    logging.info(f"truncation level {level} taken from {TRUNCATION_ENV_VAR}")
    config.truncation_level = level
    return config


def load_config(config_path) -> Configuration:
    with open(config_path) as f:
        raw_cfg = ujson.load(f)

    try:
        config = dacite.from_dict(
            data_class=Configuration, data=raw_cfg,
            config=dacite.Config(type_hooks=converters),
        )
    except (dacite.DaciteError, AttributeError) as e:
        raise ConfigurationException(f"invalid configuration {config_path}: {e}") from e
    if config.truncation_level < MIN_TRUNCATION:
        raise ConfigurationException(f"truncation_level {config.truncation_level} is below {MIN_TRUNCATION}")
    return apply_environment(config)
