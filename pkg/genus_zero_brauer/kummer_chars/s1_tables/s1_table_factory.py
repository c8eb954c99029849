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

from genus_zero_brauer.kummer_chars.s1_tables.s1_table_api import S1Table, S1TableType


class S1TableFactory:
    def __init__(self):
        self.tables = {}

    def get_table(self, table_type: S1TableType) -> S1Table:
        if table_type not in self.tables:
            try:
                self.tables[table_type] = table_type.cls()
            except Exception:
                logging.exception(f"Could not create the s1 table {table_type.name}")
                raise
        return self.tables[table_type]
