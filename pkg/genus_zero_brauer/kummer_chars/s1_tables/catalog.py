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

from genus_zero_brauer.kummer_chars.s1_tables.s1_table_api import S1TableType
from genus_zero_brauer.kummer_chars.s1_tables.tables import HilbertPairingTable, ZeroTable


class S1TablesCatalog:
    ZERO = S1TableType(ZeroTable)
    HILBERT_PAIRING = S1TableType(HilbertPairingTable)
