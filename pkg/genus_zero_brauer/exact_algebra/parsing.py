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

import re

from typing import Optional


class ParseException(Exception):
    def __init__(self, message, text: str = "", position: Optional[int] = None):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(self.describe())

    def describe(self) -> str:
        if self.position is None:
            return self.message
        return f"{self.message} at position {self.position}: {self.text[:self.position]}<HERE>" \
               f"{self.text[self.position:]}"


class Scanner:
    """
    A minimal cursor over an input string, shared by the text grammars of the package (rationals, quadratic
    elements, polynomials, group descriptors, Brauer elements and characters). Whitespace between tokens is
    skipped; every failure is reported as a ParseException carrying the current position.
    """
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_spaces(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_spaces()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip_spaces()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            self.fail(f"expected '{token}'")

    def match(self, pattern: str) -> Optional[str]:
        self.skip_spaces()
        m = re.compile(pattern).match(self.text, self.pos)
        if m is None:
            return None
        self.pos = m.end()
        return m.group(0)

    def integer(self) -> int:
        token = self.match(r"[+-]?\d+")
        if token is None:
            self.fail("expected an integer")
        return int(token)

    def expect_end(self):
        if not self.at_end():
            self.fail("unexpected trailing input")

    def fail(self, message):
        raise ParseException(message, self.text, self.pos)
