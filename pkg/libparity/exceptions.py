# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exceptions for libparity"""

import logging

# Local imports
from . import types

logging.getLogger(__name__).addHandler(logging.NullHandler())


class ParityError(Exception):
    """Base exception for libparity"""

    STATUS = types.ExitStatus.INPUT_ERROR

    def __init__(self, message: str, stats: None | dict[str, any] = None):
        self._message = message
        self._stats = stats
        super().__init__(message)

    @property
    def message(self) -> str:
        """Message property"""
        return self._message

    @property
    def stats(self) -> dict[str, any]:
        """Statistics to report alongside the error if set"""
        return {} if self._stats is None else self._stats

    @property
    def status(self) -> types.ExitStatus:
        """Process exit status"""
        return self.STATUS


class InputError(ParityError):
    """Raised when user supplied input is unusable"""

    STATUS = types.ExitStatus.INPUT_ERROR


class ParseError(InputError):
    """Syntax error in a game or tree file.

    Parameters:
        message: What went wrong.
        line: 1-based line number.
        column: 1-based column number.

    """

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


class GameError(InputError):
    """Semantic error in a game: dangling successors, empty edges etc."""


class TreeError(InputError):
    """Raised for trees that can not be coded"""


class UsageError(InputError):
    """Command line usage error"""


class CounterError(ParityError):
    """Counter outside its space or enumeration guard exceeded"""


class ResourceLimitError(ParityError):
    """A configured size limit was exceeded"""


class MismatchError(ParityError):
    """Two solvers disagree"""

    STATUS = types.ExitStatus.MISMATCH
