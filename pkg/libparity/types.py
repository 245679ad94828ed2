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

"""Data types used by libparity"""

import enum


class ExitStatus(enum.IntEnum):
    """Process exit statuses for the command line tools."""

    OK = 0
    INPUT_ERROR = 1
    MISMATCH = 2


class Owner(enum.IntEnum):
    """Vertex owners, numbered as in the PGSolver format."""

    EVEN = 0
    ODD = 1

    @property
    def opponent(self) -> "Owner":
        """The other player"""
        return Owner(1 - self.value)

    @classmethod
    def of_priority(cls, priority: int) -> "Owner":
        """Player favoured by a priority"""
        return cls(priority % 2)


class Rank(enum.IntEnum):
    """Position of a counter relative to the sentinels.

    Comparison of counters starts with the rank, so ``BOTTOM`` is below and
    ``TOP`` above every ordinary counter.
    """

    BOTTOM = 0
    COUNTER = 1
    TOP = 2


class Mode(enum.Enum):
    """Which sentinel makes a pair progressive at an odd priority."""

    LIFTING = "lifting"
    SEPARATOR = "separator"


class Policy(enum.Enum):
    """Work-list policies for the lifting solver."""

    FIFO = "fifo"
    RANDOM = "random"


class Verdict(enum.Enum):
    """Outcome of running the separating automaton on a lasso."""

    ACCEPT = "accept"
    REJECT = "reject"


class Ordering(enum.IntEnum):
    """Result of a three way comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, left, right) -> "Ordering":
        """Compare two mutually ordered values"""
        if left < right:
            return cls.LESS
        if right < left:
            return cls.GREATER
        return cls.EQUAL
