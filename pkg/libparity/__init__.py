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

"""Parity game solving with succinct progress measures."""

from . import classic
from . import command
from . import counters
from . import doc
from . import exceptions
from . import game
from . import lifting
from . import oracles
from . import pgsolver
from . import separator
from . import trees
from . import types
from . import utils

__all__ = [
    "classic",
    "command",
    "counters",
    "doc",
    "exceptions",
    "game",
    "lifting",
    "oracles",
    "pgsolver",
    "separator",
    "trees",
    "types",
    "utils",
]

__version__ = "0.1.0"
