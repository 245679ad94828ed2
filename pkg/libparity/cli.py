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

"""The ``parity`` command line tool."""

import sys
import typing

# Local imports
from . import __version__
from .commands import bench
from .commands import codetree
from .commands import gen
from .commands import separator
from .commands import solve

COMMANDS = {
    "solve": solve.Command,
    "gen": gen.Command,
    "separator": separator.Command,
    "codetree": codetree.Command,
    "bench": bench.Command,
}

USAGE = f"""usage: parity <command> [options]

commands:
  solve      solve a game file
  gen        generate a random game
  separator  solve through the separating automaton, run lassos
  codetree   code an ordered tree succinctly
  bench      benchmark the lifting solver

parity <command> --help describes the options of a command.
libparity {__version__}
"""


def cli(
    argv: None | typing.Sequence[str] = None,
    stdout: None | typing.TextIO = None,
    stderr: None | typing.TextIO = None,
) -> int:
    """Dispatch to a subcommand and return its exit status"""
    argv = list(sys.argv[1:] if argv is None else argv)
    stderr = sys.stderr if stderr is None else stderr
    if not argv:
        stderr.write(USAGE)
        return 1
    if argv[0] in ("-h", "--help"):
        (stdout or sys.stdout).write(USAGE)
        return 0
    if argv[0] == "--version":
        (stdout or sys.stdout).write(f"libparity {__version__}\n")
        return 0
    command = COMMANDS.get(argv[0])
    if command is None:
        stderr.write(f"parity: unknown command {argv[0]!r}\n{USAGE}")
        return 1
    return command(stdout=stdout, stderr=stderr).main(argv[1:])


def run():
    """Entry point for console scripts"""
    sys.exit(cli())


if __name__ == "__main__":
    run()
