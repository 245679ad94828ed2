#!/usr/bin/env python3
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

"""Generate random parity games."""

import sys

# Local imports
import libparity


class Command(libparity.command.Command):
    """Write a seeded random game in PGSolver format."""

    NAME = "parity gen"
    DESCRIPTION = """
Generate a pseudo random parity game.  The same options and seed always
produce the same file.
"""
    EPILOG = libparity.doc.GAME_DOC + libparity.doc.EXIT_DOC

    def cli(self):
        """Add command line arguments specific to the command."""
        self.parser.add_argument(
            "--vertices",
            dest="vertices",
            metavar="<n>",
            type=libparity.utils.positive,
            required=True,
            help="Number of vertices",
        )
        self.parser.add_argument(
            "--max-priority",
            dest="max_priority",
            metavar="<d>",
            type=libparity.utils.non_negative,
            required=True,
            help="Largest priority",
        )
        self.parser.add_argument(
            "--min-priority",
            dest="min_priority",
            metavar="<p>",
            type=libparity.utils.non_negative,
            default=1,
            help="Least priority [Default: %(default)s]",
        )
        self.parser.add_argument(
            "--min-degree",
            dest="min_degree",
            metavar="<a>",
            type=libparity.utils.positive,
            default=1,
            help="Least out-degree [Default: %(default)s]",
        )
        self.parser.add_argument(
            "--max-degree",
            dest="max_degree",
            metavar="<b>",
            type=libparity.utils.positive,
            default=3,
            help="Largest out-degree [Default: %(default)s]",
        )
        self.parser.add_argument(
            "--even-bias",
            dest="even_bias",
            metavar="<fraction>",
            type=float,
            default=0.5,
            help="Share of Even owned vertices [Default: %(default)s]",
        )
        self.parser.add_argument(
            "--seed",
            dest="seed",
            metavar="<s>",
            type=int,
            default=0,
            help="Random seed [Default: %(default)s]",
        )
        self.parser.add_argument(
            "--out",
            dest="out",
            metavar="<file>",
            default="-",
            help="Output file, - for stdout [Default: %(default)s]",
        )

    def execute(self):
        """Generate the game and write it out."""
        config = libparity.oracles.GeneratorConfig(
            vertices=self.opts.vertices,
            max_priority=self.opts.max_priority,
            min_priority=self.opts.min_priority,
            min_degree=self.opts.min_degree,
            max_degree=self.opts.max_degree,
            even_bias=self.opts.even_bias,
            seed=self.opts.seed,
        )
        text = libparity.pgsolver.write_game(
            libparity.oracles.generate(config)
        )
        if self.opts.out == "-":
            self.write(text)
            return
        try:
            with open(self.opts.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as err:
            raise libparity.exceptions.InputError(
                f"Unable to write {self.opts.out}: {err}"
            ) from err


def run():
    """Entry point for console scripts"""
    sys.exit(Command().main())


if __name__ == "__main__":
    run()
