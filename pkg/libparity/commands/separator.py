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

"""Solve a game through the separating automaton."""

import sys

# Local imports
import libparity


class Command(libparity.command.Command):
    """Product safety game solving and lasso runs."""

    NAME = "parity separator"
    DESCRIPTION = """
Build the separating safety automaton of a game, solve the product safety
game and print the winning regions.  With **--lasso** the automaton is
run on one ultimately periodic word instead.
"""
    EPILOG = (
        libparity.doc.GAME_DOC
        + libparity.doc.LASSO_DOC
        + libparity.doc.EXIT_DOC
    )

    def cli(self):
        """Add command line arguments specific to the command."""
        self.parser.add_argument(
            "game",
            metavar="<file>",
            help="Game file in PGSolver format, - for stdin",
        )
        self.parser.add_argument(
            "--cross-check",
            dest="cross_check",
            default=False,
            action="store_true",
            help="Compare the product solution with the lifting solver",
        )
        self.parser.add_argument(
            "--lasso",
            dest="lasso",
            nargs=2,
            metavar=("PREFIX", "LOOP"),
            type=libparity.utils.Word,
            default=None,
            help="Run the automaton on PREFIX LOOP^w",
        )
        self.parser.add_argument(
            "--state-limit",
            dest="state_limit",
            metavar="<n>",
            type=libparity.utils.positive,
            default=libparity.separator.ProductOptions.state_limit,
            help="Largest product to build [Default: %(default)s]",
        )
        self.parser.add_argument(
            "--json",
            dest="as_json",
            default=False,
            action="store_true",
            help="Print the result as JSON",
        )

    @staticmethod
    def indices(
        game: libparity.game.ParityGame, word: libparity.utils.Word
    ) -> tuple[int, ...]:
        """Map file identifiers of a word to vertex indices"""
        position = {game.ident(index): index for index in range(game.n)}
        try:
            return tuple(position[ident] for ident in word)
        except KeyError as err:
            raise libparity.exceptions.InputError(
                f"Lasso uses unknown vertex {err.args[0]}"
            ) from None

    def lasso(self, game: libparity.game.ParityGame):
        """Run the automaton on the requested lasso"""
        prefix, loop = self.opts.lasso
        automaton = libparity.separator.build_separator(game)
        run = libparity.separator.run_on_lasso(
            automaton, self.indices(game, prefix), self.indices(game, loop)
        )
        self.write(f"verdict: {run.verdict.value}\n")
        step = "none" if run.rejection_step is None else run.rejection_step
        self.write(f"rejection_step: {step}\n")
        self.write(f"states: {run.distinct_states}\n")
        self.write(
            "trace: "
            + " ".join(libparity.counters.render(s) for s in run.states)
            + "\n"
        )

    def execute(self):
        """Solve through the product or run a lasso."""
        game = libparity.pgsolver.parse(
            libparity.utils.read_text(self.opts.game)
        )
        if self.opts.lasso is not None:
            self.lasso(game)
            return
        options = libparity.separator.ProductOptions(
            state_limit=self.opts.state_limit
        )
        result, product = libparity.separator.solve_product(game, options)
        self.add_stat("product_vertices", len(product))
        self.add_stat("reachable_states", product.states)
        if self.opts.cross_check:
            expected = libparity.lifting.solve(game)
            if expected.even_wins != result.even_wins:
                raise libparity.exceptions.MismatchError(
                    "Lifting solver disagrees: Even wins "
                    f"{sorted(game.ident(v) for v in expected.even_wins)}"
                )
            self.add_stat("cross_check", "lifting")
        document = libparity.pgsolver.ResultDocument.from_result(
            game, result, self.stats
        )
        self.write(libparity.pgsolver.emit(document, self.opts.as_json))


def run():
    """Entry point for console scripts"""
    sys.exit(Command().main())


if __name__ == "__main__":
    run()
