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

"""Solve a parity game."""

import sys

# Local imports
import libparity

SOLVERS = ("lifting", "classic", "attractor", "separator")


class Command(libparity.command.Command):
    """Solve a game file and print the winning regions."""

    NAME = "parity solve"
    DESCRIPTION = """
Solve a parity game by lifting succinct progress measures.  The winning
regions of both players and their strategies are printed.
"""
    EPILOG = (
        libparity.doc.GAME_DOC
        + libparity.doc.TRACE_DOC
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
            "--solver",
            choices=SOLVERS,
            default="lifting",
            dest="solver",
            help="Solver to use [Default: %(default)s]",
        )
        self.parser.add_argument(
            "--policy",
            choices=[policy.value for policy in libparity.types.Policy],
            default=libparity.types.Policy.FIFO.value,
            dest="policy",
            help="Work-list policy of the lifting solver "
            "[Default: %(default)s]",
        )
        self.parser.add_argument(
            "--seed",
            type=int,
            default=0,
            dest="seed",
            help="Seed for the random work-list policy [Default: 0]",
        )
        self.parser.add_argument(
            "--no-dualize",
            dest="dualize",
            default=True,
            action="store_false",
            help="Never solve the dual game",
        )
        self.parser.add_argument(
            "--oracle-check",
            dest="oracle_check",
            default=False,
            action="store_true",
            help="Compare the result with the reference solvers",
        )
        self.parser.add_argument(
            "--trace",
            dest="trace",
            default=libparity.utils.env_flag("LIBPARITY_TRACE"),
            action="store_true",
            help="Print every lift on stderr",
        )
        self.parser.add_argument(
            "--json",
            dest="as_json",
            default=False,
            action="store_true",
            help="Print the result as JSON",
        )
        self.parser.add_argument(
            "--stats",
            dest="stats",
            default=False,
            action="store_true",
            help="Include solver statistics in the output",
        )

    def trace(self, vertex: int, old, new):
        """Report one lift"""
        self.stderr.write(
            f"lift {vertex}: {libparity.counters.render(old)} -> "
            f"{libparity.counters.render(new)}\n"
        )

    def run_solver(self, game: libparity.game.ParityGame):
        """Solve with the selected solver, recording its statistics"""
        n, m, d, eta = game.stats
        self.add_stats({"n": n, "m": m, "d": d, "eta": eta})
        if self.opts.solver == "lifting":
            options = libparity.lifting.SolverOptions(
                policy=libparity.types.Policy(self.opts.policy),
                seed=self.opts.seed,
                dualize=self.opts.dualize,
                trace=self.trace if self.opts.trace else None,
            )
            solution = libparity.lifting.Solver(game, options).solve()
            self.add_stats(solution.stats.as_dict())
            return solution.result
        if self.opts.solver == "classic":
            classic = libparity.classic.classic_solve(game)
            self.add_stat("lifts", classic.lifts)
            # the lifting solver provides the strategy for this region
            return libparity.game.SolveResult(
                even_wins=classic.even_wins,
                odd_wins=frozenset(range(game.n)) - classic.even_wins,
                even_strategy=libparity.lifting.Solver(game).even_strategy(
                    classic.even_wins
                ),
            )
        if self.opts.solver == "attractor":
            return libparity.oracles.attractor_solve(game)
        return libparity.separator.product_and_solve(game)

    def oracle_check(self, game, result):
        """Raise MismatchError unless the reference solvers agree"""
        problems = result.problems(game)
        if problems:
            raise libparity.exceptions.MismatchError(
                "Invalid result: " + "; ".join(problems)
            )
        oracles = {"attractor": libparity.oracles.attractor_solve(game)}
        if game.n <= libparity.oracles.EXHAUSTIVE_LIMIT:
            oracles["exhaustive"] = libparity.oracles.exhaustive_solve(game)
        for name, expected in oracles.items():
            if expected.even_wins != result.even_wins:
                raise libparity.exceptions.MismatchError(
                    f"{name} solver disagrees: Even wins "
                    f"{sorted(game.ident(v) for v in expected.even_wins)}"
                )
        if not libparity.oracles.strategy_cycles_ok(game, result):
            raise libparity.exceptions.MismatchError(
                "Even's strategy admits a cycle with odd top priority"
            )
        self.add_stat("oracle_check", "+".join(sorted(oracles)))

    def execute(self):
        """Solve the game and write the result document."""
        text = libparity.utils.read_text(self.opts.game)
        game = libparity.pgsolver.parse(text)
        result = self.run_solver(game)
        if self.opts.oracle_check:
            self.oracle_check(game, result)
        if self.opts.stats:
            self.add_stat("wall_time", round(self.elapsed(), 6))
        document = libparity.pgsolver.ResultDocument.from_result(
            game, result, self.stats if self.opts.stats else None
        )
        self.write(libparity.pgsolver.emit(document, self.opts.as_json))


def run():
    """Entry point for console scripts"""
    sys.exit(Command().main())


if __name__ == "__main__":
    run()
