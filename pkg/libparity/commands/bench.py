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

"""Benchmark the lifting solver on random games."""

import concurrent.futures
import io
import sys
import time
import typing

# 3rd party
import psutil
import rich.console
import rich.table

# Local imports
import libparity


class Run(typing.NamedTuple):
    """Outcome of solving one seeded game"""

    seed: int
    n: int
    eta: int
    even_wins: int
    lifts: int
    max_lifts: int
    bound: int
    max_bits: int
    wall_time: float


def solve_seed(config: libparity.oracles.GeneratorConfig) -> Run:
    """Generate and solve one game"""
    game = libparity.oracles.generate(config)
    start = time.time()
    solution = libparity.lifting.Solver(game).solve()
    stats = solution.stats
    return Run(
        seed=config.seed,
        n=game.n,
        eta=game.eta,
        even_wins=len(solution.result.even_wins),
        lifts=stats.total_lifts,
        max_lifts=stats.max_lifts,
        bound=stats.space_size + 1,
        max_bits=stats.max_bits,
        wall_time=time.time() - start,
    )


class Command(libparity.command.Command):
    """Solve a range of seeded random games and tabulate the effort."""

    NAME = "parity bench"
    DESCRIPTION = """
Generate one game per seed, solve it with the lifting solver and report
lifts, the per vertex lift bound and the time taken.  Exits with status 2
when a vertex is lifted more often than the counter space allows.
"""
    EPILOG = libparity.doc.EXIT_DOC

    def cli(self):
        """Add command line arguments specific to the command."""
        self.parser.add_argument(
            "--seeds",
            dest="seeds",
            metavar="<k>",
            type=libparity.utils.positive,
            default=10,
            help="Number of seeds [Default: %(default)s]",
        )
        self.parser.add_argument(
            "--first-seed",
            dest="first_seed",
            metavar="<s>",
            type=int,
            default=0,
            help="First seed [Default: %(default)s]",
        )
        self.parser.add_argument(
            "--vertices",
            dest="vertices",
            metavar="<n>",
            type=libparity.utils.positive,
            default=10,
            help="Vertices per game [Default: %(default)s]",
        )
        self.parser.add_argument(
            "--max-priority",
            dest="max_priority",
            metavar="<d>",
            type=libparity.utils.non_negative,
            default=6,
            help="Largest priority [Default: %(default)s]",
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
            "--jobs",
            dest="jobs",
            metavar="<j>",
            type=libparity.utils.positive,
            default=1,
            help="Games solved concurrently [Default: %(default)s]",
        )

    def configs(self) -> list[libparity.oracles.GeneratorConfig]:
        """One generator configuration per seed"""
        return [
            libparity.oracles.GeneratorConfig(
                vertices=self.opts.vertices,
                max_priority=self.opts.max_priority,
                min_degree=self.opts.min_degree,
                max_degree=self.opts.max_degree,
                seed=seed,
            )
            for seed in range(
                self.opts.first_seed, self.opts.first_seed + self.opts.seeds
            )
        ]

    def table(self, runs: list[Run]) -> str:
        """Render the runs as a table"""
        table = rich.table.Table(title="lifting solver")
        for column in Run._fields:
            table.add_column(column, justify="right")
        for item in runs:
            table.add_row(
                *(
                    f"{value:.4f}" if isinstance(value, float) else str(value)
                    for value in item
                )
            )
        buffer = io.StringIO()
        console = rich.console.Console(file=buffer, width=120)
        console.print(table)
        return buffer.getvalue()

    def execute(self):
        """Solve all seeds and print the table."""
        configs = self.configs()
        with concurrent.futures.ThreadPoolExecutor(
            max_workers=self.opts.jobs
        ) as pool:
            runs = sorted(pool.map(solve_seed, configs))
        self.write(self.table(runs))
        rss = psutil.Process().memory_info().rss
        self.add_stats(
            {
                "games": len(runs),
                "lifts": sum(item.lifts for item in runs),
                "wall_time": round(sum(item.wall_time for item in runs), 6),
                "rss_bytes": rss,
            }
        )
        for key, value in self.stats.items():
            self.write(f"{key}: {value}\n")
        over = [item.seed for item in runs if item.max_lifts > item.bound]
        if over:
            raise libparity.exceptions.MismatchError(
                f"Lift bound exceeded for seeds {over}"
            )


def run():
    """Entry point for console scripts"""
    sys.exit(Command().main())


if __name__ == "__main__":
    run()
