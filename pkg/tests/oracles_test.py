#!/usr/bin/env python3
"""UNIT TEST for libparity.oracles"""
import collections
import logging
import os
import random
import sys
import unittest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))
import libparity
from libparity import game as pgame
from libparity import oracles
from libparity.types import Owner

TRUE = ("1", "true", "yes", "on")

E, O = Owner.EVEN, Owner.ODD


class TestAttractor(unittest.TestCase):
    def test_attractor(self):
        game = pgame.ParityGame.build(
            [1, 1, 1, 1], [E, O, O, E], [[3], [0, 2], [2], [3]]
        )
        region, strategy = oracles.attractor(
            range(game.n),
            {3},
            E,
            game.owner,
            game.successors,
            game.predecessors,
        )
        self.assertEqual(region, frozenset({0, 3}))
        self.assertEqual(strategy, {0: 3})
        region, _ = oracles.attractor(
            range(game.n),
            {0},
            O,
            game.owner,
            game.successors,
            game.predecessors,
        )
        self.assertEqual(region, frozenset({0, 1}))

    def test_self_loops(self):
        even = pgame.ParityGame.build([2], [O], [[0]])
        self.assertEqual(oracles.attractor_solve(even).even_wins, {0})
        odd = pgame.ParityGame.build([1], [E], [[0]])
        self.assertEqual(oracles.attractor_solve(odd).odd_wins, {0})

    def test_three_vertex_game(self):
        game = pgame.ParityGame.build([1, 2], [E, E], [[0, 1], [1]])
        for solve in (oracles.attractor_solve, oracles.exhaustive_solve):
            result = solve(game)
            self.assertEqual(result.even_wins, frozenset({0, 1}))
            self.assertEqual(result.even_strategy[0], 1)

    def test_all_small_games(self):
        count = 0
        for game in oracles.all_small_games(2, 3):
            expected = oracles.exhaustive_solve(game)
            result = oracles.attractor_solve(game)
            self.assertEqual(result.even_wins, expected.even_wins, game)
            self.assertEqual(result.problems(game), [], game)
            count += 1
        self.assertEqual(count, 8 + 576)

    def test_random_games(self):
        for seed in range(1000):
            rng = random.Random(seed)
            game = oracles.generate(
                oracles.GeneratorConfig(
                    vertices=rng.randint(1, 6),
                    max_priority=rng.randint(1, 5),
                    seed=seed,
                )
            )
            expected = oracles.exhaustive_solve(game)
            result = oracles.attractor_solve(game)
            self.assertEqual(result.even_wins, expected.even_wins, seed)
            self.assertEqual(result.problems(game), [], seed)
            self.assertEqual(expected.problems(game), [], seed)
            self.assertTrue(oracles.strategy_cycles_ok(game, result), seed)

    def test_exhaustive_limit(self):
        game = oracles.generate(
            oracles.GeneratorConfig(vertices=9, max_priority=3)
        )
        with self.assertRaises(libparity.exceptions.ResourceLimitError):
            oracles.exhaustive_solve(game)


class TestStrategies(unittest.TestCase):
    def test_cycles(self):
        game = pgame.ParityGame.build([2, 3], [E, O], [[0, 1], [0]])
        good = pgame.SolveResult(
            even_wins=frozenset({0, 1}),
            odd_wins=frozenset(),
            even_strategy={0: 0},
        )
        self.assertTrue(oracles.strategy_cycles_ok(game, good))
        bad = pgame.SolveResult(
            even_wins=frozenset({0, 1}),
            odd_wins=frozenset(),
            even_strategy={0: 1},
        )
        self.assertFalse(oracles.strategy_cycles_ok(game, bad))
        self.assertEqual(
            sorted(oracles.strategy_graph(game, bad).edges()),
            [(0, 1), (1, 0)],
        )

    def test_play_lasso(self):
        game = pgame.ParityGame.build(
            [1, 2, 3], [E, E, E], [[1], [2], [1]]
        )
        move = {0: 1, 1: 2, 2: 1}
        self.assertEqual(oracles.play_lasso(game, 0, move), ((0,), (1, 2)))
        self.assertEqual(oracles.loop_winner(game, 0, move), O)

    def test_random_lasso_empty_region(self):
        game = pgame.ParityGame.build([1], [E], [[0]])
        result = oracles.attractor_solve(game)
        rng = random.Random(0)
        self.assertIsNone(oracles.random_lasso(game, result, rng, E))
        self.assertEqual(
            oracles.random_lasso(game, result, rng, O), ((), (0,))
        )


class TestGenerator(unittest.TestCase):
    def test_deterministic(self):
        config = oracles.GeneratorConfig(
            vertices=12, max_priority=5, seed=7
        )
        self.assertEqual(oracles.generate(config), oracles.generate(config))
        other = oracles.GeneratorConfig(vertices=12, max_priority=5, seed=8)
        self.assertNotEqual(oracles.generate(config), oracles.generate(other))

    def test_bounds(self):
        priorities = collections.Counter()
        for seed in range(1000):
            config = oracles.GeneratorConfig(
                vertices=8,
                max_priority=4,
                min_degree=2,
                max_degree=3,
                seed=seed,
            )
            game = oracles.generate(config)
            self.assertEqual(game.n, 8)
            for vertex in game:
                self.assertTrue(2 <= len(vertex.successors) <= 3)
                self.assertTrue(1 <= vertex.priority <= 4)
                priorities[vertex.priority] += 1
            self.assertGreater(game.eta, 0)
            self.assertLess(game.eta, game.n)
        for priority in range(1, 5):
            self.assertGreater(priorities[priority], 1000)

    def test_invalid_config(self):
        for kwargs in (
            {"vertices": 0, "max_priority": 2},
            {"vertices": 2, "max_priority": 2, "min_priority": 3},
            {"vertices": 2, "max_priority": 2, "min_degree": 0},
            {"vertices": 2, "max_priority": 2, "min_degree": 3,
             "max_degree": 2},
            {"vertices": 2, "max_priority": 2, "even_bias": 1.5},
        ):
            with self.assertRaises(libparity.exceptions.InputError):
                oracles.GeneratorConfig(**kwargs)


def setup():
    handlers = []
    # Set up stderr logging
    stderr = logging.StreamHandler(stream=sys.stderr)
    handlers.append(stderr)

    # Set the defaults
    fmt = "%(asctime)s %(levelname)s %(name)s: %(message)s"
    level = logging.ERROR

    debug = os.getenv("DEBUG", "false").lower()
    verbose = os.getenv("VERBOSE", "false").lower()
    if debug in TRUE:
        level = logging.DEBUG
    elif verbose in TRUE:
        level = logging.INFO
    else:
        fmt = "%(name)s: %(message)s"
    logging.basicConfig(level=level, format=fmt, handlers=handlers)
    log = logging.getLogger()
    log.setLevel(level)


if __name__ == "__main__":
    setup()
    unittest.main()
