#!/usr/bin/env python3
"""UNIT TEST for libparity.game"""
import dataclasses
import logging
import os
import random
import sys
import unittest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))
import libparity
from libparity import game as pgame
from libparity import lifting
from libparity import oracles
from libparity.types import Owner

TRUE = ("1", "true", "yes", "on")

E, O = Owner.EVEN, Owner.ODD


def random_game(seed: int) -> pgame.ParityGame:
    rng = random.Random(seed)
    return oracles.generate(
        oracles.GeneratorConfig(
            vertices=rng.randint(1, 10),
            max_priority=rng.randint(1, 6),
            max_degree=3,
            seed=seed,
        )
    )


class TestGame(unittest.TestCase):
    def test_stats(self):
        single = pgame.ParityGame.build([2], [E], [[0]])
        self.assertEqual(pgame.stats(single), (1, 1, 2, 0))
        pair = pgame.ParityGame.build([1, 2], [E, O], [[0, 1], [1]])
        self.assertEqual(pgame.stats(pair), (2, 3, 2, 1))
        five = pgame.ParityGame.build([5, 0], [E, E], [[1], [0]])
        self.assertEqual(five.d, 6)

    def test_predecessors_and_edges(self):
        game = pgame.ParityGame.build([1, 2, 3], [E, O, E], [[1, 2], [0], [2]])
        self.assertEqual(game.predecessors(2), (0, 2))
        self.assertEqual(game.predecessors(0), (1,))
        self.assertEqual(
            list(game.edges()), [(0, 1), (0, 2), (1, 0), (2, 2)]
        )

    def test_duplicate_successors_dropped(self):
        game = pgame.ParityGame.build([2], [E], [[0, 0]])
        self.assertEqual(game.successors(0), (0,))
        self.assertEqual(game.m, 1)

    def test_invalid_games(self):
        with self.assertRaises(libparity.exceptions.GameError):
            pgame.ParityGame.build([1], [E], [[]])
        with self.assertRaises(libparity.exceptions.GameError):
            pgame.ParityGame.build([1], [E], [[1]])
        with self.assertRaises(libparity.exceptions.GameError):
            pgame.ParityGame.build([-1], [E], [[0]])
        with self.assertRaises(libparity.exceptions.GameError):
            pgame.ParityGame.build([1, 2], [E], [[0], [1]])

    def test_equality(self):
        left = pgame.ParityGame.build([1, 2], [E, O], [[1], [0]])
        right = pgame.ParityGame.build([1, 2], [0, 1], [[1], [0]])
        self.assertEqual(left, right)
        self.assertEqual(hash(left), hash(right))
        self.assertEqual(repr(left), "<ParityGame n=2 m=2 d=2 eta=1>")


class TestDualize(unittest.TestCase):
    def test_single_vertex(self):
        dual = pgame.dualize(pgame.ParityGame.build([2], [E], [[0]]))
        self.assertEqual(dual, pgame.ParityGame.build([1], [O], [[0]]))

    def test_three_vertices(self):
        game = pgame.ParityGame.build([1, 2, 3], [E, O, E], [[1], [2], [0]])
        dual = pgame.dualize(game)
        self.assertEqual([v.priority for v in dual], [0, 1, 2])
        self.assertEqual([v.owner for v in dual], [O, E, O])
        self.assertEqual(dual.successors(1), (2,))

    def test_eta_of_dual(self):
        game = pgame.ParityGame.build(
            [1, 2, 4, 3, 2], [E, E, O, O, E], [[1], [2], [3], [4], [0]]
        )
        self.assertEqual(pgame.dualize(game).eta, 3)

    def test_priority_zero(self):
        game = pgame.ParityGame.build([0, 1], [E, E], [[1], [0]])
        with self.assertRaises(libparity.exceptions.GameError):
            pgame.dualize(game)

    def test_involution(self):
        for seed in range(100):
            game = random_game(seed)
            dual = pgame.dualize(game)
            raised = pgame.ParityGame(
                dataclasses.replace(vertex, priority=vertex.priority + 2)
                for vertex in dual
            )
            self.assertEqual(pgame.dualize(raised), game, seed)

    def test_dual_swaps_winners(self):
        for seed in range(500):
            game = random_game(seed)
            result = lifting.solve(game)
            dual = lifting.solve(pgame.dualize(game))
            self.assertEqual(dual.even_wins, result.odd_wins, seed)
            self.assertEqual(
                dual.even_wins, oracles.attractor_solve(game).odd_wins, seed
            )


class TestSubgame(unittest.TestCase):
    def test_restriction(self):
        game = pgame.ParityGame.build(
            [1, 2, 3, 4], [E, O, E, O], [[1, 3], [2], [1, 3], [3]]
        )
        sub, index_map = game.subgame([3, 1, 2])
        self.assertEqual(index_map, (1, 2, 3))
        self.assertEqual(sub.n, 3)
        self.assertEqual(sub.successors(0), (1,))
        self.assertEqual(sub.successors(1), (0, 2))
        self.assertEqual(sub.priority(2), 4)
        self.assertEqual(sub.ident(0), 1)

    def test_dead_end(self):
        game = pgame.ParityGame.build([1, 2], [E, O], [[1], [0]])
        with self.assertRaises(libparity.exceptions.GameError):
            game.subgame([0])


class TestSolveResult(unittest.TestCase):
    def setUp(self):
        self.game = pgame.ParityGame.build(
            [2, 1, 1], [E, O, E], [[0, 1], [1, 0], [1]]
        )

    def test_swap(self):
        result = pgame.SolveResult(
            even_wins=frozenset({0}),
            odd_wins=frozenset({1, 2}),
            even_strategy={0: 0},
            odd_strategy={1: 1},
        )
        swapped = result.swap()
        self.assertEqual(swapped.even_wins, frozenset({1, 2}))
        self.assertEqual(swapped.even_strategy, {1: 1})
        self.assertEqual(swapped.odd_strategy, {0: 0})
        self.assertEqual(result.winner(0), E)
        self.assertEqual(result.winner(2), O)
        self.assertEqual(result.strategy(), {0: 0, 1: 1})

    def test_problems(self):
        good = pgame.SolveResult(
            even_wins=frozenset({0}),
            odd_wins=frozenset({1, 2}),
            even_strategy={0: 0},
            odd_strategy={1: 1},
        )
        self.assertEqual(good.problems(self.game), [])
        overlap = pgame.SolveResult(
            even_wins=frozenset({0, 1}),
            odd_wins=frozenset({1, 2}),
            even_strategy={0: 0},
        )
        self.assertIn("winning regions overlap", overlap.problems(self.game))
        leaving = pgame.SolveResult(
            even_wins=frozenset({0}),
            odd_wins=frozenset({1, 2}),
            even_strategy={0: 1},
        )
        self.assertEqual(
            leaving.problems(self.game), ["0->1 leaves the region"]
        )
        missing = pgame.SolveResult(
            even_wins=frozenset({0}), odd_wins=frozenset({1, 2})
        )
        self.assertEqual(
            missing.problems(self.game), ["EVEN vertex 0 lacks a move"]
        )


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
