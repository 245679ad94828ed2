#!/usr/bin/env python3
"""UNIT TEST for libparity.separator"""
import logging
import os
import random
import sys
import unittest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))
import libparity
from libparity import counters
from libparity import game as pgame
from libparity import lifting
from libparity import oracles
from libparity import separator
from libparity.types import Owner, Verdict

TRUE = ("1", "true", "yes", "on")

C = counters.counter
E, O = Owner.EVEN, Owner.ODD


def random_game(seed: int) -> pgame.ParityGame:
    rng = random.Random(seed)
    return oracles.generate(
        oracles.GeneratorConfig(
            vertices=rng.randint(1, 8),
            max_priority=rng.randint(1, 4),
            seed=seed,
        )
    )


class TestTransition(unittest.TestCase):
    def test_rejection_chain(self):
        game = pgame.ParityGame.build([1, 1], [E, E], [[1], [0]])
        automaton = separator.build_separator(game)
        self.assertEqual(automaton.initial, C("1"))
        self.assertEqual(
            automaton.run([0, 1, 0, 1]),
            [C("1"), C(""), C("0"), C(), counters.BOTTOM],
        )

    def test_bottom_absorbing(self):
        space = counters.CounterSpace(2, 4)
        for priority in range(1, 5):
            self.assertEqual(
                separator.greatest_progressive(
                    space, counters.BOTTOM, priority
                ),
                counters.BOTTOM,
            )

    def test_even_from_initial(self):
        space = counters.CounterSpace(1, 4)
        automaton = separator.SeparatorAutomaton(space, [2, 4])
        self.assertEqual(automaton.initial, C("1", ""))
        initial = automaton.initial
        self.assertEqual(automaton.transition(initial, 0), C("1", ""))
        self.assertEqual(automaton.transition(initial, 1), C("1", ""))

    def test_even_resets_lower_components(self):
        space = counters.CounterSpace(2, 4)
        self.assertEqual(
            separator.greatest_progressive(space, C("0", "0"), 2),
            C("0", "1"),
        )
        self.assertEqual(
            separator.greatest_progressive(space, C(), 2), C()
        )

    def test_matches_brute_force(self):
        for budget in range(0, 4):
            for d in range(2, 7, 2):
                space = counters.CounterSpace(budget, d)
                for state in space.enumerate() + [counters.BOTTOM]:
                    for priority in range(1, d + 1):
                        self.assertEqual(
                            separator.greatest_progressive(
                                space, state, priority
                            ),
                            separator.brute_force_transition(
                                space, state, priority
                            ),
                            (budget, d, state, priority),
                        )

    def test_memo(self):
        game = pgame.ParityGame.build([1, 1], [E, E], [[1], [0]])
        automaton = separator.build_separator(game)
        automaton.run([0, 0, 1])
        self.assertEqual(automaton.memo_size, 3)
        automaton.run([0, 0, 1])
        self.assertEqual(automaton.memo_size, 3)


class TestLasso(unittest.TestCase):
    def test_even_loop(self):
        game = pgame.ParityGame.build([2], [E], [[0]])
        automaton = separator.build_separator(game)
        run = separator.run_on_lasso(automaton, [], [0])
        self.assertEqual(run.verdict, Verdict.ACCEPT)
        self.assertIsNone(run.rejection_step)
        self.assertEqual(run.iterations, 1)
        self.assertEqual(run.distinct_states, 1)

    def test_odd_loop(self):
        game = pgame.ParityGame.build([1], [E], [[0]])
        automaton = separator.build_separator(game)
        run = separator.run_on_lasso(automaton, [], [0])
        self.assertEqual(run.verdict, Verdict.REJECT)
        self.assertEqual(run.rejection_step, 2)
        self.assertEqual(run.states, (C(""), C(), counters.BOTTOM))

    def test_chain(self):
        game = pgame.ParityGame.build([1, 1], [E, E], [[1], [0]])
        automaton = separator.build_separator(game)
        run = separator.run_on_lasso(automaton, [0], [1, 0])
        self.assertEqual(run.verdict, Verdict.REJECT)
        self.assertEqual(run.rejection_step, 4)
        self.assertEqual(run.iterations, 1)

    def test_even_top_with_odd_vertices(self):
        game = pgame.ParityGame.build(
            [1, 2, 3, 4], [E, E, E, E], [[1], [2], [3], [0]]
        )
        automaton = separator.build_separator(game)
        run = separator.run_on_lasso(automaton, [], [0, 1, 2, 3])
        self.assertEqual(run.verdict, Verdict.ACCEPT)
        run = separator.run_on_lasso(automaton, [0, 1], [2])
        self.assertEqual(run.verdict, Verdict.REJECT)

    def test_empty_loop(self):
        game = pgame.ParityGame.build([2], [E], [[0]])
        automaton = separator.build_separator(game)
        with self.assertRaises(libparity.exceptions.InputError):
            separator.run_on_lasso(automaton, [0], [])

    def test_generated_lassos(self):
        rng = random.Random(11)
        checked = 0
        seed = 0
        while checked < 500:
            game = random_game(seed)
            seed += 1
            result = oracles.attractor_solve(game)
            automaton = separator.build_separator(game)
            for player, verdict in (
                (E, Verdict.ACCEPT),
                (O, Verdict.REJECT),
            ):
                lasso = oracles.random_lasso(game, result, rng, player)
                if lasso is None:
                    continue
                prefix, loop = lasso
                top = max(game.priority(vertex) for vertex in loop)
                self.assertEqual(Owner.of_priority(top), player)
                run = separator.run_on_lasso(automaton, prefix, loop)
                self.assertEqual(run.verdict, verdict, (seed, lasso))
                checked += 1


class TestProduct(unittest.TestCase):
    def test_even_self_loop(self):
        game = pgame.ParityGame.build([2], [O], [[0]])
        result = separator.product_and_solve(game)
        self.assertEqual(result.even_wins, frozenset({0}))

    def test_odd_self_loop(self):
        game = pgame.ParityGame.build([1], [E], [[0]])
        result, product = separator.solve_product(game)
        self.assertEqual(result.odd_wins, frozenset({0}))
        self.assertEqual(len(product), 3)
        self.assertEqual(len(product.unsafe), 1)
        self.assertIsNone(result.odd_strategy)

    def test_agrees_with_lifting(self):
        for seed in range(200):
            game = random_game(seed)
            result = separator.product_and_solve(game)
            expected = lifting.solve(game)
            self.assertEqual(result.even_wins, expected.even_wins, seed)
            self.assertEqual(result.problems(game), [], seed)

    def test_safe_region_closed(self):
        for seed in range(50):
            game = random_game(seed)
            product = separator.SafetyGame(
                game, separator.build_separator(game)
            )
            safe, strategy = product.solve()
            self.assertFalse(safe & product.unsafe)
            for node in safe:
                if product.owner(node) == E:
                    self.assertIn(strategy[node], safe)
                else:
                    self.assertTrue(
                        set(product.successors(node)) <= safe, seed
                    )

    def test_state_limit(self):
        game = pgame.ParityGame.build([1, 2, 1], [E, O, E], [[1], [2], [0]])
        options = separator.ProductOptions(state_limit=2)
        with self.assertRaises(
            libparity.exceptions.ResourceLimitError
        ) as ctx:
            separator.product_and_solve(game, options)
        self.assertEqual(ctx.exception.stats, {"product_states": 2})

    def test_near_limit_warning(self):
        game = pgame.ParityGame.build([1], [E], [[0]])
        options = separator.ProductOptions(state_limit=3)
        with self.assertLogs("libparity.separator", level="WARNING"):
            separator.product_and_solve(game, options)


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
