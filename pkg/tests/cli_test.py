#!/usr/bin/env python3
"""UNIT TEST for the parity command line tool"""
import io
import json
import logging
import os
import sys
import tempfile
import unittest
import unittest.mock

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))
import libparity
from libparity import cli

TRUE = ("1", "true", "yes", "on")

THREE_VERTEX_GAME = "parity 1;\n0 1 0 0,1;\n1 2 0 1;\n"
ODD_CHAIN_GAME = "0 1 0 1;\n1 1 0 0;\n"


def parity(*argv: str) -> tuple[int, str, str]:
    stdout, stderr = io.StringIO(), io.StringIO()
    status = cli.cli(list(argv), stdout=stdout, stderr=stderr)
    return status, stdout.getvalue(), stderr.getvalue()


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()

    def path(self, name: str, text: None | str = None) -> str:
        path = os.path.join(self.tmp, name)
        if text is not None:
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(text)
        return path


class TestDispatch(CliTestCase):
    def test_no_arguments(self):
        status, stdout, stderr = parity()
        self.assertEqual(status, 1)
        self.assertEqual(stdout, "")
        self.assertTrue(stderr.startswith("usage: parity"))

    def test_help_and_version(self):
        status, stdout, _ = parity("--help")
        self.assertEqual(status, 0)
        self.assertIn("codetree", stdout)
        status, stdout, _ = parity("--version")
        self.assertEqual(status, 0)
        self.assertEqual(stdout, f"libparity {libparity.__version__}\n")

    def test_unknown_command(self):
        status, _, stderr = parity("dance")
        self.assertEqual(status, 1)
        self.assertIn("unknown command 'dance'", stderr)

    def test_usage_error(self):
        game = self.path("g.gm", THREE_VERTEX_GAME)
        status, stdout, stderr = parity("solve", game, "--solver", "magic")
        self.assertEqual(status, 1)
        self.assertEqual(stdout, "")
        self.assertIn("parity solve: error:", stderr)


class TestSolve(CliTestCase):
    def test_text_output(self):
        game = self.path("g.gm", THREE_VERTEX_GAME)
        status, stdout, _ = parity("solve", game)
        self.assertEqual(status, 0)
        self.assertEqual(
            stdout, "even: 0 1\nodd:\nstrategy: 0->1\nstrategy: 1->1\n"
        )

    def test_classic_strategy(self):
        game = self.path("g.gm", THREE_VERTEX_GAME)
        status, stdout, _ = parity(
            "solve", game, "--solver", "classic", "--stats"
        )
        self.assertEqual(status, 0)
        self.assertTrue(
            stdout.startswith(
                "even: 0 1\nodd:\nstrategy: 0->1\nstrategy: 1->1\n"
            )
        )
        self.assertIn("stat: lifts=", stdout)

    def test_every_solver_with_oracle_check(self):
        status, _, _ = parity(
            "gen",
            "--vertices",
            "7",
            "--max-priority",
            "5",
            "--seed",
            "3",
            "--out",
            self.path("r.gm"),
        )
        self.assertEqual(status, 0)
        outputs = set()
        for solver in ("lifting", "classic", "attractor", "separator"):
            status, stdout, stderr = parity(
                "solve", self.path("r.gm"), "--solver", solver, "--json",
                "--oracle-check",
            )
            self.assertEqual(status, 0, stderr)
            data = json.loads(stdout)
            outputs.add((tuple(data["even_wins"]), tuple(data["odd_wins"])))
        self.assertEqual(len(outputs), 1)

    def test_stats(self):
        game = self.path("g.gm", THREE_VERTEX_GAME)
        status, stdout, _ = parity(
            "solve", game, "--stats", "--oracle-check", "--policy", "random"
        )
        self.assertEqual(status, 0)
        self.assertIn("stat: n=2\n", stdout)
        self.assertIn("stat: eta=1\n", stdout)
        self.assertIn("stat: oracle_check=attractor+exhaustive\n", stdout)
        self.assertIn("stat: wall_time=", stdout)

    def test_trace(self):
        game = self.path("g.gm", "0 1 0 0;\n")
        status, stdout, stderr = parity(
            "solve", game, "--no-dualize", "--trace"
        )
        self.assertEqual(status, 0)
        self.assertEqual(stdout, "even:\nodd: 0\n")
        self.assertIn("lift 0: () -> (e)\n", stderr)
        self.assertIn("lift 0: (e) -> T\n", stderr)

    def test_trace_from_environment(self):
        game = self.path("g.gm", "0 1 0 0;\n")
        with unittest.mock.patch.dict(os.environ, {"LIBPARITY_TRACE": "1"}):
            _, _, stderr = parity("solve", game, "--no-dualize")
        self.assertIn("lift 0:", stderr)

    def test_input_errors(self):
        status, _, stderr = parity("solve", self.path("missing.gm"))
        self.assertEqual(status, 1)
        self.assertIn("parity solve: Unable to read", stderr)
        bad = self.path("bad.gm", "0 2 0 ;\n")
        status, _, stderr = parity("solve", bad)
        self.assertEqual(status, 1)
        self.assertIn("1:7: Empty successor list", stderr)
        dangling = self.path("dangling.gm", "0 2 0 3;\n")
        status, _, _ = parity("solve", dangling)
        self.assertEqual(status, 1)


class TestGen(CliTestCase):
    def test_deterministic(self):
        args = ("gen", "--vertices", "9", "--max-priority", "4")
        for name in ("a.gm", "b.gm"):
            out = self.path(name)
            status, _, _ = parity(*args, "--seed", "7", "--out", out)
            self.assertEqual(status, 0)
        with open(self.path("a.gm"), encoding="utf-8") as left:
            with open(self.path("b.gm"), encoding="utf-8") as right:
                self.assertEqual(left.read(), right.read())
        status, stdout, _ = parity(*args, "--seed", "7")
        self.assertEqual(status, 0)
        with open(self.path("a.gm"), encoding="utf-8") as handle:
            self.assertEqual(stdout, handle.read())
        game = libparity.pgsolver.parse(stdout)
        self.assertEqual(game.n, 9)

    def test_invalid(self):
        status, _, stderr = parity(
            "gen", "--vertices", "3", "--max-priority", "2", "--min-degree",
            "3", "--max-degree", "2",
        )
        self.assertEqual(status, 1)
        self.assertIn("Degrees need", stderr)
        status, _, _ = parity("gen", "--vertices", "3")
        self.assertEqual(status, 1)


class TestSeparator(CliTestCase):
    def test_cross_check(self):
        for seed in ("1", "2", "3"):
            out = self.path(f"s{seed}.gm")
            parity(
                "gen", "--vertices", "6", "--max-priority", "4", "--seed",
                seed, "--out", out,
            )
            status, stdout, stderr = parity("separator", out, "--cross-check")
            self.assertEqual(status, 0, stderr)
            self.assertIn("stat: cross_check=lifting\n", stdout)
            self.assertIn("stat: product_vertices=", stdout)

    def test_lasso(self):
        game = self.path("chain.gm", ODD_CHAIN_GAME)
        status, stdout, _ = parity("separator", game, "--lasso", "0", "1,0")
        self.assertEqual(status, 0)
        self.assertEqual(
            stdout,
            "verdict: reject\nrejection_step: 4\nstates: 5\n"
            "trace: (1) (e) (0) () _\n",
        )
        even = self.path("even.gm", "0 2 0 0;\n")
        status, stdout, _ = parity("separator", even, "--lasso", "-", "0")
        self.assertEqual(status, 0)
        self.assertIn("verdict: accept\nrejection_step: none\n", stdout)

    def test_lasso_errors(self):
        game = self.path("chain.gm", ODD_CHAIN_GAME)
        status, _, stderr = parity("separator", game, "--lasso", "0", "7")
        self.assertEqual(status, 1)
        self.assertIn("unknown vertex 7", stderr)
        status, _, _ = parity("separator", game, "--lasso", "0", "-")
        self.assertEqual(status, 1)
        status, _, _ = parity("separator", game, "--lasso", "0", "x")
        self.assertEqual(status, 1)

    def test_state_limit(self):
        game = self.path("chain.gm", ODD_CHAIN_GAME)
        status, _, stderr = parity("separator", game, "--state-limit", "1")
        self.assertEqual(status, 1)
        self.assertIn("Product exceeds 1 states", stderr)


class TestCodeTree(CliTestCase):
    def test_sample(self):
        status, stdout, _ = parity("codetree", "--sample")
        self.assertEqual(status, 0)
        self.assertIn("<root> -> <root> (0 bits)\n", stdout)
        self.assertIn("2 -> e (0 bits)\n", stdout)
        self.assertIn("0.0 -> 00.e (2 bits)\n", stdout)
        self.assertTrue(
            stdout.endswith("leaves: 8\nbudget: 3\nwidest: 2\n")
        )

    def test_tree_file(self):
        tree = self.path("t.txt", "5\n9\n")
        status, stdout, _ = parity("codetree", tree)
        self.assertEqual(status, 0)
        self.assertIn("5 -> e (0 bits)\n9 -> 1 (1 bits)\n", stdout)

    def test_errors(self):
        status, _, stderr = parity("codetree")
        self.assertEqual(status, 1)
        self.assertIn("Give a tree file or --sample", stderr)
        bad = self.path("bad.txt", "1.x\n")
        status, _, stderr = parity("codetree", bad)
        self.assertEqual(status, 1)
        self.assertIn("1:1:", stderr)


class TestBench(CliTestCase):
    def test_bench(self):
        status, stdout, stderr = parity(
            "bench", "--seeds", "4", "--vertices", "6", "--jobs", "2"
        )
        self.assertEqual(status, 0, stderr)
        self.assertIn("lifting solver", stdout)
        self.assertIn("games: 4\n", stdout)
        self.assertIn("rss_bytes: ", stdout)


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
