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

"""Deterministic separating safety automaton and product safety games.

The automaton's states are the counters of a space plus bottom, the only
unsafe state.  Reading a vertex moves to the greatest state progressive
from the current one at the vertex's priority.  Solving the synchronous
product of a game with the automaton as a safety game solves the parity
game.
"""

import collections
import dataclasses
import logging
import threading
import typing

# Local imports
from . import counters
from . import exceptions
from . import game as pgame
from . import lifting
from . import oracles
from . import types

logging.getLogger(__name__).addHandler(logging.NullHandler())

# Warn once a product grows past this share of its state limit
WARN_SHARE = 0.9

State = counters.Counter


def greatest_progressive(
    space: counters.CounterSpace, state: State, priority: int
) -> State:
    """Greatest ``tau`` in the space or bottom with ``(state, tau)``
    progressive at ``priority``.

    Parameters:
        space: Counter space of the automaton.
        state: Current state, a member of ``space`` or bottom.
        priority: Priority of the vertex read.

    """
    if state.is_bottom:
        return counters.BOTTOM
    keep = space.keep(priority)
    head = space.truncate(state, priority).components
    used = sum(len(part) for part in head)
    if priority % 2 == 0:
        if len(head) < keep:
            return state
        tail = space.max_tail(space.budget - used, space.slots - keep)
        return counters.Counter(head + tail)
    if not head:
        return counters.BOTTOM
    room = space.budget - (used - len(head[-1]))
    lower = counters.string_predecessor(head[-1], room)
    if lower is None:
        return counters.Counter(head[:-1])
    tail = space.max_tail(
        room - len(lower), space.slots - len(head)
    )
    return counters.Counter(head[:-1] + (lower,) + tail)


def brute_force_transition(
    space: counters.CounterSpace, state: State, priority: int
) -> State:
    """:func:`greatest_progressive` by scanning the whole state space"""
    best = counters.BOTTOM
    for candidate in space.enumerate():
        if space.progressive(state, candidate, priority, types.Mode.SEPARATOR):
            best = max(best, candidate)
    return best


class SeparatorAutomaton:
    """Safety automaton over the vertices of a game.

    Parameters:
        space: State space; ``space.maximum()`` is the initial state.
        priorities: Priority of every letter (vertex index).

    """

    def __init__(
        self, space: counters.CounterSpace, priorities: typing.Sequence[int]
    ):
        self.space = space
        self.priorities = tuple(priorities)
        self._memo: dict[tuple[State, int], State] = {}
        self._lock = threading.Lock()

    @classmethod
    def for_game(cls, game: pgame.ParityGame) -> "SeparatorAutomaton":
        """Automaton separating the plays of ``game``"""
        space = counters.CounterSpace.for_game(game.eta, game.d)
        return cls(space, [vertex.priority for vertex in game])

    @property
    def initial(self) -> State:
        """The maximum counter"""
        return self.space.maximum()

    @staticmethod
    def is_unsafe(state: State) -> bool:
        """Only bottom is unsafe"""
        return state.is_bottom

    def step(self, state: State, priority: int) -> State:
        """Transition on a priority, memoized"""
        key = (state, priority)
        found = self._memo.get(key)
        if found is not None:
            return found
        target = greatest_progressive(self.space, state, priority)
        with self._lock:
            return self._memo.setdefault(key, target)

    def transition(self, state: State, vertex: int) -> State:
        """Transition on reading a vertex"""
        return self.step(state, self.priorities[vertex])

    def run(self, word: typing.Iterable[int]) -> list[State]:
        """States visited on a finite word, initial state first"""
        states = [self.initial]
        for vertex in word:
            states.append(self.transition(states[-1], vertex))
        return states

    @property
    def memo_size(self) -> int:
        """Number of memoized transitions"""
        return len(self._memo)


def build_separator(game: pgame.ParityGame) -> SeparatorAutomaton:
    """Separating automaton over the counter space of ``game``.

    Parameters:
        game: Game whose plays the automaton reads, one vertex per letter.

    Returns:
        An automaton starting from the maximum counter of the space sized
        by the game's ``eta`` and ``d``.

    """
    log = logging.getLogger(f"{__name__}.build_separator")
    automaton = SeparatorAutomaton.for_game(game)
    log.debug(
        "Separator over %d states for eta=%d d=%d",
        automaton.space.size(),
        game.eta,
        game.d,
    )
    return automaton


@dataclasses.dataclass(frozen=True)
class LassoRun:
    """Result of running the automaton on ``prefix . loop^omega``.

    Attributes:
        verdict: Accept or reject.
        states: States visited, initial state first.
        rejection_step: Number of letters read when bottom was reached.
        iterations: Completed passes over the loop.

    """

    verdict: types.Verdict
    states: tuple[State, ...]
    rejection_step: None | int
    iterations: int

    @property
    def distinct_states(self) -> int:
        """Number of different states visited"""
        return len(set(self.states))


def run_on_lasso(
    automaton: SeparatorAutomaton,
    prefix: typing.Sequence[int],
    loop: typing.Sequence[int],
) -> LassoRun:
    """Decide an ultimately periodic word.

    The loop is repeated until bottom is reached, which rejects, or the
    state at a loop boundary repeats, which accepts.

    Raises:
        InputError: The loop is empty.

    """
    log = logging.getLogger(f"{__name__}.run_on_lasso")
    if not loop:
        raise exceptions.InputError("Lasso loop must not be empty")
    state = automaton.initial
    states = [state]

    def rejected(iterations: int) -> LassoRun:
        log.debug("Rejected after %d letters", len(states) - 1)
        return LassoRun(
            verdict=types.Verdict.REJECT,
            states=tuple(states),
            rejection_step=len(states) - 1,
            iterations=iterations,
        )

    for vertex in prefix:
        state = automaton.transition(state, vertex)
        states.append(state)
        if automaton.is_unsafe(state):
            return rejected(0)
    boundaries = {state}
    iterations = 0
    while True:
        for vertex in loop:
            state = automaton.transition(state, vertex)
            states.append(state)
            if automaton.is_unsafe(state):
                return rejected(iterations)
        iterations += 1
        if state in boundaries:
            log.debug("Accepted after %d loop passes", iterations)
            return LassoRun(
                verdict=types.Verdict.ACCEPT,
                states=tuple(states),
                rejection_step=None,
                iterations=iterations,
            )
        boundaries.add(state)


@dataclasses.dataclass(frozen=True)
class ProductOptions:
    """Product construction limits.

    Attributes:
        state_limit: Most product vertices built before giving up.

    """

    state_limit: int = 10**6


class SafetyGame:
    """Synchronous product of a game with a separating automaton.

    Product vertex ``(v, sigma)`` moves to ``(w, delta(sigma, v))`` along
    every edge ``v -> w``; it is owned by the owner of ``v``.  Only the
    part reachable from ``(v, initial)`` is built, and unsafe vertices get
    a self loop in place of their successors.

    Raises:
        ResourceLimitError: More than ``state_limit`` product vertices.

    """

    def __init__(
        self,
        game: pgame.ParityGame,
        automaton: SeparatorAutomaton,
        options: None | ProductOptions = None,
    ):
        log = logging.getLogger(f"{__name__}.{__class__.__name__}")
        self.game = game
        self.automaton = automaton
        self.options = ProductOptions() if options is None else options
        self.nodes: list[tuple[int, State]] = []
        self._index: dict[tuple[int, State], int] = {}
        self._successors: list[tuple[int, ...]] = []
        self._predecessors: list[list[int]] = []
        warned = False
        queue = collections.deque(
            self._add((vertex, automaton.initial)) for vertex in range(game.n)
        )
        while queue:
            node = queue.popleft()
            vertex, state = self.nodes[node]
            if automaton.is_unsafe(state):
                targets = (node,)
            else:
                after = automaton.transition(state, vertex)
                targets = []
                for succ in game.successors(vertex):
                    key = (succ, after)
                    if key not in self._index:
                        queue.append(self._add(key))
                    targets.append(self._index[key])
                targets = tuple(targets)
            self._successors[node] = targets
            for target in targets:
                self._predecessors[target].append(node)
            if not warned and len(self.nodes) > (
                WARN_SHARE * self.options.state_limit
            ):
                log.warning(
                    "Product has %d of at most %d states",
                    len(self.nodes),
                    self.options.state_limit,
                )
                warned = True
        log.debug(
            "Product of %d vertices with %d states",
            len(self.nodes),
            len({state for _, state in self.nodes}),
        )

    def _add(self, key: tuple[int, State]) -> int:
        if len(self.nodes) >= self.options.state_limit:
            raise exceptions.ResourceLimitError(
                f"Product exceeds {self.options.state_limit} states",
                stats={"product_states": len(self.nodes)},
            )
        node = len(self.nodes)
        self.nodes.append(key)
        self._index[key] = node
        self._successors.append(())
        self._predecessors.append([])
        return node

    def __len__(self) -> int:
        return len(self.nodes)

    def node(self, vertex: int, state: State) -> int:
        """Index of a product vertex"""
        return self._index[(vertex, state)]

    def owner(self, node: int) -> types.Owner:
        """Owner of a product vertex"""
        return self.game.owner(self.nodes[node][0])

    def successors(self, node: int) -> tuple[int, ...]:
        """Successors of a product vertex"""
        return self._successors[node]

    def predecessors(self, node: int) -> list[int]:
        """Predecessors of a product vertex"""
        return self._predecessors[node]

    @property
    def unsafe(self) -> frozenset[int]:
        """Product vertices carrying bottom"""
        return frozenset(
            node
            for node, (_, state) in enumerate(self.nodes)
            if self.automaton.is_unsafe(state)
        )

    @property
    def states(self) -> int:
        """Number of distinct automaton states in the product"""
        return len({state for _, state in self.nodes})

    def solve(self) -> tuple[frozenset[int], dict[int, int]]:
        """Even's safe region and a move keeping her inside it"""
        everything = range(len(self.nodes))
        losing, _ = oracles.attractor(
            everything,
            self.unsafe,
            types.Owner.ODD,
            self.owner,
            self.successors,
            self.predecessors,
        )
        safe = frozenset(everything) - losing
        strategy = {}
        for node in safe:
            if self.owner(node) == types.Owner.EVEN:
                strategy[node] = next(
                    succ for succ in self.successors(node) if succ in safe
                )
        return safe, strategy


def solve_product(
    game: pgame.ParityGame, options: None | ProductOptions = None
) -> tuple[pgame.SolveResult, SafetyGame]:
    """Solve a parity game through the product safety game.

    The safe strategy of the product needs the automaton state as memory,
    so Even's positional strategy is read from the least succinct progress
    measure of her winning region; no Odd strategy is produced.

    Returns:
        The result and the product it was read from.

    """
    log = logging.getLogger(f"{__name__}.solve_product")
    automaton = build_separator(game)
    product = SafetyGame(game, automaton, options)
    safe, _ = product.solve()
    initial = automaton.initial
    even_wins = frozenset(
        vertex
        for vertex in range(game.n)
        if product.node(vertex, initial) in safe
    )
    even_strategy = lifting.Solver(
        game, lifting.SolverOptions(dualize=False)
    ).even_strategy(even_wins)
    log.debug(
        "%d product vertices, Even wins %s", len(product), sorted(even_wins)
    )
    result = pgame.SolveResult(
        even_wins=even_wins,
        odd_wins=frozenset(range(game.n)) - even_wins,
        even_strategy=even_strategy,
    )
    return result, product


def product_and_solve(
    game: pgame.ParityGame, options: None | ProductOptions = None
) -> pgame.SolveResult:
    """Winning regions from the product safety game"""
    return solve_product(game, options)[0]
