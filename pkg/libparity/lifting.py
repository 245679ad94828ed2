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

"""Succinct progress measure lifting solver.

Every vertex starts at the empty counter and is lifted to the least counter
that makes the required edges progressive until nothing changes.  Vertices
that end at :data:`libparity.counters.TOP` are won by Odd, the rest by Even,
and progressive edges form Even's winning strategy.
"""

import collections
import dataclasses
import logging
import random
import time
import typing

# Local imports
from . import counters
from . import exceptions
from . import game as pgame
from . import types

logging.getLogger(__name__).addHandler(logging.NullHandler())

Trace = typing.Callable[[int, counters.Counter, counters.Counter], None]


@dataclasses.dataclass(frozen=True)
class SolverOptions:
    """Solver configuration.

    Attributes:
        policy: Order in which pending vertices are lifted.
        seed: Seed for :attr:`libparity.types.Policy.RANDOM`.
        dualize: Solve the dual game when more than half of the vertices
            have odd priorities.
        trace: Called with ``(vertex, old, new)`` after every lift that
            changes the measure.

    """

    policy: types.Policy = types.Policy.FIFO
    seed: int = 0
    dualize: bool = True
    trace: None | Trace = None


class Measure:
    """Mutable map from vertices to counters of one space.

    Every value is held as a :class:`libparity.counters.PackedCounter`:
    one integer payload plus the component lengths.  Storing a value
    whose packed size exceeds the space's bit budget plus one boundary
    field per component is an error.

    Parameters:
        space: The counter space every value belongs to.
        values: One counter per vertex; ``BOTTOM`` is not allowed.

    """

    def __init__(
        self,
        space: counters.CounterSpace,
        values: typing.Iterable[counters.Counter],
    ):
        self.space = space
        self._packed: list[counters.PackedCounter] = []
        for value in values:
            self._packed.append(self._pack(value))

    @classmethod
    def bottom(cls, space: counters.CounterSpace, n: int) -> "Measure":
        """Measure mapping every vertex to the empty counter"""
        return cls(space, [space.bottom()] * n)

    def _pack(self, value: counters.Counter) -> counters.PackedCounter:
        if value.is_bottom:
            raise exceptions.CounterError("Measures never take bottom")
        packed = counters.PackedCounter.pack(self.space.check(value))
        bound = counters.entry_bound(self.space, len(packed.lengths))
        if packed.storage_bits(self.space.d) > bound:
            raise exceptions.CounterError(
                f"{counters.render(value)} needs more than {bound} bits"
            )
        return packed

    def __getitem__(self, vertex: int) -> counters.Counter:
        return self._packed[vertex].unpack()

    def __setitem__(self, vertex: int, value: counters.Counter):
        self._packed[vertex] = self._pack(value)

    def __len__(self) -> int:
        return len(self._packed)

    def __iter__(self) -> typing.Iterator[counters.Counter]:
        return (packed.unpack() for packed in self._packed)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Measure):
            return NotImplemented
        return self.space == other.space and self._packed == other._packed

    def __repr__(self) -> str:
        body = ", ".join(counters.render(value) for value in self)
        return f"<Measure [{body}]>"

    def packed(self, vertex: int) -> counters.PackedCounter:
        """Stored record of one vertex"""
        return self._packed[vertex]

    def bound(self) -> int:
        """Most bits the whole table may take"""
        return len(self._packed) * counters.entry_bound(
            self.space, self.space.slots
        )

    def payload_bits(self) -> int:
        """Bits used by counter strings over all vertices"""
        return sum(packed.bits for packed in self._packed)

    def storage_bits(self) -> int:
        """Size of the packed table"""
        return sum(
            packed.storage_bits(self.space.d) for packed in self._packed
        )

    def max_bits(self) -> int:
        """Largest number of string bits held by one counter"""
        return max((packed.bits for packed in self._packed), default=0)


@dataclasses.dataclass(frozen=True)
class Witness:
    """A measure together with the edges progressive in it"""

    measure: Measure
    progressive_edges: frozenset[tuple[int, int]]


def _least_above(
    space: counters.CounterSpace, target: counters.Counter, priority: int
) -> counters.Counter:
    """Least counter whose truncation at odd ``priority`` exceeds the
    truncation of ``target``."""
    log = logging.getLogger(f"{__name__}._least_above")
    keep = space.keep(priority)
    parts = space.truncate(target, priority).components
    budget = space.budget
    used = sum(len(part) for part in parts)

    if len(parts) < keep:
        # target stops above the priority: append the smallest component
        log.debug("case 1: %s", counters.render(target))
        return counters.Counter(parts + ("0" * (budget - used),))
    if not parts:
        return counters.TOP
    if used < budget:
        # room left: step right in the last component
        log.debug("case 2: %s", counters.render(target))
        last = parts[-1]
        return counters.Counter(
            parts[:-1] + (last + "1" + "0" * (budget - used - 1),)
        )

    nonempty = [index for index, part in enumerate(parts) if part]
    if not nonempty:
        return counters.TOP
    index = nonempty[-1]
    bits = parts[index]
    if "0" in bits:
        # bits == prefix + "0" + "1" * run
        log.debug("case 3: %s", counters.render(target))
        return counters.Counter(parts[:index] + (bits.rstrip("1")[:-1],))
    if index > 0:
        # bits is all ones; move its run into the component above
        log.debug("case 4: %s", counters.render(target))
        above = parts[index - 1] + "1" + "0" * (len(bits) - 1)
        return counters.Counter(parts[: index - 1] + (above,))
    log.debug("case 5: %s", counters.render(target))
    return counters.TOP


def lift_counter(
    space: counters.CounterSpace,
    current: counters.Counter,
    target: counters.Counter,
    priority: int,
) -> counters.Counter:
    """Least ``sigma >= current`` making ``(sigma, target)`` progressive.

    Parameters:
        space: Counter space of the measure.
        current: Counter of the edge source.
        target: Counter of the edge target.
        priority: Priority of the edge source.

    """
    if current.is_top or target.is_top:
        return counters.TOP
    if space.progressive(current, target, priority):
        return current
    if priority % 2 == 0:
        return space.truncate(target, priority)
    return _least_above(space, target, priority)


def brute_force_lift(
    space: counters.CounterSpace,
    current: counters.Counter,
    target: counters.Counter,
    priority: int,
) -> counters.Counter:
    """:func:`lift_counter` by scanning the enumerated space upwards"""
    candidates = space.enumerate() + [counters.TOP]
    for sigma in candidates[space.index(current) :]:
        if space.progressive(sigma, target, priority):
            return sigma
    return counters.TOP


def lift_edge(
    game: pgame.ParityGame, measure: Measure, source: int, target: int
) -> counters.Counter:
    """``lift(mu, v, w)`` for the edge ``source -> target``"""
    return lift_counter(
        measure.space,
        measure[source],
        measure[target],
        game.priority(source),
    )


def lift_vertex(
    game: pgame.ParityGame, measure: Measure, vertex: int
) -> counters.Counter:
    """``Lift_v(mu)(v)``: best edge lift for the owner of ``vertex``"""
    lifts = (
        lift_edge(game, measure, vertex, succ)
        for succ in game.successors(vertex)
    )
    if game.owner(vertex) == types.Owner.EVEN:
        return min(lifts)
    return max(lifts)


def is_progressive(
    game: pgame.ParityGame, measure: Measure, source: int, target: int
) -> bool:
    """Progressiveness of an edge in a measure"""
    return measure.space.progressive(
        measure[source], measure[target], game.priority(source)
    )


def witness(game: pgame.ParityGame, measure: Measure) -> Witness:
    """Collect the progressive edges of a measure"""
    return Witness(
        measure=measure,
        progressive_edges=frozenset(
            (source, target)
            for source, target in game.edges()
            if is_progressive(game, measure, source, target)
        ),
    )


def check_progress_measure(game: pgame.ParityGame, measure: Measure) -> bool:
    """True if ``measure`` is a succinct progress measure for ``game``.

    Even vertices need one progressive edge, Odd vertices need all of them.
    """
    edges = witness(game, measure).progressive_edges
    for vertex in range(game.n):
        moves = [(vertex, succ) in edges for succ in game.successors(vertex)]
        if game.owner(vertex) == types.Owner.EVEN:
            if not any(moves):
                return False
        elif not all(moves):
            return False
    return True


@dataclasses.dataclass
class SolveStats:
    """Book keeping of one lifting run.

    Attributes:
        lifts: Value changing lifts per vertex.
        evaluations: Number of ``Lift_v`` evaluations.
        space_size: ``|S|`` for the run's counter space.
        budget: Bit budget ``g`` of the space.
        d: Priority bound of the solved game.
        dualized: Whether the dual game was solved.
        max_bits: Most string bits held by one counter at the end.
        storage_bits: Size of the packed final measure.
        wall_time: Seconds spent solving.

    """

    lifts: list[int]
    evaluations: int = 0
    space_size: int = 0
    budget: int = 0
    d: int = 0
    dualized: bool = False
    max_bits: int = 0
    storage_bits: int = 0
    wall_time: float = 0.0

    @property
    def total_lifts(self) -> int:
        """Sum of :attr:`lifts`"""
        return sum(self.lifts)

    @property
    def max_lifts(self) -> int:
        """Most lifts of a single vertex"""
        return max(self.lifts, default=0)

    def histogram(self) -> dict[int, int]:
        """Number of vertices per lift count"""
        return dict(sorted(collections.Counter(self.lifts).items()))

    def as_dict(self) -> dict[str, typing.Any]:
        """Plain data for result documents"""
        return {
            "lifts": self.total_lifts,
            "max_lifts_per_vertex": self.max_lifts,
            "lift_histogram": {
                str(count): vertices
                for count, vertices in self.histogram().items()
            },
            "evaluations": self.evaluations,
            "space_size": self.space_size,
            "budget": self.budget,
            "d": self.d,
            "dualized": self.dualized,
            "max_counter_bits": self.max_bits,
            "measure_bits": self.storage_bits,
        }


@dataclasses.dataclass(frozen=True)
class Solution:
    """Everything a lifting run produces.

    Attributes:
        result: Winning regions and strategies of the input game.
        measure: Least succinct progress measure of :attr:`solved`.
        solved: The game that was lifted (the dual when dualized).
        stats: Run statistics.

    """

    result: pgame.SolveResult
    measure: Measure
    solved: pgame.ParityGame
    stats: SolveStats


class WorkList:
    """Pending vertices, each present at most once.

    Parameters:
        n: Number of vertices; all start pending.
        policy: FIFO queue or seeded random choice.
        seed: Seed for the random policy.

    """

    def __init__(self, n: int, policy: types.Policy, seed: int):
        self._policy = policy
        self._rng = random.Random(seed)
        self._queued = [True] * n
        self._fifo = collections.deque(range(n))
        self._pool = list(range(n))

    def __bool__(self) -> bool:
        if self._policy == types.Policy.FIFO:
            return bool(self._fifo)
        return bool(self._pool)

    def push(self, vertex: int):
        if self._queued[vertex]:
            return
        self._queued[vertex] = True
        if self._policy == types.Policy.FIFO:
            self._fifo.append(vertex)
        else:
            self._pool.append(vertex)

    def pop(self) -> int:
        if self._policy == types.Policy.FIFO:
            vertex = self._fifo.popleft()
        else:
            index = self._rng.randrange(len(self._pool))
            self._pool[index], self._pool[-1] = (
                self._pool[-1],
                self._pool[index],
            )
            vertex = self._pool.pop()
        self._queued[vertex] = False
        return vertex


class Solver:
    """Lifting solver for one game.

    Parameters:
        game: The game to solve.
        options: Solver configuration, defaults to :class:`SolverOptions`.

    """

    def __init__(
        self, game: pgame.ParityGame, options: None | SolverOptions = None
    ):
        self.game = game
        self.options = SolverOptions() if options is None else options

    def lift(self) -> tuple[Measure, SolveStats]:
        """Run the work list from the bottom measure to the least fixpoint
        of this solver's game"""
        game = self.game
        log = logging.getLogger(f"{__name__}.{__class__.__name__}.lift")
        n, _, d, eta = game.stats
        space = counters.CounterSpace.for_game(eta, d)
        log.debug("n=%d d=%d eta=%d g=%d", n, d, eta, space.budget)
        measure = Measure.bottom(space, n)
        stats = SolveStats(
            lifts=[0] * n,
            space_size=counters.exact_size(space.budget, d),
            budget=space.budget,
            d=d,
        )
        pending = WorkList(n, self.options.policy, self.options.seed)
        while pending:
            vertex = pending.pop()
            old = measure[vertex]
            if old.is_top:
                continue
            stats.evaluations += 1
            new = lift_vertex(game, measure, vertex)
            if new == old:
                continue
            measure[vertex] = new
            stats.lifts[vertex] += 1
            if self.options.trace is not None:
                self.options.trace(vertex, old, new)
            for pred in game.predecessors(vertex):
                if not measure[pred].is_top:
                    pending.push(pred)
        stats.max_bits = measure.max_bits()
        stats.storage_bits = measure.storage_bits()
        log.debug(
            "%d lifts in %d evaluations", stats.total_lifts, stats.evaluations
        )
        return measure, stats

    @staticmethod
    def extract(game: pgame.ParityGame, measure: Measure) -> pgame.SolveResult:
        """Winning regions and Even's strategy from a fixpoint.

        Even picks her lowest indexed successor along a progressive edge.
        """
        even_wins = frozenset(
            vertex
            for vertex in range(game.n)
            if not measure[vertex].is_top
        )
        strategy = {}
        for vertex in sorted(even_wins):
            if game.owner(vertex) != types.Owner.EVEN:
                continue
            strategy[vertex] = min(
                succ
                for succ in game.successors(vertex)
                if is_progressive(game, measure, vertex, succ)
            )
        return pgame.SolveResult(
            even_wins=even_wins,
            odd_wins=frozenset(range(game.n)) - even_wins,
            even_strategy=strategy,
        )

    def even_strategy(self, region: frozenset[int]) -> dict[int, int]:
        """Even's strategy on her region by lifting the region directly"""
        if not region:
            return {}
        sub, index_map = self.game.subgame(region)
        solver = Solver(
            sub, dataclasses.replace(self.options, dualize=False, trace=None)
        )
        measure, _ = solver.lift()
        result = self.extract(sub, measure)
        return {
            index_map[vertex]: index_map[succ]
            for vertex, succ in result.even_strategy.items()
        }

    def solve(self) -> Solution:
        """Solve the game, going through the dual game when it is smaller"""
        log = logging.getLogger(f"{__name__}.{__class__.__name__}.solve")
        start = time.time()
        n, _, _, eta = self.game.stats
        solved = self.game
        dualized = False
        if self.options.dualize and 2 * eta > n:
            if any(vertex.priority == 0 for vertex in self.game):
                log.warning(
                    "eta=%d exceeds n/2 but priority 0 is present; "
                    "solving without dualization",
                    eta,
                )
            else:
                solved = pgame.dualize(self.game)
                dualized = True
        measure, stats = Solver(solved, self.options).lift()
        result = self.extract(solved, measure)
        if dualized:
            result = result.swap()
            result = dataclasses.replace(
                result, even_strategy=self.even_strategy(result.even_wins)
            )
        stats.dualized = dualized
        stats.wall_time = time.time() - start
        log.debug(
            "Even wins %d of %d vertices", len(result.even_wins), self.game.n
        )
        return Solution(
            result=result, measure=measure, solved=solved, stats=stats
        )


def solve(
    game: pgame.ParityGame, options: None | SolverOptions = None
) -> pgame.SolveResult:
    """Solve a parity game by lifting succinct progress measures"""
    return Solver(game, options).solve().result
