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

"""Reference solvers and game generators.

Two solvers that share nothing with progress measures: the recursive
attractor algorithm and brute force over positional strategy pairs.  Both
are used to cross-check the lifting and separator solvers.
"""

import collections
import dataclasses
import itertools
import logging
import random
import typing

import networkx

# Local imports
from . import exceptions
from . import game as pgame
from . import types

logging.getLogger(__name__).addHandler(logging.NullHandler())

# Largest game handled by exhaustive_solve
EXHAUSTIVE_LIMIT = 8

Lasso = tuple[tuple[int, ...], tuple[int, ...]]


def attractor(
    domain: typing.Collection[int],
    targets: typing.Iterable[int],
    player: types.Owner,
    owner: typing.Callable[[int], types.Owner],
    successors: typing.Callable[[int], typing.Iterable[int]],
    predecessors: typing.Callable[[int], typing.Iterable[int]],
) -> tuple[frozenset[int], dict[int, int]]:
    """Vertices of ``domain`` from which ``player`` forces a visit to
    ``targets``.

    Parameters:
        domain: The vertices of the (sub)game; edges leaving it are ignored.
        targets: Vertices to reach, restricted to ``domain``.
        player: The attracting player.
        owner: Owner of a vertex.
        successors: Successors of a vertex.
        predecessors: Predecessors of a vertex.

    Returns:
        The attractor and the attracting moves of ``player`` outside
        ``targets``.

    """
    attracted = {vertex for vertex in targets if vertex in domain}
    strategy = {}
    remaining = {}
    queue = collections.deque(attracted)
    while queue:
        vertex = queue.popleft()
        for pred in predecessors(vertex):
            if pred not in domain or pred in attracted:
                continue
            if owner(pred) == player:
                strategy[pred] = vertex
            else:
                if pred not in remaining:
                    remaining[pred] = sum(
                        1 for succ in successors(pred) if succ in domain
                    )
                remaining[pred] -= 1
                if remaining[pred] > 0:
                    continue
            attracted.add(pred)
            queue.append(pred)
    return frozenset(attracted), strategy


class _Regions(typing.NamedTuple):
    wins: dict[types.Owner, frozenset[int]]
    strategy: dict[types.Owner, dict[int, int]]


def _empty() -> _Regions:
    return _Regions(
        wins={player: frozenset() for player in types.Owner},
        strategy={player: {} for player in types.Owner},
    )


def _zielonka(game: pgame.ParityGame, domain: frozenset[int]) -> _Regions:
    if not domain:
        return _empty()

    def attract(targets, player):
        return attractor(
            domain,
            targets,
            player,
            game.owner,
            game.successors,
            game.predecessors,
        )

    top = max(game.priority(vertex) for vertex in domain)
    player = types.Owner.of_priority(top)
    opponent = player.opponent
    heads = {vertex for vertex in domain if game.priority(vertex) == top}
    region, pull = attract(heads, player)
    inner = _zielonka(game, domain - region)

    if not inner.wins[opponent]:
        strategy = dict(inner.strategy[player])
        strategy.update(pull)
        for vertex in heads:
            if game.owner(vertex) == player:
                strategy[vertex] = next(
                    succ for succ in game.successors(vertex) if succ in domain
                )
        result = _empty()
        result.wins[player] = domain
        result.strategy[player].update(strategy)
        return result

    lost, push = attract(inner.wins[opponent], opponent)
    rest = _zielonka(game, domain - lost)
    result = _empty()
    result.wins[player] = rest.wins[player]
    result.wins[opponent] = lost | rest.wins[opponent]
    result.strategy[player].update(rest.strategy[player])
    result.strategy[opponent].update(rest.strategy[opponent])
    result.strategy[opponent].update(push)
    result.strategy[opponent].update(
        (vertex, succ)
        for vertex, succ in inner.strategy[opponent].items()
        if vertex in inner.wins[opponent]
    )
    return result


def attractor_solve(game: pgame.ParityGame) -> pgame.SolveResult:
    """Solve a game with the recursive attractor algorithm.

    Returns positional winning strategies for both players.
    """
    log = logging.getLogger(f"{__name__}.attractor_solve")
    regions = _zielonka(game, frozenset(range(game.n)))
    result = pgame.SolveResult(
        even_wins=regions.wins[types.Owner.EVEN],
        odd_wins=regions.wins[types.Owner.ODD],
        even_strategy=_owned(game, regions, types.Owner.EVEN),
        odd_strategy=_owned(game, regions, types.Owner.ODD),
    )
    log.debug("Even wins %s", sorted(result.even_wins))
    return result


def _owned(
    game: pgame.ParityGame, regions: _Regions, player: types.Owner
) -> dict[int, int]:
    return {
        vertex: succ
        for vertex, succ in sorted(regions.strategy[player].items())
        if vertex in regions.wins[player] and game.owner(vertex) == player
    }


def _choices(
    game: pgame.ParityGame, player: types.Owner
) -> typing.Iterator[dict[int, int]]:
    owned = [v for v in range(game.n) if game.owner(v) == player]
    for picks in itertools.product(*(game.successors(v) for v in owned)):
        yield dict(zip(owned, picks))


def loop_winner(
    game: pgame.ParityGame, start: int, move: typing.Mapping[int, int]
) -> types.Owner:
    """Winner of the play from ``start`` when every vertex moves by
    ``move``"""
    _, loop = play_lasso(game, start, move)
    return types.Owner.of_priority(max(game.priority(v) for v in loop))


def exhaustive_solve(game: pgame.ParityGame) -> pgame.SolveResult:
    """Solve a tiny game by trying every pair of positional strategies.

    Raises:
        ResourceLimitError: The game has more than eight vertices.
        MismatchError: No single positional strategy wins a whole region.

    """
    log = logging.getLogger(f"{__name__}.exhaustive_solve")
    if game.n > EXHAUSTIVE_LIMIT:
        raise exceptions.ResourceLimitError(
            f"Exhaustive solving is limited to {EXHAUSTIVE_LIMIT} vertices"
        )
    everything = frozenset(range(game.n))
    even_moves = list(_choices(game, types.Owner.EVEN))
    odd_moves = list(_choices(game, types.Owner.ODD))
    # outcome[i][j]: vertices Even wins when Even plays i and Odd plays j
    outcome = []
    for even in even_moves:
        row = []
        for odd in odd_moves:
            move = {**even, **odd}
            row.append(
                frozenset(
                    vertex
                    for vertex in everything
                    if loop_winner(game, vertex, move) == types.Owner.EVEN
                )
            )
        outcome.append(row)
    secured_even = [frozenset.intersection(*row) for row in outcome]
    secured_odd = [
        frozenset.intersection(
            *(everything - outcome[i][j] for i in range(len(even_moves)))
        )
        for j in range(len(odd_moves))
    ]
    even_wins = frozenset().union(*secured_even)
    odd_wins = everything - even_wins
    try:
        even_index = secured_even.index(even_wins)
        odd_index = secured_odd.index(odd_wins)
    except ValueError as err:
        raise exceptions.MismatchError(
            "No uniform positional strategy found"
        ) from err
    log.debug(
        "%d x %d strategy pairs, Even wins %s",
        len(even_moves),
        len(odd_moves),
        sorted(even_wins),
    )
    return pgame.SolveResult(
        even_wins=even_wins,
        odd_wins=odd_wins,
        even_strategy={
            vertex: succ
            for vertex, succ in even_moves[even_index].items()
            if vertex in even_wins
        },
        odd_strategy={
            vertex: succ
            for vertex, succ in odd_moves[odd_index].items()
            if vertex in odd_wins
        },
    )


@dataclasses.dataclass(frozen=True)
class GeneratorConfig:
    """Random game parameters.

    Attributes:
        vertices: Number of vertices.
        max_priority: Largest priority drawn.
        min_degree: Least out-degree.
        max_degree: Largest out-degree, capped at ``vertices``.
        even_bias: Probability of a vertex being owned by Even.
        seed: Seed of the generator.
        min_priority: Least priority drawn.

    Raises:
        InputError: The bounds are inconsistent.

    """

    vertices: int
    max_priority: int
    min_degree: int = 1
    max_degree: int = 3
    even_bias: float = 0.5
    seed: int = 0
    min_priority: int = 1

    def __post_init__(self):
        if self.vertices < 1:
            raise exceptions.InputError("Games need at least one vertex")
        if not 0 <= self.min_priority <= self.max_priority:
            raise exceptions.InputError(
                "Priorities need 0 <= min-priority <= max-priority"
            )
        if not 1 <= self.min_degree <= self.max_degree:
            raise exceptions.InputError(
                "Degrees need 1 <= min-degree <= max-degree"
            )
        if not 0.0 <= self.even_bias <= 1.0:
            raise exceptions.InputError("Owner bias must be within [0, 1]")


def generate(config: GeneratorConfig) -> pgame.ParityGame:
    """Deterministic pseudo random game for a configuration"""
    log = logging.getLogger(f"{__name__}.generate")
    rng = random.Random(config.seed)
    n = config.vertices
    low, high = config.min_priority, config.max_priority
    priorities = [rng.randint(low, high) for _ in range(n)]
    owners = [
        types.Owner.EVEN
        if rng.random() < config.even_bias
        else types.Owner.ODD
        for _ in range(n)
    ]
    successors = []
    for _ in range(n):
        degree = rng.randint(
            min(config.min_degree, n), min(config.max_degree, n)
        )
        successors.append(sorted(rng.sample(range(n), degree)))

    odd = [p for p in range(low, high + 1) if p % 2]
    even = [p for p in range(low, high + 1) if p % 2 == 0]
    if n >= 2 and odd and even:
        if not any(p % 2 for p in priorities):
            priorities[rng.randrange(n)] = rng.choice(odd)
        elif all(p % 2 for p in priorities):
            priorities[rng.randrange(n)] = rng.choice(even)
    game = pgame.ParityGame.build(priorities, owners, successors)
    log.debug("Generated %r from seed %d", game, config.seed)
    return game


def all_small_games(
    max_n: int = 2, max_priority: int = 3
) -> typing.Iterator[pgame.ParityGame]:
    """Every game with at most ``max_n`` vertices and priorities
    ``0..max_priority``"""
    for n in range(1, max_n + 1):
        targets = [
            subset
            for size in range(1, n + 1)
            for subset in itertools.combinations(range(n), size)
        ]
        for priorities in itertools.product(range(max_priority + 1), repeat=n):
            for owners in itertools.product(types.Owner, repeat=n):
                for successors in itertools.product(targets, repeat=n):
                    yield pgame.ParityGame.build(
                        priorities, owners, successors
                    )


def strategy_graph(
    game: pgame.ParityGame, result: pgame.SolveResult
) -> networkx.DiGraph:
    """Even's winning region with Even restricted to her strategy"""
    graph = networkx.DiGraph()
    graph.add_nodes_from(result.even_wins)
    for vertex in result.even_wins:
        if game.owner(vertex) == types.Owner.EVEN:
            graph.add_edge(vertex, result.even_strategy[vertex])
            continue
        graph.add_edges_from(
            (vertex, succ)
            for succ in game.successors(vertex)
            if succ in result.even_wins
        )
    return graph


def strategy_cycles_ok(
    game: pgame.ParityGame, result: pgame.SolveResult
) -> bool:
    """True if every simple cycle consistent with Even's strategy has an
    even top priority"""
    log = logging.getLogger(f"{__name__}.strategy_cycles_ok")
    for cycle in networkx.simple_cycles(strategy_graph(game, result)):
        top = max(game.priority(vertex) for vertex in cycle)
        if top % 2:
            log.debug("Cycle %s has odd top priority %d", cycle, top)
            return False
    return True


def play_lasso(
    game: pgame.ParityGame, start: int, move: typing.Mapping[int, int]
) -> Lasso:
    """Follow ``move`` from ``start`` until a vertex repeats"""
    seen = {}
    path = []
    vertex = start
    while vertex not in seen:
        seen[vertex] = len(path)
        path.append(vertex)
        vertex = move[vertex]
    entry = seen[vertex]
    return tuple(path[:entry]), tuple(path[entry:])


def random_lasso(
    game: pgame.ParityGame,
    result: pgame.SolveResult,
    rng: random.Random,
    player: types.Owner = types.Owner.EVEN,
) -> None | Lasso:
    """Lasso played inside ``player``'s region by her strategy against a
    random positional opponent.

    Returns ``None`` when the region is empty.
    """
    region = (
        result.even_wins if player == types.Owner.EVEN else result.odd_wins
    )
    strategy = (
        result.even_strategy
        if player == types.Owner.EVEN
        else result.odd_strategy or {}
    )
    if not region:
        return None
    move = {}
    for vertex in region:
        if game.owner(vertex) == player:
            move[vertex] = strategy[vertex]
        else:
            move[vertex] = rng.choice(
                [succ for succ in game.successors(vertex) if succ in region]
            )
    return play_lasso(game, rng.choice(sorted(region)), move)
