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

"""Parity game graphs, their statistics and the dual game."""

import dataclasses
import logging
import typing

# Local imports
from . import exceptions
from . import types

logging.getLogger(__name__).addHandler(logging.NullHandler())


@dataclasses.dataclass(frozen=True)
class Vertex:
    """A vertex record.

    Attributes:
        priority: Non-negative priority.
        owner: Player moving the token from this vertex.
        successors: Indices of the successor vertices, duplicates removed.
        ident: Identifier used in game files.
        name: Optional display name from the game file.

    """

    priority: int
    owner: types.Owner
    successors: tuple[int, ...]
    ident: int
    name: None | str = None


class GameStats(typing.NamedTuple):
    """Derived quantities of a game"""

    n: int
    m: int
    d: int
    eta: int


class ParityGame:
    """Immutable parity game over dense vertex indices ``0..n-1``.

    Parameters:
        vertices: Vertex records in index order.

    Raises:
        GameError: A vertex has no successors or a successor index is out
            of range.

    """

    def __init__(self, vertices: typing.Iterable[Vertex]):
        log = logging.getLogger(f"{__name__}.{__class__.__name__}")
        records = []
        for vertex in vertices:
            successors = tuple(dict.fromkeys(vertex.successors))
            if successors != vertex.successors:
                vertex = dataclasses.replace(vertex, successors=successors)
            records.append(vertex)
        self._vertices = tuple(records)
        n = len(self._vertices)
        predecessors = [[] for _ in range(n)]
        for index, vertex in enumerate(self._vertices):
            if vertex.priority < 0:
                raise exceptions.GameError(
                    f"Vertex {vertex.ident} has negative priority"
                )
            if not vertex.successors:
                raise exceptions.GameError(
                    f"Vertex {vertex.ident} has no successors"
                )
            for succ in vertex.successors:
                if not 0 <= succ < n:
                    raise exceptions.GameError(
                        f"Vertex {vertex.ident} has invalid successor {succ}"
                    )
                predecessors[succ].append(index)
        self._predecessors = tuple(tuple(preds) for preds in predecessors)
        log.debug("Game with %d vertices", n)

    @classmethod
    def build(
        cls,
        priorities: typing.Sequence[int],
        owners: typing.Sequence[int],
        successors: typing.Sequence[typing.Sequence[int]],
        idents: None | typing.Sequence[int] = None,
        names: None | typing.Sequence[None | str] = None,
    ) -> "ParityGame":
        """Construct a game from parallel sequences.

        ``owners`` may hold :class:`libparity.types.Owner` values or the
        integers 0 (Even) and 1 (Odd).
        """
        count = len(priorities)
        if len(owners) != count or len(successors) != count:
            raise exceptions.GameError("Vertex sequences differ in length")
        idents = list(range(count)) if idents is None else list(idents)
        names = [None] * count if names is None else list(names)
        return cls(
            Vertex(
                priority=priorities[index],
                owner=types.Owner(owners[index]),
                successors=tuple(successors[index]),
                ident=idents[index],
                name=names[index],
            )
            for index in range(count)
        )

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> typing.Iterator[Vertex]:
        return iter(self._vertices)

    def __getitem__(self, index: int) -> Vertex:
        return self._vertices[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParityGame):
            return NotImplemented
        return self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        n, m, d, eta = self.stats
        return f"<ParityGame n={n} m={m} d={d} eta={eta}>"

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        """The vertex records"""
        return self._vertices

    @property
    def n(self) -> int:
        """Number of vertices"""
        return len(self._vertices)

    @property
    def m(self) -> int:
        """Number of edges"""
        return sum(len(vertex.successors) for vertex in self._vertices)

    @property
    def d(self) -> int:
        """Least even number no smaller than any priority"""
        top = max((vertex.priority for vertex in self._vertices), default=0)
        return top + top % 2

    @property
    def eta(self) -> int:
        """Number of vertices with an odd priority"""
        return sum(vertex.priority % 2 for vertex in self._vertices)

    @property
    def stats(self) -> GameStats:
        """``(n, m, d, eta)``"""
        return GameStats(self.n, self.m, self.d, self.eta)

    def priority(self, index: int) -> int:
        """Priority of a vertex"""
        return self._vertices[index].priority

    def owner(self, index: int) -> types.Owner:
        """Owner of a vertex"""
        return self._vertices[index].owner

    def successors(self, index: int) -> tuple[int, ...]:
        """Successors of a vertex"""
        return self._vertices[index].successors

    def predecessors(self, index: int) -> tuple[int, ...]:
        """Predecessors of a vertex"""
        return self._predecessors[index]

    def edges(self) -> typing.Iterator[tuple[int, int]]:
        """All edges in vertex order"""
        for index, vertex in enumerate(self._vertices):
            for succ in vertex.successors:
                yield index, succ

    def ident(self, index: int) -> int:
        """File identifier of a vertex"""
        return self._vertices[index].ident

    def subgame(
        self, keep: typing.Iterable[int]
    ) -> tuple["ParityGame", tuple[int, ...]]:
        """Restrict the game to a vertex set.

        Edges leaving the set are dropped; every kept vertex must keep at
        least one successor.

        Returns:
            The restricted game, whose vertex ``i`` is vertex
            ``index_map[i]`` of this game, and ``index_map``.

        Raises:
            GameError: A kept vertex would lose all its successors.

        """
        index_map = tuple(sorted(set(keep)))
        position = {vertex: pos for pos, vertex in enumerate(index_map)}
        records = []
        for vertex in index_map:
            record = self._vertices[vertex]
            records.append(
                dataclasses.replace(
                    record,
                    successors=tuple(
                        position[succ]
                        for succ in record.successors
                        if succ in position
                    ),
                )
            )
        return ParityGame(records), index_map


def stats(game: ParityGame) -> GameStats:
    """Return ``(n, m, d, eta)`` for a game"""
    return game.stats


def dualize(game: ParityGame) -> ParityGame:
    """Dual game: every priority lowered by one and owners exchanged.

    Raises:
        GameError: The game has a vertex of priority 0.

    """
    log = logging.getLogger(f"{__name__}.dualize")
    if any(vertex.priority == 0 for vertex in game):
        raise exceptions.GameError(
            "Games with priority 0 vertices can not be dualized"
        )
    log.debug("Dualizing %r", game)
    return ParityGame(
        dataclasses.replace(
            vertex,
            priority=vertex.priority - 1,
            owner=vertex.owner.opponent,
        )
        for vertex in game
    )


@dataclasses.dataclass(frozen=True)
class SolveResult:
    """Winning regions and positional strategies.

    Attributes:
        even_wins: Vertices won by Even.
        odd_wins: Vertices won by Odd.
        even_strategy: Successor chosen at Even vertices in ``even_wins``.
        odd_strategy: Successor chosen at Odd vertices in ``odd_wins`` when
            the solver produced one.

    """

    even_wins: frozenset[int]
    odd_wins: frozenset[int]
    even_strategy: dict[int, int] = dataclasses.field(default_factory=dict)
    odd_strategy: None | dict[int, int] = None

    def swap(self) -> "SolveResult":
        """Exchange the players, mapping a dual game result back"""
        return SolveResult(
            even_wins=self.odd_wins,
            odd_wins=self.even_wins,
            even_strategy=dict(self.odd_strategy or {}),
            odd_strategy=dict(self.even_strategy),
        )

    def winner(self, index: int) -> types.Owner:
        """Player winning from a vertex"""
        return types.Owner.EVEN if index in self.even_wins else types.Owner.ODD

    def strategy(self) -> dict[int, int]:
        """Both strategies merged; they live on disjoint vertex sets"""
        merged = dict(self.even_strategy)
        merged.update(self.odd_strategy or {})
        return dict(sorted(merged.items()))

    def problems(self, game: ParityGame) -> list[str]:
        """Violations of the partition and strategy invariants"""
        found = []
        everything = frozenset(range(game.n))
        if self.even_wins & self.odd_wins:
            found.append("winning regions overlap")
        if self.even_wins | self.odd_wins != everything:
            found.append("winning regions do not cover the game")
        for player, region, strategy in (
            (types.Owner.EVEN, self.even_wins, self.even_strategy),
            (types.Owner.ODD, self.odd_wins, self.odd_strategy),
        ):
            if strategy is None:
                continue
            for vertex in region:
                if game.owner(vertex) != player:
                    continue
                choice = strategy.get(vertex)
                if choice is None:
                    found.append(f"{player.name} vertex {vertex} lacks a move")
                elif choice not in game.successors(vertex):
                    found.append(f"{vertex}->{choice} is not an edge")
                elif choice not in region:
                    found.append(f"{vertex}->{choice} leaves the region")
        return found
