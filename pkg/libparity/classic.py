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

"""Classic small progress measures over integer tuples.

Tuples are :class:`libparity.counters.Counter` values with integer
components, so they share the ordering and truncation of the succinct
counters.  The component for odd priority ``p`` ranges over
``0..#vertices of priority p``.
"""

import dataclasses
import logging
import typing

# Local imports
from . import counters
from . import game as pgame
from . import lifting
from . import trees
from . import types

logging.getLogger(__name__).addHandler(logging.NullHandler())

ClassicMeasure = list[counters.Counter]


def bounds(game: pgame.ParityGame) -> tuple[int, ...]:
    """Component bounds, highest odd priority first"""
    d = game.d
    histogram = [0] * (d + 1)
    for vertex in game:
        histogram[vertex.priority] += 1
    return tuple(histogram[priority] for priority in range(d - 1, 0, -2))


def truncate_classic(
    value: counters.Counter, priority: int, d: int
) -> counters.Counter:
    """Truncation of an integer tuple at ``priority``"""
    return counters.truncate(value, priority, d)


def lift_classic(
    limits: typing.Sequence[int],
    current: counters.Counter,
    target: counters.Counter,
    priority: int,
    d: int,
) -> counters.Counter:
    """Least full length tuple ``>= current`` progressive towards ``target``

    Parameters:
        limits: Per component bounds from :func:`bounds`.
        current: Tuple of the edge source.
        target: Tuple of the edge target.
        priority: Priority of the edge source.
        d: Even priority bound.

    """
    if current.is_top or target.is_top:
        return counters.TOP
    if counters.is_progressive_pair(current, target, priority, d):
        return current
    slots = d // 2
    keep = counters.kept(priority, d)
    parts = list(truncate_classic(target, priority, d).components)
    if priority % 2 == 0:
        return counters.Counter(tuple(parts) + (0,) * (slots - keep))
    # increment parts as a mixed radix number
    index = keep - 1
    while index >= 0 and parts[index] >= limits[index]:
        index -= 1
    if index < 0:
        return counters.TOP
    return counters.Counter(
        tuple(parts[:index]) + (parts[index] + 1,) + (0,) * (slots - index - 1)
    )


@dataclasses.dataclass(frozen=True)
class ClassicSolution:
    """Least classic progress measure and the regions it induces"""

    measure: ClassicMeasure
    even_wins: frozenset[int]
    lifts: int


def classic_solve(
    game: pgame.ParityGame, policy: types.Policy = types.Policy.FIFO
) -> ClassicSolution:
    """Least classic progress measure by lifting integer tuples.

    Even wins exactly the vertices whose tuple stays below top.
    """
    log = logging.getLogger(f"{__name__}.classic_solve")
    d = game.d
    limits = bounds(game)
    measure = [counters.Counter((0,) * (d // 2))] * game.n
    lifts = 0
    pending = lifting.WorkList(game.n, policy, 0)
    while pending:
        vertex = pending.pop()
        old = measure[vertex]
        if old.is_top:
            continue
        candidates = (
            lift_classic(
                limits, old, measure[succ], game.priority(vertex), d
            )
            for succ in game.successors(vertex)
        )
        if game.owner(vertex) == types.Owner.EVEN:
            new = min(candidates)
        else:
            new = max(candidates)
        if new == old:
            continue
        measure[vertex] = new
        lifts += 1
        for pred in game.predecessors(vertex):
            if not measure[pred].is_top:
                pending.push(pred)
    even_wins = frozenset(
        vertex for vertex in range(game.n) if not measure[vertex].is_top
    )
    log.debug("%d lifts, Even wins %d vertices", lifts, len(even_wins))
    return ClassicSolution(measure=measure, even_wins=even_wins, lifts=lifts)


def trim(measure: typing.Iterable[counters.Counter]) -> ClassicMeasure:
    """Cut every tuple after its last nonzero component; top passes"""
    trimmed = []
    for value in measure:
        if value.is_sentinel:
            trimmed.append(value)
            continue
        parts = list(value.components)
        while parts and parts[-1] == 0:
            parts.pop()
        trimmed.append(counters.Counter(tuple(parts)))
    return trimmed


def untrim(
    trimmed: typing.Iterable[counters.Counter], d: int
) -> ClassicMeasure:
    """Pad every tuple with zeros to ``d/2`` components"""
    slots = d // 2
    return [
        value
        if value.is_sentinel
        else counters.Counter(
            value.components + (0,) * (slots - len(value.components))
        )
        for value in trimmed
    ]


def _padded_key(value: counters.Counter, keep: int) -> tuple:
    if value.is_sentinel:
        return value.key
    parts = value.components[:keep]
    return (int(value.rank), parts + (0,) * (keep - len(parts)))


def is_trimmed_progress_measure(
    game: pgame.ParityGame,
    trimmed: typing.Sequence[counters.Counter],
    d: None | int = None,
    padded: bool = True,
) -> bool:
    """Check the required edges of a trimmed measure are progressive.

    With ``padded`` the truncations are compared after filling missing
    components with zeros, which is how a trimmed tuple stands for its
    untrimmed form.  Without it a strict prefix is smaller than its
    extensions, and an Even vertex whose least tuple is all zeros can lose
    her edge into a vertex whose tuple continues with zeros and then a
    nonzero component.
    """
    d = game.d if d is None else d

    def progressive(source: int, target: int) -> bool:
        priority = game.priority(source)
        sigma, tau = trimmed[source], trimmed[target]
        if not padded:
            return counters.is_progressive_pair(sigma, tau, priority, d)
        if priority % 2 and sigma.is_top and tau.is_top:
            return True
        keep = counters.kept(priority, d)
        left = _padded_key(sigma, keep)
        right = _padded_key(tau, keep)
        return left > right if priority % 2 else left >= right

    for vertex in range(game.n):
        moves = [progressive(vertex, succ) for succ in game.successors(vertex)]
        if game.owner(vertex) == types.Owner.EVEN:
            if not any(moves):
                return False
        elif not all(moves):
            return False
    return True


def image_tree(
    trimmed: typing.Iterable[counters.Counter],
) -> None | trees.OrderedTree:
    """Ordered tree spanned by the non-top tuples, None if there are none"""
    paths = [value.components for value in trimmed if not value.is_sentinel]
    if not paths:
        return None
    return trees.OrderedTree.from_paths(paths)


def leaf_count_of_trimmed(game: pgame.ParityGame) -> int:
    """Leaves of the image tree of the trimmed least progress measure"""
    log = logging.getLogger(f"{__name__}.leaf_count_of_trimmed")
    tree = image_tree(trim(classic_solve(game).measure))
    count = 0 if tree is None else tree.leaf_count
    log.debug("%d leaves for eta=%d", count, game.eta)
    return count
