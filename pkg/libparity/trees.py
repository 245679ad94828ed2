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

"""Ordered trees and their succinct adaptive coding.

An ordered tree is a prefix-closed set of navigation paths.  Directions are
non-negative integers in input trees and binary strings in coded trees.
:func:`succinct_code` relabels the directions below every node so that the
labels stay in order while every navigation path carries at most
``ceil(lg leaves)`` bits in total.
"""

import dataclasses
import functools
import logging
import re
import typing

# Local imports
from . import counters
from . import exceptions

logging.getLogger(__name__).addHandler(logging.NullHandler())

Direction = typing.Union[int, str]
Path = tuple[Direction, ...]

RE_PATH = re.compile(r"^\s*(?P<path>[0-9]+(?:\.[0-9]+)*)?\s*$")


def direction_key(direction: Direction):
    """Sort key of a branching direction"""
    if isinstance(direction, str):
        return counters.string_key(direction)
    return direction


def path_key(path: Path) -> tuple:
    """Sort key of a navigation path"""
    return tuple(direction_key(direction) for direction in path)


def code_bits(path: Path) -> int:
    """Total number of bits on a coded navigation path"""
    return sum(len(direction) for direction in path)


@dataclasses.dataclass(frozen=True)
class OrderedTree:
    """Prefix-closed set of navigation paths.

    Attributes:
        paths: Every node of the tree; the root is the empty path.

    Raises:
        TreeError: The root is missing or the set is not prefix-closed.

    """

    paths: frozenset[Path]

    def __post_init__(self):
        if () not in self.paths:
            raise exceptions.TreeError("Tree has no root")
        for path in self.paths:
            if path and path[:-1] not in self.paths:
                raise exceptions.TreeError(
                    f"Tree is not prefix-closed at {path!r}"
                )

    @classmethod
    def from_paths(cls, paths: typing.Iterable[Path]) -> "OrderedTree":
        """Prefix closure of a set of paths, root included"""
        closed = {()}
        for path in paths:
            path = tuple(path)
            for length in range(1, len(path) + 1):
                closed.add(path[:length])
        return cls(frozenset(closed))

    @functools.cached_property
    def _children(self) -> dict[Path, list[Direction]]:
        children = {path: [] for path in self.paths}
        for path in self.paths:
            if path:
                children[path[:-1]].append(path[-1])
        for directions in children.values():
            directions.sort(key=direction_key)
        return children

    @functools.cached_property
    def _weights(self) -> dict[Path, int]:
        weights = {}
        for path in sorted(self.paths, key=len, reverse=True):
            below = self._children[path]
            weights[path] = (
                sum(weights[path + (child,)] for child in below)
                if below
                else 1
            )
        return weights

    def children(self, path: Path = ()) -> list[Direction]:
        """Branching directions below a node in ascending order"""
        return list(self._children[path])

    def is_leaf(self, path: Path) -> bool:
        """True for nodes without children"""
        return not self._children[path]

    def weight(self, path: Path = ()) -> int:
        """Number of leaves below (or at) a node"""
        return self._weights[path]

    @property
    def leaves(self) -> list[Path]:
        """Leaves in tree order"""
        return sorted(
            (path for path in self.paths if self.is_leaf(path)), key=path_key
        )

    @property
    def leaf_count(self) -> int:
        """Number of leaves"""
        return self._weights[()]

    @property
    def height(self) -> int:
        """Length of the longest navigation path"""
        return max(len(path) for path in self.paths)

    def nodes(self) -> list[Path]:
        """All nodes in depth first tree order"""
        return sorted(self.paths, key=path_key)


def split_point(weights: typing.Sequence[int]) -> int:
    """Index of the direction ``M`` splitting weighted siblings.

    The smallest index such that the siblings strictly before it and the
    siblings strictly after it each weigh at most half of the total.
    """
    total = sum(weights)
    running = 0
    for index, weight in enumerate(weights):
        running += weight
        if 2 * running >= total:
            return index
    raise exceptions.TreeError("No siblings to split")


def code_siblings(
    directions: typing.Sequence[Direction], weights: typing.Sequence[int]
) -> dict[Direction, str]:
    """Binary codes for the ordered children of one node.

    The splitting direction gets the empty code, the lighter sides below
    and above it are coded recursively behind a leading ``0`` and ``1``.
    """
    codes = {}
    pending = [(0, len(directions), "")]
    while pending:
        low, high, prefix = pending.pop()
        if low >= high:
            continue
        middle = low + split_point(weights[low:high])
        codes[directions[middle]] = prefix
        pending.append((low, middle, prefix + "0"))
        pending.append((middle + 1, high, prefix + "1"))
    return codes


def succinct_code(
    tree: OrderedTree,
) -> tuple[OrderedTree, dict[Path, Path]]:
    """Code a tree so every path is a ``ceil(lg leaves)``-bounded counter.

    Parameters:
        tree: Tree with integer (or any ordered) directions.

    Returns:
        The coded tree and the node mapping from ``tree`` into it.

    """
    log = logging.getLogger(f"{__name__}.succinct_code")
    mapping = {(): ()}
    for path in sorted(tree.paths, key=len):
        directions = tree.children(path)
        if not directions:
            continue
        weights = [tree.weight(path + (child,)) for child in directions]
        codes = code_siblings(directions, weights)
        for child in directions:
            mapping[path + (child,)] = mapping[path] + (codes[child],)
    coded = OrderedTree(frozenset(mapping.values()))
    log.debug(
        "Coded %d nodes, %d leaves, widest path %d bits",
        len(mapping),
        tree.leaf_count,
        max(code_bits(path) for path in coded.paths),
    )
    return coded, mapping


def verify_coding(
    original: OrderedTree,
    coded: OrderedTree,
    mapping: typing.Mapping[Path, Path],
) -> bool:
    """Check a coding is an order preserving isomorphism within budget.

    Every coded path has to stay within ``ceil(lg leaves)`` bits of the
    original tree.
    """
    log = logging.getLogger(f"{__name__}.verify_coding")
    if set(mapping) != set(original.paths):
        log.debug("Mapping domain differs from the tree")
        return False
    if set(mapping.values()) != set(coded.paths):
        log.debug("Mapping image differs from the coded tree")
        return False
    if len(set(mapping.values())) != len(mapping):
        log.debug("Mapping is not injective")
        return False
    if mapping[()] != ():
        log.debug("Root not mapped to root")
        return False
    budget = counters.ceil_lg(original.leaf_count)
    for path, image in mapping.items():
        if len(path) != len(image):
            log.debug("%r changes depth", path)
            return False
        if path and mapping[path[:-1]] != image[:-1]:
            log.debug("%r changes parent", path)
            return False
        if any(
            not isinstance(direction, str) or direction.strip("01")
            for direction in image
        ):
            log.debug("%r is not coded in binary", image)
            return False
        if code_bits(image) > budget:
            log.debug("%r uses more than %d bits", image, budget)
            return False
    for path in original.paths:
        coded_children = [
            mapping[path + (child,)][-1] for child in original.children(path)
        ]
        for left, right in zip(coded_children, coded_children[1:]):
            if counters.compare_strings(left, right) >= 0:
                log.debug("Siblings below %r lose their order", path)
                return False
    return True


def parse_tree(text: str) -> OrderedTree:
    """Read one leaf path per line, directions separated by dots.

    Raises:
        ParseError: A line is not a dotted list of integers.
        TreeError: No paths were given.

    """
    leaves = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        mobj = RE_PATH.match(line)
        if not mobj or mobj.group("path") is None:
            column = len(line) - len(line.lstrip()) + 1
            raise exceptions.ParseError(
                f"Invalid tree path {line.strip()!r}", number, column
            )
        items = mobj.group("path").split(".")
        leaves.append(tuple(int(item) for item in items))
    if not leaves:
        raise exceptions.TreeError("Tree file holds no paths")
    return OrderedTree.from_paths(leaves)


def format_path(path: Path) -> str:
    """Dotted rendering; binary directions use ``e`` for the empty string"""
    if not path:
        return "<root>"
    return ".".join(
        (direction or "e") if isinstance(direction, str) else str(direction)
        for direction in path
    )


# Height 2 tree with 8 leaves used to illustrate the coding
SAMPLE_TREE = OrderedTree.from_paths(
    [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (2, 3), (2, 4)]
)
