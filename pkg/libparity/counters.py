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

"""Bounded adaptive multi-counters.

A counter is a tuple of binary strings, one per odd priority starting from
the highest (component ``j`` belongs to odd priority ``d - 1 - 2j``).
Binary strings are ordered so that ``0s < e < 1s`` (``e`` being the empty
string), which is the order of the dyadic rationals obtained by reading a
``0`` bit at depth ``i`` as ``-2**-i`` and a ``1`` bit as ``+2**-i``.
Tuples are compared lexicographically with a strict prefix being smaller.

Two sentinels extend the order: :data:`TOP` above and :data:`BOTTOM` below
every ordinary counter.  Both are fixed by every truncation.

The same :class:`Counter` type also holds tuples of non-negative integers,
which is what the classic progress measures in :mod:`libparity.classic` use.
"""

import bisect
import dataclasses
import fractions
import functools
import logging
import math
import typing

# Local imports
from . import exceptions
from . import types

logging.getLogger(__name__).addHandler(logging.NullHandler())

# Enumeration guard
MAX_BUDGET = 16
MAX_SLOTS = 16

Part = typing.Union[str, int]


def ceil_lg(value: int) -> int:
    """Return ``ceil(lg value)`` with ``ceil_lg(0) == ceil_lg(1) == 0``"""
    return 0 if value <= 1 else (value - 1).bit_length()


def _check_bits(bits: str) -> str:
    if not isinstance(bits, str) or bits.strip("01"):
        raise exceptions.CounterError(f"Not a binary string: {bits!r}")
    return bits


def string_key(bits: str) -> tuple[int, ...]:
    """Sort key realising the binary string order.

    ``0`` maps to 0, ``1`` maps to 2 and the string is closed with a 1, so a
    string sorts after every extension by ``0`` and before every extension
    by ``1``.
    """
    return tuple(0 if bit == "0" else 2 for bit in bits) + (1,)


def string_value(bits: str) -> fractions.Fraction:
    """Exact rational value of a binary string"""
    value = fractions.Fraction(0)
    for depth, bit in enumerate(_check_bits(bits), start=1):
        step = fractions.Fraction(1, 2**depth)
        value += step if bit == "1" else -step
    return value


def compare_strings(left: str, right: str) -> types.Ordering:
    """Compare two binary strings.

    Walks the common prefix; the first position where the strings part
    decides: a remaining ``0`` is below the end of a string, and a remaining
    ``1`` above it.

    Examples:
        >>> compare_strings("00", "0")
        <Ordering.LESS: -1>
        >>> compare_strings("", "10")
        <Ordering.LESS: -1>

    """
    _check_bits(left)
    _check_bits(right)
    index = 0
    while index < len(left) and index < len(right):
        if left[index] != right[index]:
            return (
                types.Ordering.LESS
                if left[index] == "0"
                else types.Ordering.GREATER
            )
        index += 1
    if len(left) == len(right):
        return types.Ordering.EQUAL
    if index == len(left):
        # left ended, right continues
        return (
            types.Ordering.GREATER
            if right[index] == "0"
            else types.Ordering.LESS
        )
    if left[index] == "0":
        return types.Ordering.LESS
    return types.Ordering.GREATER


def string_successor(bits: str, room: int) -> None | str:
    """Least string above ``bits`` with length at most ``room``.

    Returns ``None`` when ``bits`` is the greatest such string.
    """
    if len(bits) < room:
        return bits + "1" + "0" * (room - len(bits) - 1)
    stripped = bits.rstrip("1")
    if not stripped:
        return None
    return stripped[:-1]


def string_predecessor(bits: str, room: int) -> None | str:
    """Greatest string below ``bits`` with length at most ``room``.

    Returns ``None`` when ``bits`` is the least such string.
    """
    if len(bits) < room:
        return bits + "0" + "1" * (room - len(bits) - 1)
    stripped = bits.rstrip("0")
    if not stripped:
        return None
    return stripped[:-1]


def strings_upto(length: int) -> list[str]:
    """All binary strings of length at most ``length`` in ascending order"""

    def inorder(prefix: str) -> typing.Iterator[str]:
        if len(prefix) < length:
            yield from inorder(prefix + "0")
        yield prefix
        if len(prefix) < length:
            yield from inorder(prefix + "1")

    return list(inorder(""))


def _part_key(part: Part):
    return string_key(part) if isinstance(part, str) else part


@functools.total_ordering
@dataclasses.dataclass(frozen=True)
class Counter:
    """An element of the extended counter order.

    Attributes:
        components: The tuple of binary strings (or non-negative integers for
            classic tuples), highest odd priority first.  Always empty for
            the sentinels.
        rank: :class:`libparity.types.Rank` telling sentinels apart from
            ordinary counters.

    """

    components: tuple[Part, ...] = ()
    rank: types.Rank = types.Rank.COUNTER

    def __post_init__(self):
        if self.rank != types.Rank.COUNTER and self.components:
            raise exceptions.CounterError("Sentinels have no components")

    @functools.cached_property
    def key(self) -> tuple:
        """Sort key; counters compare by their keys"""
        return (
            int(self.rank),
            tuple(_part_key(part) for part in self.components),
        )

    def __lt__(self, other: "Counter") -> bool:
        if not isinstance(other, Counter):
            return NotImplemented
        return self.key < other.key

    def __len__(self) -> int:
        return len(self.components)

    @property
    def is_top(self) -> bool:
        """True for the top sentinel"""
        return self.rank == types.Rank.TOP

    @property
    def is_bottom(self) -> bool:
        """True for the bottom sentinel"""
        return self.rank == types.Rank.BOTTOM

    @property
    def is_sentinel(self) -> bool:
        """True for either sentinel"""
        return self.rank != types.Rank.COUNTER

    @property
    def bits(self) -> int:
        """Total length of the binary strings"""
        return sum(len(part) for part in self.components)

    def __str__(self) -> str:
        return render(self)


TOP = Counter(rank=types.Rank.TOP)
BOTTOM = Counter(rank=types.Rank.BOTTOM)
EMPTY = Counter()


def counter(*parts: Part) -> Counter:
    """Shorthand constructor: ``counter("01", "")``"""
    return Counter(tuple(parts))


def render(value: Counter) -> str:
    """Render a counter: ``(1,e,01)``, ``T`` for top and ``_`` for bottom"""
    if value.is_top:
        return "T"
    if value.is_bottom:
        return "_"
    parts = []
    for part in value.components:
        if isinstance(part, str):
            parts.append(part if part else "e")
        else:
            parts.append(str(part))
    return "(" + ",".join(parts) + ")"


def parse_counter(text: str) -> Counter:
    """Inverse of :func:`render` for binary string counters"""
    text = text.strip()
    if text == "T":
        return TOP
    if text == "_":
        return BOTTOM
    if not (text.startswith("(") and text.endswith(")")):
        raise exceptions.CounterError(f"Invalid counter text: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return EMPTY
    parts = []
    for item in body.split(","):
        item = item.strip()
        parts.append("" if item == "e" else _check_bits(item))
    return Counter(tuple(parts))


def kept(priority: int, d: int) -> int:
    """Number of components that survive truncation at ``priority``"""
    return max(0, (d - priority + 1) // 2)


def truncate(value: Counter, priority: int, d: int) -> Counter:
    """Drop the components of odd priorities below ``priority``.

    Sentinels are returned unchanged.
    """
    if value.is_sentinel:
        return value
    keep = kept(priority, d)
    if len(value.components) <= keep:
        return value
    return Counter(value.components[:keep])


def _truncated_key(value: Counter, keep: int) -> tuple:
    if value.is_sentinel:
        return value.key
    rank, parts = value.key
    return (rank, parts[:keep])


def is_progressive_pair(
    sigma: Counter,
    tau: Counter,
    priority: int,
    d: int,
    mode: types.Mode = types.Mode.LIFTING,
) -> bool:
    """Test ``sigma|p >= tau|p``, strictly when ``priority`` is odd.

    At odd priorities a pair of equal sentinels is progressive: two tops in
    lifting mode, two bottoms in separator mode.
    """
    odd = priority % 2 == 1
    if odd and sigma == tau:
        sentinel = TOP if mode == types.Mode.LIFTING else BOTTOM
        if sigma == sentinel:
            return True
    keep = kept(priority, d)
    left = _truncated_key(sigma, keep)
    right = _truncated_key(tau, keep)
    return left > right if odd else left >= right


@dataclasses.dataclass(frozen=True)
class CounterSpace:
    """The set of ``budget``-bounded adaptive ``i``-counters, ``i <= d/2``.

    Attributes:
        budget: Bit budget ``g``; ``ceil(lg eta)`` for a game.
        d: Even priority bound.

    """

    budget: int
    d: int

    def __post_init__(self):
        if self.budget < 0:
            raise exceptions.CounterError("Bit budget must be >= 0")
        if self.d < 0 or self.d % 2:
            raise exceptions.CounterError(
                f"Priority bound must be even and >= 0 not {self.d}"
            )

    @classmethod
    def for_game(cls, eta: int, d: int) -> "CounterSpace":
        """Space for a game with ``eta`` odd vertices and bound ``d``"""
        return cls(ceil_lg(eta), d)

    @property
    def slots(self) -> int:
        """Maximum number of components"""
        return self.d // 2

    def contains(self, value: Counter) -> bool:
        """Membership of an ordinary counter in the space"""
        if value.is_sentinel:
            return False
        if len(value.components) > self.slots:
            return False
        for part in value.components:
            if not isinstance(part, str) or part.strip("01"):
                return False
        return value.bits <= self.budget

    def check(self, value: Counter) -> Counter:
        """Raise :class:`CounterError` unless ``value`` is a member or a
        sentinel"""
        if not (value.is_sentinel or self.contains(value)):
            raise exceptions.CounterError(
                f"{render(value)} is not a counter of {self}"
            )
        return value

    def keep(self, priority: int) -> int:
        """Components surviving truncation at ``priority``"""
        return kept(priority, self.d)

    def truncate(self, value: Counter, priority: int) -> Counter:
        """Truncation within this space"""
        return truncate(value, priority, self.d)

    def compare(self, left: Counter, right: Counter) -> types.Ordering:
        """Compare two members of this space"""
        return compare_counters(left, right, self)

    def progressive(
        self,
        sigma: Counter,
        tau: Counter,
        priority: int,
        mode: types.Mode = types.Mode.LIFTING,
    ) -> bool:
        """Progressiveness of ``(sigma, tau)`` at ``priority``"""
        return is_progressive_pair(sigma, tau, priority, self.d, mode)

    def bottom(self) -> Counter:
        """Least ordinary counter, the empty tuple"""
        return EMPTY

    def maximum(self) -> Counter:
        """Greatest ordinary counter ``(1..1, e, ..., e)``"""
        if not self.slots:
            return EMPTY
        return Counter(("1" * self.budget,) + ("",) * (self.slots - 1))

    def max_tail(self, room: int, slots: int) -> tuple[str, ...]:
        """Greatest component sequence with ``room`` bits over ``slots``"""
        if slots <= 0:
            return ()
        return ("1" * room,) + ("",) * (slots - 1)

    def enumerate(self) -> list[Counter]:
        """All members in ascending order"""
        return enumerate_counters(self.budget, self.d)

    def size(self) -> int:
        """Number of members"""
        return exact_size(self.budget, self.d)

    def index(self, value: Counter) -> int:
        """Position of ``value`` in :meth:`enumerate`; ``TOP`` is last"""
        _guard(self.budget, self.d)
        keys = _sorted_keys(self.budget, self.d)
        if value.is_top:
            return len(keys)
        position = bisect.bisect_left(keys, value.key)
        if position == len(keys) or keys[position] != value.key:
            raise exceptions.CounterError(
                f"{render(value)} is not a counter of {self}"
            )
        return position


def compare_counters(
    left: Counter, right: Counter, space: None | CounterSpace = None
) -> types.Ordering:
    """Three way comparison of counters.

    Parameters:
        left: First counter.
        right: Second counter.
        space: When given, both counters must belong to it (or be
            sentinels).

    Raises:
        CounterError: A counter is outside ``space``.

    """
    if space is not None:
        space.check(left)
        space.check(right)
    return types.Ordering.of(left.key, right.key)


def _guard(budget: int, d: int):
    if budget > MAX_BUDGET or d // 2 > MAX_SLOTS or budget < 0 or d % 2:
        raise exceptions.CounterError(
            f"Enumeration limited to budget <= {MAX_BUDGET} and "
            f"d/2 <= {MAX_SLOTS} with even d (got g={budget}, d={d})"
        )


def iter_counters(budget: int, d: int) -> typing.Iterator[Counter]:
    """Every counter of ``budget`` bits and at most ``d/2`` components,
    ascending, generated lazily.

    Raises:
        CounterError: ``budget > 16`` or ``d/2 > 16``.

    """
    _guard(budget, d)
    strings = {room: strings_upto(room) for room in range(budget + 1)}

    def tuples(room: int, slots: int) -> typing.Iterator[tuple[str, ...]]:
        # a prefix sorts before its extensions, so yield it first
        yield ()
        if slots == 0:
            return
        for head in strings[room]:
            for rest in tuples(room - len(head), slots - 1):
                yield (head,) + rest

    for parts in tuples(budget, d // 2):
        yield Counter(parts)


@functools.lru_cache(maxsize=64)
def _enumerated(budget: int, d: int) -> tuple[Counter, ...]:
    log = logging.getLogger(f"{__name__}._enumerated")
    result = tuple(iter_counters(budget, d))
    log.debug("g=%d d=%d: %d counters", budget, d, len(result))
    return result


@functools.lru_cache(maxsize=64)
def _sorted_keys(budget: int, d: int) -> list:
    return [value.key for value in _enumerated(budget, d)]


def enumerate_counters(budget: int, d: int) -> list[Counter]:
    """Every counter of ``budget`` bits and at most ``d/2`` components.

    The list is sorted ascending and free of duplicates.

    Raises:
        CounterError: ``budget > 16`` or ``d/2 > 16``.

    """
    _guard(budget, d)
    return list(_enumerated(budget, d))


def exact_size(budget: int, d: int) -> int:
    """Closed form for ``len(enumerate_counters(budget, d))``"""
    total = 1
    for slots in range(1, d // 2 + 1):
        for length in range(budget + 1):
            total += 2**length * math.comb(length + slots - 1, slots - 1)
    return total


def parallel_sum(budget: int, d: int) -> int:
    """``sum(C(budget + i, i) for i in 0..d/2)``"""
    return sum(math.comb(budget + i, i) for i in range(d // 2 + 1))


def count_bound(budget: int, d: int) -> int:
    """Upper bound ``2**g * C(g + d/2 + 1, d/2)`` on the space size"""
    return 2**budget * math.comb(budget + d // 2 + 1, d // 2)


def storage_bits(value: Counter, d: int) -> int:
    """Bits taken by the packed encoding of a counter.

    The payload bits are stored back to back, followed by ``ceil(lg d)``
    bits per component recording where it ends.  Sentinels take a single
    flag bit.
    """
    if value.is_sentinel:
        return 1
    return value.bits + len(value.components) * ceil_lg(d)


def entry_bound(space: CounterSpace, slots: int) -> int:
    """Most bits a packed member of ``space`` with ``slots`` components
    may take: the bit budget plus one boundary field per component"""
    return max(1, space.budget + slots * ceil_lg(space.d))


@dataclasses.dataclass(frozen=True)
class PackedCounter:
    """A string counter packed into one integer.

    The component strings are concatenated into ``payload``, read as a
    binary number of ``sum(lengths)`` bits; ``lengths`` gives where each
    component ends.  Sentinels carry no payload.

    Attributes:
        payload: Concatenated component bits.
        lengths: Bit length of every component.
        rank: Sentinel or ordinary counter.

    """

    payload: int = 0
    lengths: tuple[int, ...] = ()
    rank: types.Rank = types.Rank.COUNTER

    @classmethod
    def pack(cls, value: Counter) -> "PackedCounter":
        """Pack a counter of binary strings.

        Raises:
            CounterError: A component is not a binary string.

        """
        if value.is_sentinel:
            return cls(rank=value.rank)
        if not all(isinstance(part, str) for part in value.components):
            raise exceptions.CounterError(
                f"Only string counters can be packed not {render(value)}"
            )
        bits = "".join(value.components)
        return cls(
            payload=int(bits, 2) if bits else 0,
            lengths=tuple(len(part) for part in value.components),
        )

    def unpack(self) -> Counter:
        """The counter this record encodes"""
        if self.rank != types.Rank.COUNTER:
            return Counter(rank=self.rank)
        total = sum(self.lengths)
        bits = format(self.payload, f"0{total}b") if total else ""
        parts = []
        start = 0
        for length in self.lengths:
            parts.append(bits[start : start + length])
            start += length
        return Counter(tuple(parts))

    @property
    def bits(self) -> int:
        """Payload bits"""
        return sum(self.lengths)

    def storage_bits(self, d: int) -> int:
        """Payload bits plus ``ceil(lg d)`` per component boundary; one
        flag bit for a sentinel"""
        if self.rank != types.Rank.COUNTER:
            return 1
        return self.bits + len(self.lengths) * ceil_lg(d)
