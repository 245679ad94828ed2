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

"""PGSolver game files and solver result documents.

A game file holds an optional ``parity <maxId>;`` header and one
``<id> <priority> <owner> <succ>,<succ>,... ["name"];`` line per vertex.
Identifiers may be sparse; they are mapped to dense indices in ascending
order and mapped back in every result.
"""

import dataclasses
import json
import logging
import re
import typing

# Local imports
from . import exceptions
from . import game as pgame
from . import types

logging.getLogger(__name__).addHandler(logging.NullHandler())

RE_TOKEN = re.compile(
    r"\s*(?:(?P<number>[0-9]+)|(?P<name>\"[^\"]*\")"
    r"|(?P<punct>[;,])|(?P<word>[A-Za-z_]+)|(?P<bad>\S))"
)

HEADERS = ("parity", "start")


class Token(typing.NamedTuple):
    """A lexical token with its 1-based column"""

    kind: str
    text: str
    column: int


def tokenize(line: str, number: int) -> list[Token]:
    """Split one line into tokens.

    Raises:
        ParseError: An unexpected character was found.

    """
    tokens = []
    position = 0
    while position < len(line):
        mobj = RE_TOKEN.match(line, position)
        if mobj is None or mobj.end() == position:
            break
        kind = mobj.lastgroup
        token = Token(kind, mobj.group(kind), mobj.start(kind) + 1)
        if kind == "bad":
            raise exceptions.ParseError(
                f"Unexpected character {token.text!r}", number, token.column
            )
        tokens.append(token)
        position = mobj.end()
    return tokens


class _Cursor:
    """Token stream of one line"""

    def __init__(self, line: str, number: int):
        self.line = line
        self.number = number
        self.tokens = tokenize(line, number)
        self.index = 0

    @property
    def column(self) -> int:
        if self.index < len(self.tokens):
            return self.tokens[self.index].column
        return len(self.line.rstrip()) + 1

    def peek(self) -> None | Token:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def error(self, message: str) -> exceptions.ParseError:
        return exceptions.ParseError(message, self.number, self.column)

    def take(self, kind: str, what: str, text: None | str = None) -> Token:
        token = self.peek()
        if token is None or token.kind != kind:
            raise self.error(f"Expected {what}")
        if text is not None and token.text != text:
            raise self.error(f"Expected {what}")
        self.index += 1
        return token

    def end(self):
        self.take("punct", "';'", ";")
        if self.peek() is not None:
            raise self.error("Trailing input after ';'")


@dataclasses.dataclass
class _Record:
    ident: int
    priority: int
    owner: types.Owner
    successors: list[tuple[int, int, int]]
    name: None | str
    line: int


def _vertex(cursor: _Cursor) -> _Record:
    ident = int(cursor.take("number", "vertex id").text)
    priority = int(cursor.take("number", "priority").text)
    owner = cursor.take("number", "owner 0 or 1")
    if owner.text not in ("0", "1"):
        cursor.index -= 1
        raise cursor.error(f"Owner must be 0 or 1, not {owner.text}")
    successors = []
    while True:
        token = cursor.peek()
        if token is None or token.kind != "number":
            raise cursor.error(
                "Expected successor id"
                if successors
                else "Empty successor list"
            )
        successors.append((int(token.text), cursor.number, token.column))
        cursor.index += 1
        token = cursor.peek()
        if token is not None and token.text == ",":
            cursor.index += 1
            continue
        break
    name = None
    token = cursor.peek()
    if token is not None and token.kind == "name":
        name = token.text[1:-1]
        cursor.index += 1
    cursor.end()
    return _Record(
        ident=ident,
        priority=priority,
        owner=types.Owner(int(owner.text)),
        successors=successors,
        name=name,
        line=cursor.number,
    )


def parse(text: str) -> pgame.ParityGame:
    """Read a game in PGSolver format.

    Raises:
        ParseError: Syntax error, annotated with line and column.
        GameError: Duplicate ids, dangling successors or no vertices.

    """
    log = logging.getLogger(f"{__name__}.parse")
    records: dict[int, _Record] = {}
    declared = None
    for number, line in enumerate(text.splitlines(), start=1):
        cursor = _Cursor(line, number)
        first = cursor.peek()
        if first is None:
            continue
        if first.kind == "word":
            if first.text not in HEADERS:
                raise cursor.error(f"Unknown header {first.text!r}")
            cursor.index += 1
            value = int(cursor.take("number", "number").text)
            cursor.end()
            if first.text == "parity":
                declared = value
            continue
        record = _vertex(cursor)
        if record.ident in records:
            raise exceptions.GameError(
                f"line {number}: vertex {record.ident} defined twice"
            )
        records[record.ident] = record

    if not records:
        raise exceptions.GameError("Game file defines no vertices")
    if declared is not None and max(records) > declared:
        raise exceptions.GameError(
            f"Vertex {max(records)} exceeds the declared maximum {declared}"
        )
    idents = sorted(records)
    index = {ident: position for position, ident in enumerate(idents)}
    successors = []
    for ident in idents:
        targets = []
        for succ, line, column in records[ident].successors:
            if succ not in index:
                raise exceptions.GameError(
                    f"line {line}:{column}: vertex {ident} has undefined "
                    f"successor {succ}"
                )
            targets.append(index[succ])
        successors.append(targets)
    game = pgame.ParityGame.build(
        priorities=[records[ident].priority for ident in idents],
        owners=[records[ident].owner for ident in idents],
        successors=successors,
        idents=idents,
        names=[records[ident].name for ident in idents],
    )
    log.debug("Parsed %r", game)
    return game


def write_game(game: pgame.ParityGame) -> str:
    """Render a game in PGSolver format"""
    lines = [f"parity {max(vertex.ident for vertex in game)};"]
    for vertex in game:
        successors = ",".join(
            str(game.ident(succ)) for succ in vertex.successors
        )
        line = f"{vertex.ident} {vertex.priority} {int(vertex.owner)} "
        line += successors
        if vertex.name is not None:
            line += f' "{vertex.name}"'
        lines.append(line + ";")
    return "\n".join(lines) + "\n"


@dataclasses.dataclass(frozen=True)
class ResultDocument:
    """Solver output keyed by file identifiers.

    Attributes:
        even_wins: Identifiers won by Even, ascending.
        odd_wins: Identifiers won by Odd, ascending.
        strategy: Chosen successor per vertex, both players merged.
        stats: Solver statistics.

    """

    even_wins: tuple[int, ...]
    odd_wins: tuple[int, ...]
    strategy: dict[int, int] = dataclasses.field(default_factory=dict)
    stats: dict[str, typing.Any] = dataclasses.field(default_factory=dict)

    @classmethod
    def from_result(
        cls,
        game: pgame.ParityGame,
        result: pgame.SolveResult,
        stats: None | dict[str, typing.Any] = None,
    ) -> "ResultDocument":
        """Translate indices of a result back to file identifiers"""
        return cls(
            even_wins=tuple(sorted(game.ident(v) for v in result.even_wins)),
            odd_wins=tuple(sorted(game.ident(v) for v in result.odd_wins)),
            strategy=dict(
                sorted(
                    (game.ident(vertex), game.ident(succ))
                    for vertex, succ in result.strategy().items()
                )
            ),
            stats={} if stats is None else dict(stats),
        )

    def to_json(self) -> str:
        """Structured form"""
        return json.dumps(
            {
                "even_wins": list(self.even_wins),
                "odd_wins": list(self.odd_wins),
                "strategy": {
                    str(vertex): succ for vertex, succ in self.strategy.items()
                },
                "stats": self.stats,
            },
            indent=2,
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        """Read the structured form back.

        Raises:
            InputError: The text is not a result document.

        """
        try:
            data = json.loads(text)
            return cls(
                even_wins=tuple(int(v) for v in data["even_wins"]),
                odd_wins=tuple(int(v) for v in data["odd_wins"]),
                strategy={
                    int(vertex): int(succ)
                    for vertex, succ in data["strategy"].items()
                },
                stats=dict(data.get("stats", {})),
            )
        except (ValueError, KeyError, TypeError, AttributeError) as err:
            raise exceptions.InputError(
                f"Not a result document: {err}"
            ) from err

    def to_text(self) -> str:
        """Line oriented form"""
        lines = [
            "even: " + " ".join(str(v) for v in self.even_wins),
            "odd: " + " ".join(str(v) for v in self.odd_wins),
        ]
        lines.extend(
            f"strategy: {vertex}->{succ}"
            for vertex, succ in sorted(self.strategy.items())
        )
        lines.extend(
            f"stat: {key}={value}" for key, value in sorted(self.stats.items())
        )
        return "\n".join(line.rstrip() for line in lines) + "\n"


def emit(document: ResultDocument, structured: bool = False) -> str:
    """Serialize a result document as text or JSON"""
    if structured:
        return document.to_json() + "\n"
    return document.to_text()
