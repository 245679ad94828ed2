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

"""Tools for manipulating command line arguments"""

import argparse
import logging
import os
import re
import sys
import typing

# Local imports
from . import exceptions

logging.getLogger(__name__).addHandler(logging.NullHandler())

TRUE = ("1", "true", "yes", "on")
FALSE = ("0", "false", "no", "off")


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser raising :class:`UsageError` instead of exiting"""

    def error(self, message: str):
        raise exceptions.UsageError(f"{self.prog}: error: {message}")


class Word:
    """Comma separated list of vertex identifiers from the command line

    Parameter:
        word_spec: String like ``0,3,1``; ``-`` or the empty string is the
            empty word.

    """

    RE_WORD = re.compile(r"^\s*(?P<ids>[0-9]+(?:\s*,\s*[0-9]+)*)?\s*$")

    def __init__(self, word_spec: str):
        log = logging.getLogger(f"{__name__}.{__class__.__name__}")
        log.debug("Word Spec: %r", word_spec)
        self._word_spec = word_spec
        if word_spec.strip() == "-":
            self._ids = ()
            return
        mobj = self.RE_WORD.match(word_spec)
        if not mobj:
            raise ValueError(f"Invalid word spec detected: {word_spec}")
        ids = mobj.group("ids")
        self._ids = (
            tuple(int(item) for item in ids.split(",")) if ids else ()
        )

    def __iter__(self) -> typing.Iterator[int]:
        return iter(self._ids)

    def __len__(self) -> int:
        return len(self._ids)

    def __repr__(self) -> str:
        return f"<Word {self._word_spec!r}>"

    @property
    def ids(self) -> tuple[int, ...]:
        """The identifiers in order"""
        return self._ids


def positive(value: str) -> int:
    """argparse type for integers >= 1"""
    number = int(value)
    if number < 1:
        raise ValueError(f"{value} is not positive")
    return number


def non_negative(value: str) -> int:
    """argparse type for integers >= 0"""
    number = int(value)
    if number < 0:
        raise ValueError(f"{value} is negative")
    return number


def env_flag(name: str, default: bool = False) -> bool:
    """Read a boolean environment variable"""
    value = os.getenv(name)
    if value is None:
        return default
    value = value.strip().lower()
    if value in TRUE:
        return True
    if value in FALSE:
        return False
    logging.getLogger(f"{__name__}.env_flag").warning(
        "Ignoring %s=%r, expected one of %s", name, value, TRUE + FALSE
    )
    return default


def read_text(path: str) -> str:
    """Read a file given on the command line; ``-`` reads stdin

    Raises:
        InputError: The file can not be read.

    """
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as err:
        raise exceptions.InputError(f"Unable to read {path}: {err}") from err
