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

"""Command template."""

import io
import logging
import sys
import time
import typing

# 3rd party imports
import rich.markdown
import rich_argparse

# Local imports
from . import exceptions
from . import types
from . import utils

logging.getLogger(__name__).addHandler(logging.NullHandler())


class Command:
    """This class is a template for a libparity command.

    Parameters:
        stdout: Stream receiving the command output, ``sys.stdout`` if
            unset.
        stderr: Stream receiving diagnostics, ``sys.stderr`` if unset.

    Attributes:
        parser (argparse.ArgumentParser): To be used in your subclasses to
            add command line arguments within your :meth:`Command.cli`
            method.
        opts (argparse.Namespace): The options returned from parsing the
            command line arguments.  To be used in your
            :meth:`Command.execute` method.
        runtime (float): Seconds spent in :meth:`Command.execute`.

    """

    NAME = "libparity"
    DESCRIPTION = None
    EPILOG = None

    def __init__(
        self,
        stdout: None | typing.TextIO = None,
        stderr: None | typing.TextIO = None,
    ):
        log = logging.getLogger(f"{__name__}.Command")
        log.debug("Initialization")

        # Public variables
        self.parser = None
        self.opts = None
        self.runtime = 0.0
        self._start = None

        self._stdout = stdout
        self._stderr = stderr
        self._output = io.StringIO()
        self._status = types.ExitStatus.OK
        self._stats = {}
        self.init()

    def init(self):
        """Meant to be overridden if your command needs additional setup"""

    @property
    def stdout(self) -> typing.TextIO:
        """Output stream"""
        return sys.stdout if self._stdout is None else self._stdout

    @property
    def stderr(self) -> typing.TextIO:
        """Diagnostic stream"""
        return sys.stderr if self._stderr is None else self._stderr

    @property
    def status(self) -> types.ExitStatus:
        """(ExitStatus) Status of the command run.

        Defaults to :attr:`OK <libparity.types.ExitStatus.OK>`
        """
        return self._status

    @status.setter
    def status(self, value: types.ExitStatus):
        if not isinstance(value, types.ExitStatus):
            raise ValueError(
                "'status' must be an instance of 'libparity.types.ExitStatus'"
            )
        self._status = value

    @property
    def stats(self) -> dict[str, typing.Any]:
        """Statistics collected so far"""
        return dict(self._stats)

    def add_stat(self, key: str, value: typing.Any):
        """Record one statistic.

        Parameters:
            key: Name of the statistic.
            value: Its value, anything JSON can represent.

        """
        log = logging.getLogger(f"{__name__}.Command.add_stat")
        log.debug("%s=%s", repr(key), repr(value))
        if not isinstance(key, str):
            raise ValueError("When adding a stat 'key' must be a 'str'")
        self._stats[key] = value

    def add_stats(self, data: dict[str, typing.Any]):
        """Record every key/value pair of ``data``.

        Raises:
            ValueError: ``data`` is not a ``dict`` or a key is not a ``str``.

        """
        if not isinstance(data, dict):
            raise ValueError("When adding stats 'data' must be a 'dict'")
        for key, value in data.items():
            self.add_stat(key, value)

    def elapsed(self) -> float:
        """Seconds since :meth:`execute` was started"""
        if self._start is None:
            return 0.0
        return time.time() - self._start

    def write(self, text: str):
        """Queue output; it is printed once :meth:`execute` returns"""
        self._output.write(text)

    def cli(self):
        """Override me.

        Add the command line arguments of your command to
        :attr:`Command.parser`.

        """
        raise RuntimeError("You must implement Command.cli in subclass")

    def execute(self):
        """Override me.

        Do the work of your command; options are in :attr:`Command.opts`.

        """
        raise RuntimeError("You must implement Command.execute in subclass")

    def _parse_args(self, argv: None | typing.Sequence[str]):
        epilog = (
            rich.markdown.Markdown(self.EPILOG, style="argparse.text")
            if self.EPILOG
            else None
        )
        description = (
            rich.markdown.Markdown(self.DESCRIPTION, style="argparse.text")
            if self.DESCRIPTION
            else None
        )
        self.parser = utils.ArgumentParser(
            prog=self.NAME,
            formatter_class=rich_argparse.RichHelpFormatter,
            description=description,
            epilog=epilog,
        )

        self.parser.add_argument(
            "--debug",
            dest="debug",
            default=False,
            action="store_true",
            help="Turn on debug output",
        )
        self.parser.add_argument(
            "--log",
            dest="debug_log",
            default=None,
            help="Specify a file for debug output. Implies --debug",
        )
        self.parser.add_argument(
            "--verbose",
            dest="verbose",
            default=False,
            action="store_true",
            help="Turn on verbose output",
        )

        self.cli()
        self.opts = self.parser.parse_args(argv)
        if self.opts.debug_log:
            self.opts.debug = True

    def _setup_logging(self):
        handlers = []
        args = {}
        fmt = "%(asctime)s %(levelname)s %(name)s: %(message)s"
        level = logging.CRITICAL

        if self.opts.debug:
            level = logging.DEBUG
            if self.opts.debug_log:
                args = {
                    "filename": self.opts.debug_log,
                    "filemode": "a",
                }
            else:
                handlers.append(logging.StreamHandler(stream=self.stderr))
        else:
            handlers.append(logging.StreamHandler(stream=self.stderr))
            if self.opts.verbose:
                level = logging.INFO
            else:
                fmt = "%(name)s: %(message)s"
        if args:
            logging.basicConfig(level=level, format=fmt, **args)
        else:
            logging.basicConfig(level=level, format=fmt, handlers=handlers)
        logging.getLogger().setLevel(level)

    def finish(self):
        """Print the queued output"""
        self.stdout.write(self._output.getvalue())
        self.stdout.flush()

    def main(self, argv: None | typing.Sequence[str] = None) -> int:
        """Entry point into the class and its subclasses.

        Parses ``argv`` (``sys.argv[1:]`` when unset), runs
        :meth:`execute` and prints its output.  Library errors are reported
        on stderr and mapped to their exit status.

        Returns:
            The process exit status.

        """
        try:
            self._parse_args(argv)
        except exceptions.UsageError as err:
            self.stderr.write(f"{err.message}\n")
            return int(err.status)
        except SystemExit as err:
            # --help and --version
            return int(err.code or 0)
        self._setup_logging()

        self._start = time.time()
        try:
            self.execute()
        except exceptions.ParityError as err:
            self.stderr.write(f"{self.NAME}: {err.message}\n")
            self.add_stats(err.stats)
            self.status = err.status
        self.runtime = self.elapsed()
        self.finish()
        return int(self.status)
