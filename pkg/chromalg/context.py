"""Command-running context

A RunContext lives for one command invocation: it holds the application,
the parsed arguments, the effective configuration, a seeded random source
and the output stream, and hands exceptions raised by the command to the
application's exception handlers.

Classes:
    CState - Context states
    RunContext - Context of a single command invocation

License:    MIT, see LICENSE for more details
"""

import enum
import logging
import random
import sys
import time

from .exceptions import EXIT_SUCCESS
from .formats import render


logger = logging.getLogger(__name__)


class CState(enum.Enum):
    """Possible context states"""
    CONTEXT_CREATED = 1
    CONTEXT_INITIALIZED = 2
    COMMAND_DISPATCHED = 3
    OUTPUT_WRITTEN = 4
    CONTEXT_CLEANED = 5


class RunContext:
    """Context of a single command invocation.

    Attributes:
        app (Chromalg): The application
        command (Command): Command being run
        args (argparse.Namespace): Parsed arguments
        config (Config): Effective configuration
        rng (random.Random): Random source seeded with `--seed` or DEFAULT_SEED
        jobs (int): Worker processes for state sums
        fmt (str): Output format, 'text' or 'json'
        out (file): Output stream
        exit_code (int): Exit code of the invocation
    """

    __slots__ = ['app', 'command', 'args', 'config', 'rng', 'jobs', 'fmt', 'out',
                 'exit_code', '_started', '_state']

    def __init__(self, app, command, args, out=None):
        self.app = app
        self.command = command
        self.args = args
        self.config = app.config
        self.fmt = getattr(args, 'format', None) or 'text'
        self.out = out or sys.stdout

        self.rng = None
        self.jobs = 1
        self.exit_code = EXIT_SUCCESS
        self._started = None
        self._state = CState.CONTEXT_CREATED

    # Context creation, initialization and cleanup

    def __enter__(self):
        seed = self.config['DEFAULT_SEED'] if self.args.seed is None else self.args.seed
        self.rng = random.Random(seed)
        self.jobs = self.config['JOBS']
        self._started = time.perf_counter()
        self._state = CState.CONTEXT_INITIALIZED
        logger.debug('running %s (seed %s, %d jobs)', self.command.name, seed, self.jobs)
        return self

    def __exit__(self, exc_type, exc_value, exc_trace):
        elapsed = time.perf_counter() - self._started
        self._state = CState.CONTEXT_CLEANED
        if exc_type is not None and issubclass(exc_type, Exception):
            code = self.app.handle_exception(self, exc_value)
            if code is None:
                return False
            self.exit_code = code
            logger.debug('%s failed after %.3fs with exit code %d',
                         self.command.name, elapsed, code)
            return True
        logger.debug('%s finished in %.3fs', self.command.name, elapsed)
        return False

    # Actions

    def dispatch(self):
        """Run the command and write its result"""
        self._state = CState.COMMAND_DISPATCHED
        result = self.command.invoke(self, self.args)
        if result is not None:
            self.emit(result)
        return result

    def emit(self, value) -> None:
        print(render(value, self.fmt), file=self.out)
        self._state = CState.OUTPUT_WRITTEN

    def limit(self, key: str) -> int:
        """Size limit from the configuration"""
        return self.config.limit(key)

    def __repr__(self):
        return '<%s %s: %s>' % (self.__class__.__name__, self.command.name, self._state.name)
