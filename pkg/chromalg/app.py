"""chromalg application, the central object of the command-line interface

The application is the root command group: it owns the configuration, the
logger and the argument parser, and runs each command inside a RunContext.

Classes:
    Chromalg - The command-line application

License:    MIT, see LICENSE for more details
"""

import argparse
import logging
import os
import sys

from collections.abc import Mapping, Sequence

from .commands import CommandGroup
from .context import RunContext
from .exceptions import EXIT_INPUT_ERROR
from .formats import FORMATS
from .util import Config, ImmutableDict


class Chromalg(CommandGroup):
    """The command-line application.

    Attributes:
        config (Config): Effective configuration, `default_config` updated
            with the `config` argument and, during a run, the global options
        base_path (str): Directory relative to which config files are looked up
        logger (logging.Logger): Application logger
    """

    __slots__ = ['config', 'base_path', 'logger']

    # Class in use for command-running context
    context_class = RunContext

    default_config = ImmutableDict({
        'RANKSUM_EDGE_LIMIT': 24,
        'PSI_EDGE_LIMIT': 24,
        'PHI_EDGE_LIMIT': 24,
        'NET_EDGE_LIMIT': 24,
        'BRACKET_CROSSING_LIMIT': 20,
        'CHROMATIC_CROSSING_LIMIT': 12,
        'CABLING_CROSSING_LIMIT': 8,
        'SPIN_STATE_LIMIT': 10 ** 8,
        'DEFAULT_SEED': 20090217,
        'RANDOM_GRAPH_COUNT': 20,
        'RANDOM_INNER_EDGES': 5,
        'GENERIC_D': '7/2',
        'JOBS': 1,
        'LOG_LEVEL': 'WARNING',
    })

    def __init__(self, name: str='chromalg', config: Mapping=None, logger=None,
                 commands: Sequence=None, groups: Sequence=None, **app_attrs):
        """Chromalg constructor.

        Args:
            name (optional, str): Program name
            config (optional, any): Config file name, mapping or object with
                uppercase parameters overriding `default_config`
            logger (optional, logging.Logger): Logger to use instead of the
                default stderr logger
            commands (optional, Sequence): Commands of the root group
            groups (optional, Sequence): Command groups
            **app_attrs: Attributes inherited by all groups and commands
        """
        super().__init__(name, commands, groups, **app_attrs)

        self.base_path = os.getcwd()
        self.config = Config.create(config, self.default_config, base_path=self.base_path)
        self.logger = logger or self._create_default_logger()

    # Running

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog=self.name,
            description='Exact computations in the chromatic, Temperley-Lieb and '
                        'SO(3) BMW algebras')
        parser.add_argument('--config', help='Python file with uppercase configuration keys')
        parser.add_argument('--seed', type=int, default=None,
                            help='seed of the randomized suites (default: %d)'
                                 % self.default_config['DEFAULT_SEED'])
        parser.add_argument('--jobs', type=int, default=None,
                            help='worker processes for state sums')
        parser.add_argument('--log-level', dest='log_level', default=None,
                            choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
        parser.add_argument('--format', choices=FORMATS, default='text')

        subparsers = parser.add_subparsers(dest='command_name', metavar='command')
        subparsers.required = True
        for command in self.all_commands():
            command.add_parser(subparsers)
        return parser

    def configure(self, args: argparse.Namespace) -> None:
        """Apply `--config`, `--jobs` and `--log-level` to the configuration"""
        if args.config is not None:
            self.config.from_pyfile(args.config)
        if args.jobs is not None:
            self.config['JOBS'] = max(1, args.jobs)
        if args.log_level is not None:
            self.config['LOG_LEVEL'] = args.log_level
        self.logger.setLevel(self.config['LOG_LEVEL'])

    def run(self, argv: Sequence=None, out=None) -> int:
        """Parse `argv`, run the selected command and return the exit code"""
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

        try:
            self.configure(args)
        except OSError as e:
            self.logger.error('%s: %s', args.config, e.strerror)
            return EXIT_INPUT_ERROR

        with self.context_class(self, args.command, args, out) as ctx:
            ctx.dispatch()
        return ctx.exit_code

    # Exception handling

    def handle_exception(self, ctx: RunContext, exc: Exception):
        """Exit code from the most specific handler for `exc`, or None"""
        handlers = sorted(h for hs in ctx.command.attrs.all('exception_handlers') for h in hs)
        for handler in handlers:
            if handler.handles(exc):
                return handler(ctx, exc)
        return None

    # Util

    def _create_default_logger(self) -> logging.Logger:
        logger = logging.getLogger('chromalg')
        if not any(getattr(h, '_chromalg_default', False) for h in logger.handlers):
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
            handler._chromalg_default = True
            logger.addHandler(handler)
        logger.setLevel(self.config['LOG_LEVEL'])
        return logger

    def __repr__(self):
        return '<%s %s: %d commands>' % (self.__class__.__name__, self.name,
                                         len(self.all_commands()))
