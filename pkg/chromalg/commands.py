"""Command groups

A command is any type-annotated callable whose first parameter is the
`RunContext`; its remaining parameters define its command-line surface.
Commands are collected in groups, which carry group-specific attributes
(inherited by their commands and subgroups unless overridden) and exception
handlers.

Classes:
    Command - Dispatchable command with its argparse surface
    CommandGroup - Group of related commands

License:    MIT, see LICENSE for more details
"""

from collections.abc import Callable, Sequence

from .util import AttributeScope, Dispatchable, ExceptionHandler


class Command(Dispatchable):
    """Dispatchable command with its argparse surface.

    Parameters without a default become positional arguments, the others
    `--options` (underscores become dashes, boolean defaults become flags).
    The annotation of a parameter is its argparse type.

    Attributes:
        name (str): Command name, by default the callable's name with
            dashes for underscores
        attrs (AttributeScope): Command-specific configuration parameters
    """

    __slots__ = ['name', 'attrs']

    def __init__(self, callable: Callable, attrs: AttributeScope):
        disp = Dispatchable.from_signature(callable)
        super().__init__(callable, disp.parameters, disp.return_type)
        self.attrs = attrs
        self.name = attrs.get('name') or callable.__name__.rstrip('_').replace('_', '-')

    @property
    def help(self) -> str:
        doc = self.callable.__doc__ or ''
        return doc.strip().split('\n', 1)[0]

    def arguments(self) -> list:
        """Parameters exposed on the command line, without the context"""
        return list(self.parameters.values())[1:]

    def add_parser(self, subparsers):
        parser = subparsers.add_parser(self.name, help=self.help, description=self.help)
        choices = self.attrs.get('choices', {})
        for param in self.arguments():
            kwargs = {}
            if param.name in choices:
                kwargs['choices'] = choices[param.name]
            if param.required:
                parser.add_argument(param.name, type=param.type_, **kwargs)
            elif param.type_ is bool:
                parser.add_argument('--' + param.name.replace('_', '-'), dest=param.name,
                                    action='store_true', default=param.default)
            else:
                parser.add_argument('--' + param.name.replace('_', '-'), dest=param.name,
                                    type=param.type_, default=param.default, **kwargs)
        parser.set_defaults(command=self)
        return parser

    def invoke(self, ctx, namespace):
        """Call the command with the values parsed into `namespace`"""
        kwargs = {p.name: getattr(namespace, p.name) for p in self.arguments()}
        return self(ctx, **kwargs)

    def __repr__(self):
        return '<%s %s: %s>' % (self.__class__.__name__, self.name,
                                [p.name for p in self.arguments()])


class CommandGroup:
    """CommandGroup object groups a set of related commands in a single whole.

    Provides means for defining group-specific configuration parameters
    (which then apply to all contained commands, handlers and subgroups,
    unless overridden) and exception handlers.

    Attributes:
        name (str): The name of the group
        commands (list): Commands belonging to this group
        groups (list): Subgroups added to this group
        attrs (AttributeScope): Dictionary-like object containing
            group-specific configuration parameters
    """

    __slots__ = ['name', 'commands', 'groups', 'attrs']

    def __init__(self, name: str, commands: Sequence=None, groups: Sequence=None,
                 **group_attrs):
        """CommandGroup object constructor.

        Args:
            name (str): Name of the group
            commands (optional, Sequence): Commands to add, each a tuple
                `(callable, [command_attrs: dict])`
            groups (optional, Sequence): Groups to add as subgroups
            **group_attrs: Optional configuration parameters for this group
        """
        group_attrs.setdefault('exception_handlers', [])
        self.name = name
        self.commands = []
        self.groups = []
        self.attrs = AttributeScope(**group_attrs)

        if commands is not None:
            self.add_commands(commands)

        if groups is not None:
            self.add_groups(groups)

    def add_command(self, command: Callable, **command_attrs) -> Command:
        """Add a command to the group.

        The callable's parameters must carry type annotations, they define
        the argument types on the command line.

        Args:
            command (Callable): Callable taking a RunContext and the parsed
                arguments
            **command_attrs: Optional configuration parameters for this
                command (`name`, `choices`, ...)
        """
        cmd = Command(command, AttributeScope(self.attrs, **command_attrs))
        self.commands.append(cmd)
        return cmd

    def add_commands(self, commands: Sequence):
        for command, *command_attrs in commands:
            self.add_command(command, **(command_attrs[0] if command_attrs else {}))

    def add_group(self, group: 'CommandGroup'):
        """Add a subgroup, which inherits the parameters of this group"""
        group._reparent(self.attrs)
        self.groups.append(group)

    def add_groups(self, groups: Sequence):
        for group in groups:
            self.add_group(group)

    def _reparent(self, parent: AttributeScope):
        self.attrs = self.attrs.with_parent(parent)
        for cmd in self.commands:
            cmd.attrs = cmd.attrs.with_parent(self.attrs)
        for group in self.groups:
            group._reparent(self.attrs)

    def all_commands(self) -> list:
        """Commands of this group and all its subgroups, depth first"""
        result = list(self.commands)
        for group in self.groups:
            result.extend(group.all_commands())
        return result

    def add_exception_handler(self, exc_type: type, exc_handler: Callable,
                              **handler_attrs):
        """Register a handler for exceptions of `exc_type` raised by the
        commands of this group.

        The handler receives the RunContext and the exception and returns
        the exit code. It handles all subtypes of `exc_type` unless a handler
        for a more specific type is registered.
        """
        self.attrs['exception_handlers'].append(
            ExceptionHandler(exc_type, exc_handler,
                             AttributeScope(self.attrs, **handler_attrs))
        )

    # Shortcut decorators

    def command(self, **command_attrs):
        """Shortcut decorator for `add_command`"""
        def _decorator(func):
            self.add_command(func, **command_attrs)
            return func
        return _decorator

    def exception(self, exc_type: type, **handler_attrs):
        """Shortcut decorator for `add_exception_handler`"""
        def _decorator(func):
            self.add_exception_handler(exc_type, func, **handler_attrs)
            return func
        return _decorator

    def __repr__(self):
        return '<%s %s: %s %s>' % (self.__class__.__name__, self.name,
                                   [c.name for c in self.commands],
                                   [g.name for g in self.groups])
