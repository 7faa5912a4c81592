"""Utility datastructures and functions

This module provides various utility functions and datastructures shared by
the algebra modules and the command-line application.

Classes:
    Config - Run configuration loaded from files, mappings or objects
    AttributeScope - Chain of attribute mappings searched innermost first
    ImmutableDict - Immutable variant of builtin dictionary

    DispatchParam - Description of a single Dispatchable object's parameter
    Dispatchable - Callable wrapper containing info about all its parameters
    ExceptionHandler - Exception handler wrapper class

Functions:
    exc_type_cmp(et1, et2) - Compare two exception types
    camel_case_split - Split a camelcase-capitalized string
    map_reduce(func, chunks, ...) - Fold results of `func` over chunks,
        optionally in a pool of worker processes

Note:
    Parts of the source code of Config class were borrowed from the Flask project.

License:    MIT, see LICENSE for more details
"""

import functools
import itertools
import operator
import os
import re
import sys
import types

from collections import ChainMap
from collections.abc import Callable, Mapping, MutableMapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from inspect import signature, Signature


# Generic sentinel value representing missing parameter/attribute
_MISSING = object()


# Generic datastructures

class Config(MutableMapping):
    """Run configuration: size limits, seed, worker count and log level.

    Values can be loaded from Python files, mappings or objects; only the
    uppercase names are taken, everything else in the source is ignored.

    Attributes:
        _base_path (str): Directory relative to which `from_pyfile` resolves
            file names
    """

    __slots__ = ['_data', '_base_path']

    def __init__(self, base_path: str=None, **defaults):
        self._data = defaults or {}
        self._base_path = base_path

    def __getitem__(self, key):
        return self._data[key]

    def __setitem__(self, key, value):
        self._data[key] = value

    def __delitem__(self, key):
        del self._data[key]

    def __contains__(self, key):
        return key in self._data

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def from_pyfile(self, filename: str) -> None:
        """Execute a Python file and take its uppercase globals.

        Raises:
            IOError: If the file cannot be read
        """
        filename = os.path.join(self._base_path or '', filename)
        module = types.ModuleType('config')
        module.__file__ = filename
        try:
            with open(filename, mode='rb') as config_file:
                exec(compile(config_file.read(), filename, 'exec'), module.__dict__)
        except IOError as e:
            e.strerror = 'Unable to load configuration file (%s)' % e.strerror
            raise
        self.from_object(module)

    def from_object(self, obj: object) -> None:
        self.from_dict({key: getattr(obj, key) for key in dir(obj)})

    def from_dict(self, obj: Mapping) -> None:
        self._data.update((key, value) for key, value in obj.items() if key.isupper())

    def limit(self, key: str) -> int:
        """Size limit stored under `key`; None means unlimited"""
        value = self._data[key]
        return sys.maxsize if value is None else int(value)

    @classmethod
    def create(cls, obj, defaults=None, base_path=None):
        """Create a Config from defaults overridden by `obj`.

        Args:
            obj (any): Python file name, mapping, object or None
            defaults (optional, Mapping): Default values
            base_path (optional, str): Directory for resolving file names
        """
        cfg = cls(base_path=base_path, **dict(defaults or {}))

        if obj is None:
            pass
        elif isinstance(obj, str):
            cfg.from_pyfile(obj)
        elif isinstance(obj, Mapping):
            cfg.from_dict(obj)
        else:
            cfg.from_object(obj)

        return cfg

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, self._data)


class AttributeScope(Mapping):
    """Immutable chain of attribute mappings, searched innermost first.

    Commands sit in the scope of their group, groups in the scope of the
    application, so an attribute set on a command shadows the same attribute
    set higher up.

    Methods (additional):
        all(self, key) - Every value of `key` along the chain, innermost first
        with_parent(self, parent) - Same scope, attached to another parent
    """

    __slots__ = ['_data', '_parent', '_chain']

    def __init__(self, _parent=None, **items):
        self._data = items
        self._parent = _parent
        self._chain = ChainMap(items, *(_parent._chain.maps if _parent is not None else ()))

    def __getitem__(self, key):
        return self._chain[key]

    def __len__(self):
        return len(self._chain)

    def __iter__(self):
        return iter(self._chain)

    def __repr__(self):
        return '<%s %s, parent=%s>' % (self.__class__.__name__, self._data, self._parent)

    @property
    def parent(self):
        return self._parent

    def all(self, key) -> list:
        return [scope[key] for scope in self._chain.maps if key in scope]

    def with_parent(self, parent: 'AttributeScope') -> 'AttributeScope':
        return AttributeScope(parent, **self._data)


class ImmutableDict(Mapping):
    """Immutable variant of builtin dictionary"""
    __slots__ = ['_data']

    def __init__(self, *args, **kwargs):
        if len(args) > 1:
            raise TypeError('%s expected at most 1 arguments, got %d'
                            % (self.__class__.__name__, len(args)))
        self._data = dict(*args, **kwargs)

    def __getitem__(self, key):
        return self._data[key]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __hash__(self):
        return hash(frozenset(self._data.items()))

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, self._data)


# Dispatching structures

class DispatchParam:
    """One parameter of a command or handler, as read from its signature.

    The annotation doubles as the argparse type and the default decides
    whether the parameter becomes a positional argument or an option.

    Attributes:
        name (str): Parameter name
        type_ (type): Annotated type
        default (optional, any): Default value, `_MISSING` when there is none
        **extras: Arbitrary extra info about the parameter
    """
    __slots__ = ['name', 'type_', 'default', 'extras']

    def __init__(self, name: str, type_: type, default=_MISSING, **extras):
        self.name = name
        self.type_ = type_
        self.default = default
        self.extras = extras

    @property
    def required(self) -> bool:
        return self.default is _MISSING

    @classmethod
    def from_signature(cls, param, type_required: bool=False, **extras):
        """Build a DispatchParam from an `inspect.Parameter`.

        Raises:
            TypeError: If `type_required` is set and the parameter is untyped
        """
        if type_required and param.annotation is Signature.empty:
            raise TypeError('Untyped parameter: %s' % param.name)
        default = param.default if param.default is not Signature.empty else _MISSING
        return cls(param.name, param.annotation, default, **extras)

    def __repr__(self):
        if self.required:
            return '<%s %s: %s>' % (self.__class__.__name__, self.name, self.type_)
        return '<%s %s: %s = %s>' % (self.__class__.__name__, self.name, self.type_,
                                     self.default)


class Dispatchable(Callable):
    """Callable together with the typed description of its parameters.

    Attributes:
        callable (Callable) - Wrapped callable
        parameters (Dict[str, DispatchParam]) - Parameters in declaration order
        return_type (type) - Return annotation
    """

    __slots__ = ['callable', 'parameters', 'return_type']

    def __init__(self, callable: Callable, parameters: dict, return_type: type):
        self.callable = callable
        self.parameters = parameters
        self.return_type = return_type

    @classmethod
    def from_signature(cls, callable: Callable):
        """Wrap `callable`; every parameter must be annotated"""
        if not isinstance(callable, Callable):
            raise TypeError('Object is not a callable: %s' % callable)

        call_sign = signature(callable)
        parameters = {name: DispatchParam.from_signature(param, type_required=True)
                      for name, param in call_sign.parameters.items()}
        return cls(callable, parameters, call_sign.return_annotation)

    def __call__(self, *args, **kwargs):
        return self.callable(*args, **kwargs)

    def __repr__(self):
        return '<%s (%s) %s -> %s>' % (self.__class__.__name__, self.callable,
                                       self.parameters, self.return_type)


@functools.total_ordering
class ExceptionHandler(Dispatchable):
    """Handler of one exception type, registered on a command group.

    Handlers are totally ordered so that the first match in a sorted list is
    the right one: a handler for a subclass sorts before handlers for its base
    classes, and ties go to the earlier registration.

    Attributes:
        exc_type (type) - Type of exceptions the handler handles
        attrs (AttributeScope) - Attributes inherited from the group
        order (int) - Registration index
    """

    __slots__ = ['exc_type', 'attrs', 'order']

    _counter = itertools.count()

    def __init__(self, exc_type: type, exc_handler: Callable,
                 config_params: AttributeScope):
        disp = Dispatchable.from_signature(exc_handler)
        super().__init__(exc_handler, disp.parameters, disp.return_type)

        self.exc_type = exc_type
        self.attrs = config_params
        self.order = next(self._counter)

    def handles(self, exc: BaseException) -> bool:
        return isinstance(exc, self.exc_type)

    def __eq__(self, other):
        return self._cmp(other) == 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    __hash__ = Dispatchable.__hash__

    def __repr__(self):
        return '<%s for %s (%s -> %s)>' % (self.__class__.__name__, self.exc_type,
                                          self.parameters, self.return_type)

    def _cmp(self, other) -> int:
        tcmp = exc_type_cmp(self.exc_type, other.exc_type)
        return tcmp if tcmp != 0 else _util_cmp(self.order, other.order)


# Utility functions

def exc_type_cmp(exc_type1: type, exc_type2: type):
    """Compare two exception types.

    Standard comparison function returning -1, 0 or 1. Tests if one type is a
    subclass of the other, then which one is more specific (lower in hierarchy),
    and if still a tie, which has lexicographically smaller name.
    """
    if exc_type1 is exc_type2:
        return 0
    if issubclass(exc_type1, exc_type2):
        return -1
    elif issubclass(exc_type2, exc_type1):
        return 1

    # Deeper types first
    dcmp = _util_cmp(len(exc_type2.__mro__), len(exc_type1.__mro__))

    return dcmp if dcmp != 0 else _util_cmp(exc_type1.__name__, exc_type2.__name__)


def _util_cmp(x, y):
    """Utility compare function, standard format"""
    return 0 if x == y else (-1 if x < y else 1)


def camel_case_split(identifier: str) -> list:
    """Split a camelcase-capitalized string into its sections"""
    matches = re.finditer('.+?(?:(?<=[a-z])(?=[A-Z])|(?<=[A-Z])(?=[A-Z][a-z])|$)', identifier)
    return [m.group(0) for m in matches]


def map_reduce(func: Callable, chunks: Sequence, jobs: int=1,
               reducer: Callable=operator.add, initial=_MISSING):
    """Apply `func` to every chunk and fold the results with `reducer`.

    With `jobs > 1` the chunks are mapped in a pool of worker processes, so
    `func` and its arguments must be picklable. Results are folded in chunk
    order either way, which keeps the outcome independent of `jobs`.

    Args:
        func (Callable): Function of a single chunk
        chunks (Sequence): Work items
        jobs (optional, int): Number of worker processes, default: 1
        reducer (optional, Callable): Binary folding function, default: `+`
        initial (optional, any): Initial value of the fold

    Returns:
        Folded result; `initial` when there are no chunks
    """
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(func, chunks))
    else:
        results = [func(c) for c in chunks]

    if initial is _MISSING:
        return functools.reduce(reducer, results)
    return functools.reduce(reducer, results, initial)
