"""chromalg exceptions

This module defines all exceptions raised by the chromalg library and the
command-line application. Every exception carries a user-friendly name, a
description and the process exit code the command-line interface reports for
it.

Exceptions:

    ChromalgError (2)

    (Arithmetic:)

    ArithmeticDomainError (2)
    VariableMismatchError (2)
    ConversionPathError (2)
    InexactDivisionError (1)
    EvaluationDomainError (2)

    (Algebra:)

    AlgebraError (2)
    DegreeMismatchError (2)
    GeneratorRangeError (2)

    (Graphs and diagrams:)

    GraphError (2)
    InvalidMapError (2)
    LoopContractionError (2)
    BoundaryMismatchError (2)
    NonPlanarError (2)

    (Runtime:)

    LimitExceededError (2)
    InputFormatError (2)
    VerificationError (1)

License:    MIT, see LICENSE for more details
"""


from .util import camel_case_split


EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_INPUT_ERROR = 2


class ChromalgError(Exception):
    """chromalg exception base class.

    Attributes:
        exit_code (int): Exit code reported by the command-line interface
        name (str): User-friendly error name
        description (str): User-friendly description of the error (default: None)
        data (any): Arbitrary additional data which can be provided with the
            exception (default: None)
    """

    exit_code = EXIT_INPUT_ERROR

    def __init__(self, description=None, name=None, data=None, exit_code=None):
        super().__init__(description)
        self.name = name or _exc_name_from_class(self.__class__)
        self.description = description
        self.data = data
        if exit_code is not None:
            self.exit_code = exit_code

    def __str__(self):
        if self.description is None:
            return self.name
        return '%s: %s' % (self.name, self.description)

    def __repr__(self):
        return '<%s: %s (%d)>' % (self.__class__.__name__, self.description, self.exit_code)


# Arithmetic

class ArithmeticDomainError(ChromalgError):
    """Base class for errors of exact Laurent-polynomial arithmetic."""


class VariableMismatchError(ArithmeticDomainError):
    """Operands are polynomials in different variables."""
    def __init__(self, left, right, **kwargs):
        super().__init__('variables %s and %s do not match' % (left, right),
                         data=(left, right), **kwargs)


class ConversionPathError(ArithmeticDomainError):
    """No substitution leads from one variable to the other."""
    def __init__(self, source, target, reason=None, **kwargs):
        description = 'no conversion from %s to %s' % (source, target)
        if reason:
            description += ' (%s)' % reason
        super().__init__(description, data=(source, target), **kwargs)


class InexactDivisionError(ArithmeticDomainError):
    """A division that must be exact left a nonzero remainder."""

    exit_code = 1


class EvaluationDomainError(ArithmeticDomainError):
    """Evaluation at zero of a polynomial with negative exponents."""


# Algebra

class AlgebraError(ChromalgError):
    """Base class for malformed algebra operations."""


class DegreeMismatchError(AlgebraError):
    """Operands live in algebras with different numbers of strands, or a
    strand count is negative."""
    def __init__(self, left, right, message=None, **kwargs):
        super().__init__(message or 'strand counts %s and %s do not match' % (left, right),
                         data=(left, right), **kwargs)


class GeneratorRangeError(AlgebraError):
    """A generator index lies outside the admissible range."""


# Graphs and diagrams

class GraphError(ChromalgError):
    """Base class for malformed graphs and diagrams."""


class InvalidMapError(GraphError):
    """The permutations do not describe a valid combinatorial map."""


class LoopContractionError(GraphError):
    """Contraction of a loop edge was requested."""


class BoundaryMismatchError(GraphError):
    """The operation does not fit the boundary points of the graph."""


class NonPlanarError(InvalidMapError):
    """The map fails the Euler check on the sphere."""


# Runtime

class LimitExceededError(ChromalgError):
    """An exponential state sum would exceed the configured size limit."""
    def __init__(self, what, size, limit, **kwargs):
        super().__init__('%s: %s exceeds the limit of %s' % (what, size, limit),
                         data=(size, limit), **kwargs)


class InputFormatError(ChromalgError):
    """Malformed input file.

    Attributes:
        path (str): Name of the offending file (or '<string>')
        line (int): 1-based line number
        column (int): 1-based column number
    """
    def __init__(self, message, path='<string>', line=1, column=1, **kwargs):
        super().__init__(message, **kwargs)
        self.path = path
        self.line = line
        self.column = column

    def __str__(self):
        return '%s:%d:%d: %s' % (self.path, self.line, self.column, self.description)


class VerificationError(ChromalgError):
    """An identity that must hold exactly has a nonzero residual."""

    exit_code = 1


# Utility functions

def _exc_name_from_class(cls):
    IGNORE = ['exception', 'error', 'warning']
    return ' '.join(w.capitalize() for w in camel_case_split(cls.__name__) if w.lower() not in IGNORE)
