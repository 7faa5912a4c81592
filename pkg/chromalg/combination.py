"""Finite linear combinations of diagrams

Shared base of the elements of the diagram algebras: a mapping from basis
diagrams to nonzero Laurent-polynomial coefficients, all in one variable.
Operands in different variables are converted to the coarsest variable both
reach (see `ParameterFrame.common`).

Classes:
    LinearCombination - Immutable linear combination of basis diagrams

Functions:
    linear_extension(element, func, zero) - Extend a map on diagrams linearly

License:    MIT, see LICENSE for more details
"""

from numbers import Rational

from .exceptions import ConversionPathError, DegreeMismatchError
from .laurent import LaurentPolynomial, ParameterFrame


class LinearCombination:
    """Immutable linear combination of basis diagrams.

    Basis diagrams must be hashable and provide `sort_key()`. Subclasses
    provide the product of two elements as `_product(other)`.

    Attributes:
        strands (int): Strand count shared by all diagrams
        variable (str): Variable of all coefficients
    """

    __slots__ = ['strands', 'variable', '_coeffs']

    default_variable = 'Q'

    def __init__(self, strands: int, coeffs=None, variable: str=None):
        self.strands = strands
        self.variable = variable or self.default_variable
        self._coeffs = {}
        for diagram, coeff in (coeffs or {}).items():
            coeff = self._scalar(coeff)
            if coeff:
                self._coeffs[diagram] = coeff

    def _scalar(self, c) -> LaurentPolynomial:
        if isinstance(c, LaurentPolynomial):
            return ParameterFrame.substitute(c, self.variable)
        return LaurentPolynomial.constant(self.variable, c)

    def _new(self, coeffs, variable=None):
        return self.__class__(self.strands, coeffs, variable or self.variable)

    @classmethod
    def zero(cls, strands: int, variable: str=None):
        return cls(strands, {}, variable)

    @classmethod
    def basis_element(cls, diagram, strands: int, coeff=1, variable: str=None):
        return cls(strands, {diagram: coeff}, variable)

    # Inspection

    def coefficient(self, diagram) -> LaurentPolynomial:
        return self._coeffs.get(diagram, LaurentPolynomial.zero(self.variable))

    def items(self) -> list:
        """Pairs (diagram, coefficient), in basis order"""
        return sorted(self._coeffs.items(), key=lambda item: item[0].sort_key())

    def support(self) -> list:
        return [d for d, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self.support())

    def __bool__(self):
        return bool(self._coeffs)

    # Variables

    def convert(self, variable: str):
        """Same element with coefficients substituted into `variable`"""
        if variable == self.variable:
            return self
        return self._new({d: ParameterFrame.substitute(c, variable)
                          for d, c in self._coeffs.items()}, variable)

    def _align(self, other):
        if not isinstance(other, self.__class__):
            raise TypeError('cannot combine %s with %s'
                            % (self.__class__.__name__, other.__class__.__name__))
        if other.strands != self.strands:
            raise DegreeMismatchError(self.strands, other.strands)
        variable = ParameterFrame.common(self.variable, other.variable)
        return self.convert(variable), other.convert(variable)

    # Vector space operations

    def __add__(self, other):
        a, b = self._align(other)
        coeffs = dict(a._coeffs)
        for d, c in b._coeffs.items():
            coeffs[d] = coeffs[d] + c if d in coeffs else c
        return a._new(coeffs)

    def __neg__(self):
        return self._new({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        """Multiply every coefficient by a rational or a Laurent polynomial"""
        if isinstance(scalar, LaurentPolynomial):
            variable = ParameterFrame.common(self.variable, scalar.variable)
            base = self.convert(variable)
            s = ParameterFrame.substitute(scalar, variable)
            return base._new({d: c * s for d, c in base._coeffs.items()})
        return self._new({d: c * scalar for d, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (LaurentPolynomial, Rational)):
            return self.scale(other)
        if isinstance(other, LinearCombination):
            a, b = self._align(other)
            return a._product(b)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentPolynomial, Rational)):
            return self.scale(other)
        return NotImplemented

    def _product(self, other):
        raise NotImplementedError()

    # Comparison

    def __eq__(self, other):
        if not isinstance(other, self.__class__):
            return NotImplemented
        if self.strands != other.strands:
            return False
        try:
            a, b = self._align(other)
        except ConversionPathError:
            return False
        return a._coeffs == b._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    # Rendering

    def render(self) -> str:
        """One `coefficient | diagram` line per term, in basis order"""
        if not self._coeffs:
            return '0'
        return '\n'.join('%s | %s' % (c.render(), d) for d, c in self.items())

    def to_data(self) -> list:
        """Machine format: list of [diagram text, coefficient triples]"""
        return [[str(d), c.to_triples()] for d, c in self.items()]

    def __str__(self):
        return self.render()

    def __repr__(self):
        return '<%s n=%d %s: %s>' % (self.__class__.__name__, self.strands, self.variable,
                                     ' + '.join('(%s)*%s' % (c.render(), d)
                                                for d, c in self.items()) or '0')


def linear_extension(element: LinearCombination, func, zero: LinearCombination):
    """Sum of coefficient * func(diagram) over the terms of `element`"""
    result = zero
    for diagram, coeff in element.items():
        result = result + func(diagram).scale(coeff)
    return result
