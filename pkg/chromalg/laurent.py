"""Exact univariate Laurent polynomials

Laurent polynomials with rational coefficients, tagged by the name of their
variable, and the substitutions relating the parameters of the diagram
algebras:

    q = A^4,    d = -A^2 - A^-2,    Q = d^2 = q + 2 + q^-1

The variable `x` (Boltzmann weight of the Potts model) is not related to any
other variable.

Classes:
    LaurentPolynomial - Immutable Laurent polynomial in a tagged variable
    ParameterFrame - Substitution rules between the variables A, q, d and Q

Functions:
    poly_add(p, r), poly_mul(p, r), poly_neg(p) - Ring operations

License:    MIT, see LICENSE for more details
"""

import math
import re

from fractions import Fraction
from numbers import Rational

import sympy

from .exceptions import (ConversionPathError, EvaluationDomainError,
                         InexactDivisionError, InputFormatError,
                         VariableMismatchError)


VARIABLES = ('A', 'q', 'd', 'Q', 'x')


class LaurentPolynomial:
    """Laurent polynomial with exact rational coefficients.

    Values are immutable; zero coefficients are never stored, so two
    polynomials are equal iff their variables and term maps are equal.

    Attributes:
        variable (str): One of A, q, d, Q, x
        terms (dict): Mapping exponent -> nonzero Fraction
    """

    __slots__ = ['variable', '_terms', '_hash']

    def __init__(self, variable: str, terms=None):
        if variable not in VARIABLES:
            raise ValueError('Unknown variable: %s' % variable)
        self.variable = variable
        self._terms = {}
        for exp, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                self._terms[int(exp)] = coeff
        self._hash = None

    # Constructors

    @classmethod
    def zero(cls, variable: str) -> 'LaurentPolynomial':
        return cls(variable)

    @classmethod
    def constant(cls, variable: str, value) -> 'LaurentPolynomial':
        return cls(variable, {0: value})

    @classmethod
    def monomial(cls, variable: str, exponent: int=1, coeff=1) -> 'LaurentPolynomial':
        return cls(variable, {exponent: coeff})

    @classmethod
    def gen(cls, variable: str) -> 'LaurentPolynomial':
        """The variable itself"""
        return cls(variable, {1: 1})

    # Inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Pairs (exponent, coefficient), in increasing exponent order"""
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> int:
        if not self._terms:
            raise ValueError('Degree of the zero polynomial')
        return max(self._terms)

    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError('Low degree of the zero polynomial')
        return min(self._terms)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.degree()] if self._terms else Fraction(0)

    def is_even(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    # Ring operations

    def _coerce(self, other) -> 'LaurentPolynomial':
        if isinstance(other, LaurentPolynomial):
            if other.variable != self.variable:
                raise VariableMismatchError(self.variable, other.variable)
            return other
        if isinstance(other, Rational):
            return LaurentPolynomial.constant(self.variable, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial(self.variable, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.variable, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(self.variable, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.is_monomial():
                raise InexactDivisionError(
                    'negative power of a non-monomial: %s' % self.render())
            (e, c), = self._terms.items()
            return LaurentPolynomial(self.variable, {e * exponent: c ** exponent})
        result = LaurentPolynomial.constant(self.variable, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError('division by zero')
            return LaurentPolynomial(self.variable,
                                     {e: c / other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.divide_exact(other)

    def shift(self, k: int) -> 'LaurentPolynomial':
        """Multiply by variable^k"""
        return LaurentPolynomial(self.variable, {e + k: c for e, c in self._terms.items()})

    def divide_exact(self, divisor: 'LaurentPolynomial') -> 'LaurentPolynomial':
        """Exact division in the Laurent polynomial ring.

        Units of the ring are the monomials, so after factoring out the lowest
        powers both operands are ordinary polynomials with nonzero constant
        terms and the quotient is obtained by long division.

        Raises:
            InexactDivisionError: If the remainder is nonzero
            ZeroDivisionError: If the divisor is zero
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError('division by the zero polynomial')
        if self.is_zero():
            return self

        num_low, den_low = self.low_degree(), divisor.low_degree()
        num = [self._terms.get(e, Fraction(0))
               for e in range(num_low, self.degree() + 1)]
        den = [divisor._terms.get(e, Fraction(0))
               for e in range(den_low, divisor.degree() + 1)]

        if len(den) > len(num):
            raise InexactDivisionError('%s is not divisible by %s'
                                       % (self.render(), divisor.render()))

        # num, den in increasing order; divide from the top
        num = num[:]
        quotient = [Fraction(0)] * (len(num) - len(den) + 1)
        lead = den[-1]
        for k in range(len(quotient) - 1, -1, -1):
            c = num[k + len(den) - 1] / lead
            quotient[k] = c
            if c:
                for j, dc in enumerate(den):
                    num[k + j] -= c * dc

        if any(num[:len(den) - 1]):
            raise InexactDivisionError('%s is not divisible by %s'
                                       % (self.render(), divisor.render()))

        shift = num_low - den_low
        return LaurentPolynomial(self.variable,
                                 {k + shift: c for k, c in enumerate(quotient)})

    # Comparison

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.variable == other.variable and self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variable, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # Evaluation

    def evaluate(self, value) -> Fraction:
        """Exact value at a rational point.

        Raises:
            EvaluationDomainError: At zero when negative exponents are present
        """
        value = Fraction(value)
        if value == 0 and any(e < 0 for e in self._terms):
            raise EvaluationDomainError('evaluation of %s at 0' % self.render())
        return sum((c * value ** e for e, c in self._terms.items()), Fraction(0))

    def eval_real(self, value: float) -> float:
        """Floating-point value at a real point.

        Raises:
            EvaluationDomainError: At zero when negative exponents are present
        """
        if value == 0 and any(e < 0 for e in self._terms):
            raise EvaluationDomainError('evaluation of %s at 0' % self.render())
        return math.fsum(float(c) * float(value) ** e for e, c in self._terms.items())

    def to_sympy(self):
        """Equivalent sympy expression in the symbol named by the variable"""
        sym = sympy.Symbol(self.variable)
        return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * sym ** e
                           for e, c in self.items()])

    # Rendering and parsing

    def render(self) -> str:
        """Text rendering, terms sorted by descending exponent.

        e.g. `q^1 + 1 + q^-1`, `Q^3 - 3*Q^2 + 2*Q^1`, `1/2*q^-1`, `0`
        """
        if not self._terms:
            return '0'
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = '-' if c < 0 else '+'
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = '%s^%d' % (self.variable, e)
            else:
                body = '%s*%s^%d' % (mag, self.variable, e)
            if not parts:
                parts.append(body if sign == '+' else '-' + body)
            else:
                parts.append('%s %s' % (sign, body))
        return ' '.join(parts)

    def to_triples(self) -> list:
        """Machine format: list of [exponent, numerator, denominator]"""
        return [[e, c.numerator, c.denominator] for e, c in self.items()]

    @classmethod
    def from_triples(cls, variable: str, triples) -> 'LaurentPolynomial':
        return cls(variable, {e: Fraction(n, d) for e, n, d in triples})

    _TERM = re.compile(r'\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(\*)?\s*'
                       r'(?:([AqdQx])(?:\s*\^\s*(-?\d+))?)?\s*')

    @classmethod
    def parse(cls, text: str, variable: str=None, path: str='<string>',
              line: int=1, column: int=1) -> 'LaurentPolynomial':
        """Parse the text rendering back into a polynomial.

        Also accepts a bare variable (exponent 1) and a missing `*`.

        Args:
            text (str): Text to parse
            variable (optional, str): Expected variable; inferred from the text
                if not given, constants default to Q
            path, line, column: Location of `text`, for error messages

        Raises:
            InputFormatError: On malformed input
        """
        pos, terms, seen = 0, {}, variable
        stripped = text.strip()
        if not stripped:
            raise InputFormatError('empty polynomial', path, line, column)

        while pos < len(text):
            m = cls._TERM.match(text, pos)
            sign, coeff, star, var, exp = m.groups()
            if m.end() == pos or (coeff is None and var is None):
                if not text[pos:].strip():
                    break
                raise InputFormatError('unexpected character %r' % text[pos],
                                       path, line, column + pos)
            if terms and sign is None:
                raise InputFormatError('missing operator', path, line, column + pos)
            if star and var is None:
                raise InputFormatError('dangling *', path, line, column + pos)
            if var is not None:
                if seen is not None and var != seen:
                    raise InputFormatError('variable %s does not match %s' % (var, seen),
                                           path, line, column + pos)
                seen = var
            value = Fraction(coeff) if coeff is not None else Fraction(1)
            if sign == '-':
                value = -value
            e = (int(exp) if exp is not None else 1) if var is not None else 0
            terms[e] = terms.get(e, 0) + value
            pos = m.end()

        return cls(seen or 'Q', terms)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return '<%s %s>' % (self.__class__.__name__, self.render())


def poly_add(p: LaurentPolynomial, r: LaurentPolynomial) -> LaurentPolynomial:
    return p + r


def poly_mul(p: LaurentPolynomial, r: LaurentPolynomial) -> LaurentPolynomial:
    return p * r


def poly_neg(p: LaurentPolynomial) -> LaurentPolynomial:
    return -p


class ParameterFrame:
    """Substitution rules between the variables of the diagram algebras.

    Direct substitutions (each an image of the variable in the target):

        Q -> d:  d^2
        Q -> q:  q + 2 + q^-1
        d -> A:  -A^2 - A^-2
        q -> A:  A^4
        Q -> A:  A^4 + 2 + A^-4

    plus the partial inverse d -> Q (and d -> q through Q) for polynomials
    containing only even powers of d. A negative power is substituted only
    when the image is a monomial. The variable x is disconnected from the
    others.
    """

    # variable -> coarser variables it may be written in
    _IMAGES = {
        ('Q', 'd'): {2: 1},
        ('Q', 'q'): {1: 1, 0: 2, -1: 1},
        ('Q', 'A'): {4: 1, 0: 2, -4: 1},
        ('d', 'A'): {2: -1, -2: -1},
        ('q', 'A'): {4: 1},
    }

    # finer variables first
    _REFINEMENT = {
        'A': ('A',),
        'q': ('q', 'A'),
        'd': ('d', 'A'),
        'Q': ('Q', 'd', 'q', 'A'),
        'x': ('x',),
    }

    @classmethod
    def can_convert(cls, source: str, target: str) -> bool:
        return target in cls._REFINEMENT.get(source, ())

    @classmethod
    def common(cls, v: str, w: str) -> str:
        """Coarsest variable both `v` and `w` convert to.

        Raises:
            ConversionPathError: If there is none
        """
        if v == w:
            return v
        if cls.can_convert(v, w):
            return w
        if cls.can_convert(w, v):
            return v
        for target in cls._REFINEMENT.get(v, ()):
            if cls.can_convert(w, target):
                return target
        raise ConversionPathError(v, w)

    @classmethod
    def substitute(cls, p: LaurentPolynomial, target: str) -> LaurentPolynomial:
        """Exact image of `p` in the variable `target`.

        Raises:
            ConversionPathError: If no conversion path exists, or a negative
                power would be substituted by a non-monomial
        """
        source = p.variable
        if source == target:
            return p
        if (source, target) == ('d', 'Q'):
            return cls._halve(p, 'Q')
        if (source, target) == ('d', 'q'):
            return cls.substitute(cls._halve(p, 'Q'), 'q')
        if (source, target) not in cls._IMAGES:
            raise ConversionPathError(source, target)

        image = LaurentPolynomial(target, cls._IMAGES[(source, target)])
        if not image.is_monomial() and any(e < 0 for e in p.terms):
            raise ConversionPathError(source, target,
                                      'negative power of %s' % source)

        result = LaurentPolynomial.zero(target)
        for e, c in p.items():
            result = result + image ** e * c
        return result

    @classmethod
    def _halve(cls, p: LaurentPolynomial, target: str) -> LaurentPolynomial:
        if not p.is_even():
            raise ConversionPathError(p.variable, target, 'odd power of %s' % p.variable)
        return LaurentPolynomial(target, {e // 2: c for e, c in p.items()})


def convert(p: LaurentPolynomial, target: str) -> LaurentPolynomial:
    """Shortcut for `ParameterFrame.substitute`"""
    return ParameterFrame.substitute(p, target)

