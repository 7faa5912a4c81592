"""The Temperley-Lieb algebra and the map from the chromatic algebra

TL_m is spanned by noncrossing perfect matchings of 2m boundary points,
labelled 1..2m counterclockwise (bottom 1..m left to right, top m+1..2m
right to left). Products stack diagrams, and every closed circle is replaced
by a factor d. The generator e_i is d^-1 times the cup-cap diagram at
strands i, i+1, so that e_i^2 = e_i and e_i e_(i+1) e_i = d^-2 e_i.

The map phi sends a chromatic graph with n boundary points on each side to
TL_2n: every edge becomes the projector 1 - d^-1 cupcap on a pair of
parallel strands, and an r-valent vertex carries the weight d^((r-2)/2).

Classes:
    TLDiagram - Noncrossing perfect matching
    TLElement - Element of TL_m in the diagram basis

Functions:
    tl_multiply(a, b), tl_trace(a) - Algebra structure
    identity(m), cupcap(i, m), generator_e(i, m), jones_wenzl_p2(i, m) -
        Named elements
    phi(g), phi_element(a), phi_rank(n, d) - The map from the chromatic
        algebra
    transfer_matrix(n), potts_tl_partition(n, m), transfer_words(n, m),
        loop_configurations(n, m) - Potts transfer matrix
    verify_tl_relations(m) - Residuals of the defining relations

License:    MIT, see LICENSE for more details
"""

import functools
import itertools
import logging
import re

from fractions import Fraction

import sympy
from networkx.utils import UnionFind

from .chromatic import ChromaticElement, enumerate_basis, star_graph
from .combination import LinearCombination, linear_extension
from .exceptions import (AlgebraError, BoundaryMismatchError, GeneratorRangeError,
                         InputFormatError, LimitExceededError)
from .graph import EmbeddedGraph
from .laurent import LaurentPolynomial, ParameterFrame
from .util import map_reduce


logger = logging.getLogger(__name__)

PHI_EDGE_LIMIT = 24

_D = LaurentPolynomial.gen('d')

# edge subsets per work item of phi
_CHUNK_BITS = 10


class TLDiagram:
    """Noncrossing perfect matching of the boundary points 1..2m.

    Attributes:
        m (int): Strand count
        pairs (tuple): Sorted tuple of sorted label pairs
    """

    __slots__ = ['m', 'pairs']

    def __init__(self, m: int, pairs, check: bool=True):
        self.m = m
        self.pairs = tuple(sorted(tuple(sorted(p)) for p in pairs))
        if check:
            self._check()

    def _check(self):
        points = [x for p in self.pairs for x in p]
        if sorted(points) != list(range(1, 2 * self.m + 1)) or \
                any(len(p) != 2 for p in self.pairs):
            raise AlgebraError('%s is not a perfect matching of 1..%d'
                               % (self.pairs, 2 * self.m))
        for (a, b), (c, d) in itertools.combinations(self.pairs, 2):
            if a < c < b < d or c < a < d < b:
                raise AlgebraError('pairs (%d,%d) and (%d,%d) cross' % (a, b, c, d))

    @classmethod
    def parse(cls, text: str, m: int=None, path: str='<string>', line: int=1,
              column: int=1) -> 'TLDiagram':
        """Parse `(1,4)(2,3)`; the strand count is inferred unless given

        Raises:
            InputFormatError: On malformed text or an invalid matching
        """
        stripped = text.strip()
        if not re.fullmatch(r'(\(\s*\d+\s*,\s*\d+\s*\)\s*)*', stripped):
            raise InputFormatError('malformed matching %r' % stripped, path, line, column)
        pairs = [(int(a), int(b))
                 for a, b in re.findall(r'\(\s*(\d+)\s*,\s*(\d+)\s*\)', stripped)]
        try:
            return cls(len(pairs) if m is None else m, pairs)
        except AlgebraError as e:
            raise InputFormatError(e.description, path, line, column)

    def partner(self) -> dict:
        result = {}
        for a, b in self.pairs:
            result[a], result[b] = b, a
        return result

    def sort_key(self) -> tuple:
        return (self.m, self.pairs)

    def __eq__(self, other):
        if not isinstance(other, TLDiagram):
            return NotImplemented
        return self.m == other.m and self.pairs == other.pairs

    def __hash__(self):
        return hash((self.m, self.pairs))

    def __str__(self):
        return ''.join('(%d,%d)' % p for p in self.pairs) or '()'

    def __repr__(self):
        return '<%s m=%d %s>' % (self.__class__.__name__, self.m, self)


class TLElement(LinearCombination):
    """Element of TL_m; coefficients are Laurent polynomials in d (or A)"""

    __slots__ = []

    default_variable = 'd'

    @property
    def m(self) -> int:
        return self.strands

    @classmethod
    def from_diagram(cls, diagram: TLDiagram, coeff=1, variable: str=None):
        return cls(diagram.m, {diagram: coeff}, variable)

    @classmethod
    def from_graph_boundary(cls, g: EmbeddedGraph) -> 'TLElement':
        """The diagram of a graph made of boundary-to-boundary edges, with
        a factor d for every closed curve

        Raises:
            AlgebraError: If the graph has interior vertices or unequal sides
        """
        if g.interior_vertices() or g.n_bottom != g.n_top:
            raise AlgebraError('not a Temperley-Lieb diagram: %r' % g)
        label = {b: k for k, b in enumerate(g.boundary, 1)}
        pairs = [(label[d], label[a]) for d, a in g.edges()]
        return cls.from_diagram(TLDiagram(g.n_bottom, pairs), _D ** g.free_loops)

    def _product(self, other):
        return tl_multiply(self, other)


# Diagram calculus

def compose(lower: TLDiagram, upper: TLDiagram):
    """Stack `upper` on `lower`.

    Returns:
        (TLDiagram, int): resulting diagram and the number of closed circles
    """
    if lower.m != upper.m:
        raise AlgebraError('cannot compose TL_%d with TL_%d' % (lower.m, upper.m))
    m = lower.m
    uf = UnionFind([(s, p) for s in 'ab' for p in range(1, 2 * m + 1)])
    for side, diagram in (('a', lower), ('b', upper)):
        for x, y in diagram.pairs:
            uf.union((side, x), (side, y))
    for c in range(m):
        uf.union(('a', 2 * m - c), ('b', c + 1))

    outer, circles = [], 0
    for members in uf.to_sets():
        ends = sorted(p for s, p in members
                      if (s == 'a' and p <= m) or (s == 'b' and p > m))
        if ends:
            outer.append(ends)
        else:
            circles += 1
    return TLDiagram(m, outer, check=False), circles


def closure_circles(diagram: TLDiagram) -> int:
    """Circles of the closure joining top column c to bottom column c"""
    m = diagram.m
    uf = UnionFind(range(1, 2 * m + 1))
    for x, y in diagram.pairs:
        uf.union(x, y)
    for c in range(1, m + 1):
        uf.union(c, 2 * m + 1 - c)
    return len(list(uf.to_sets()))


def tl_multiply(a: TLElement, b: TLElement) -> TLElement:
    """Product a b, with `a` below `b`"""
    a, b = a._align(b)
    coeffs = {}
    for x, cx in a.items():
        for y, cy in b.items():
            diagram, circles = compose(x, y)
            term = cx * cy * ParameterFrame.substitute(_D ** circles, a.variable)
            coeffs[diagram] = coeffs[diagram] + term if diagram in coeffs else term
    return TLElement(a.m, coeffs, a.variable)


def tl_trace(a: TLElement) -> LaurentPolynomial:
    """Markov trace: d to the number of circles of the closure"""
    result = LaurentPolynomial.zero(a.variable)
    for diagram, c in a.items():
        result = result + c * ParameterFrame.substitute(_D ** closure_circles(diagram),
                                                        a.variable)
    return result


# Named elements

def identity_diagram(m: int) -> TLDiagram:
    return TLDiagram(m, [(c, 2 * m + 1 - c) for c in range(1, m + 1)], check=False)


def identity(m: int) -> TLElement:
    return TLElement.from_diagram(identity_diagram(m))


def cupcap_diagram(i: int, m: int) -> TLDiagram:
    if not 1 <= i <= m - 1:
        raise GeneratorRangeError('generator index %d outside 1..%d' % (i, m - 1))
    pairs = [(c, 2 * m + 1 - c) for c in range(1, m + 1) if c not in (i, i + 1)]
    pairs += [(i, i + 1), (2 * m - i, 2 * m + 1 - i)]
    return TLDiagram(m, pairs, check=False)


def cupcap(i: int, m: int) -> TLElement:
    """Cap on bottom points i, i+1 and cup on top points i, i+1"""
    return TLElement.from_diagram(cupcap_diagram(i, m))


def generator_e(i: int, m: int) -> TLElement:
    """e_i = d^-1 cupcap(i)"""
    return TLElement.from_diagram(cupcap_diagram(i, m), _D ** -1)


def jones_wenzl_p2(i: int, m: int) -> TLElement:
    """Projector 1 - d^-1 cupcap on strands i, i+1"""
    return identity(m) - cupcap(i, m).scale(_D ** -1)


def verify_tl_relations(m: int) -> list:
    """Residuals of the defining relations of TL_m; all must vanish

    Returns:
        list of (name, TLElement)
    """
    residuals = []
    e = {i: generator_e(i, m) for i in range(1, m)}
    for i in e:
        residuals.append(('e%d^2 = e%d' % (i, i), e[i] * e[i] - e[i]))
        for j in (i - 1, i + 1):
            if j in e:
                residuals.append(('e%d e%d e%d = d^-2 e%d' % (i, j, i, i),
                                  e[i] * e[j] * e[i] - e[i].scale(_D ** -2)))
        for j in e:
            if abs(i - j) >= 2 and i < j:
                residuals.append(('e%d e%d = e%d e%d' % (i, j, j, i),
                                  e[i] * e[j] - e[j] * e[i]))
    return residuals


# The map phi

def _port_labels(g: EmbeddedGraph) -> dict:
    """Port -> TL label; boundary point k (0-based) gives TL points 2k, 2k+1"""
    labels = {}
    for k, b in enumerate(g.boundary):
        labels[2 * b] = 2 * k + 1
        labels[2 * b + 1] = 2 * k + 2
    return labels


def phi(g: EmbeddedGraph, limit: int=PHI_EDGE_LIMIT, jobs: int=1) -> TLElement:
    """Image of a rectangle graph in TL_2n.

    Every dart x has two ports: P+(x) on its counterclockwise side, id 2x,
    and P-(x), id 2x + 1. The boundary of a vertex disk joins P+(x) to
    P-(sigma x). An edge of the subset S joins P+(x) to P-(alpha x) and P-(x)
    to P+(alpha x); any other edge turns back, joining P+(x) to P-(x). Every
    subset S contributes

        (-1/d)^(E - |S|) d^(#circles) (matching of the open curves)

    and the total carries the vertex weights d^(E - n_boundary/2 - V_interior)
    and (d^2 - 1) for every closed curve without vertices.

    Raises:
        LimitExceededError: If the edge count exceeds `limit`
        BoundaryMismatchError: If top and bottom point counts differ
    """
    if g.n_bottom != g.n_top:
        raise BoundaryMismatchError('%d bottom and %d top points' % (g.n_bottom, g.n_top))
    edges = g.edges()
    if len(edges) > limit:
        raise LimitExceededError('phi edge count', len(edges), limit)

    bits = min(len(edges), _CHUNK_BITS)
    chunks = [(s, s + 2 ** bits) for s in range(0, 2 ** len(edges), 2 ** bits)]
    coeffs = map_reduce(functools.partial(_phi_chunk, g), chunks, jobs,
                        reducer=_merge, initial={})
    logger.debug('phi: %d subsets, %d diagrams', 2 ** len(edges), len(coeffs))

    weight = len(edges) - g.n_boundary // 2 - len(g.interior_vertices())
    factor = _D ** weight * (_D ** 2 - 1) ** g.free_loops
    return TLElement(g.n_bottom * 2, coeffs).scale(factor)


def _merge(acc: dict, terms: dict) -> dict:
    for key, c in terms.items():
        acc[key] = acc[key] + c if key in acc else c
    return acc


def _phi_chunk(g: EmbeddedGraph, bounds) -> dict:
    edges = g.edges()
    labels = _port_labels(g)
    m = g.n_bottom * 2
    rims = [(2 * x, 2 * g.sigma[x] + 1) for x in range(g.size)
            if not g.is_boundary_dart(x)]

    terms = {}
    for mask in range(*bounds):
        uf = UnionFind(range(2 * g.size))
        for p, r in rims:
            uf.union(p, r)
        cut = 0
        for i, (x, y) in enumerate(edges):
            if mask >> i & 1:
                uf.union(2 * x, 2 * y + 1)
                uf.union(2 * x + 1, 2 * y)
            else:
                uf.union(2 * x, 2 * x + 1)
                uf.union(2 * y, 2 * y + 1)
                cut += 1

        pairs, circles = [], 0
        for members in uf.to_sets():
            ends = [labels[p] for p in members if p in labels]
            if ends:
                pairs.append(ends)
            else:
                circles += 1
        diagram = TLDiagram(m, pairs, check=False)
        term = LaurentPolynomial('d', {circles - cut: -1 if cut % 2 else 1})
        terms[diagram] = terms[diagram] + term if diagram in terms else term
    return terms


def phi_element(a: ChromaticElement, limit: int=PHI_EDGE_LIMIT) -> TLElement:
    """phi extended linearly; coefficients are converted from Q to d"""
    variable = ParameterFrame.common(a.variable, 'd')
    return linear_extension(a, lambda p: phi(star_graph(p), limit),
                            TLElement.zero(2 * a.n, variable))


def phi_rank(n: int, d_value=Fraction(7, 2)) -> int:
    """Rank of {phi(b) : b in the basis of C_n} in TL_2n.

    Args:
        n (int): Strand count
        d_value (optional, Fraction or None): Exact value of d, or None for
            a symbolic d

    Returns:
        int: Rank over the rationals (or over Q(d))
    """
    images = [phi(star_graph(p)) for p in enumerate_basis(n)]
    diagrams = sorted({x for image in images for x in image.support()},
                      key=TLDiagram.sort_key)

    def entry(c: LaurentPolynomial):
        if d_value is None:
            return c.to_sympy()
        value = c.evaluate(d_value)
        return sympy.Rational(value.numerator, value.denominator)

    matrix = sympy.Matrix([[entry(image.coefficient(x)) for x in diagrams]
                           for image in images])
    if d_value is None:
        matrix = matrix.applyfunc(sympy.together)
    rank = matrix.rank(simplify=d_value is None)
    logger.debug('phi rank for n=%d: %d of %d', n, rank, len(images))
    return rank


# Potts transfer matrix

def _transfer_factors(n: int) -> list:
    if n % 2:
        raise GeneratorRangeError('the transfer matrix needs an even strand count, got %d' % n)
    even = [k for k in range(2, n + 1, 2) if k <= n - 1]
    odd = [k for k in range(1, n + 1, 2) if k <= n - 1]
    return even + odd


def transfer_matrix(n: int) -> TLElement:
    """T = prod_j (1 + e_2j) prod_j (1 + e_(2j-1)) in TL_n.

    Generators outside 1..n-1 are dropped (open boundary).

    Raises:
        GeneratorRangeError: If n is odd
    """
    result = identity(n)
    for k in _transfer_factors(n):
        result = result * (identity(n) + generator_e(k, n))
    return result


def potts_tl_partition(n: int, m: int) -> LaurentPolynomial:
    """tr(T^m)"""
    t = transfer_matrix(n)
    power = identity(n)
    for _ in range(m):
        power = power * t
    return tl_trace(power)


def transfer_words(n: int, m: int) -> list:
    """Words in the generators obtained by expanding T^m, in expansion order"""
    factors = _transfer_factors(n) * m
    return [tuple(k for k, take in zip(factors, choice) if take)
            for choice in itertools.product((False, True), repeat=len(factors))]


def loop_configurations(n: int, m: int) -> list:
    """Loop configuration of every word of T^m.

    Each word stacks geometric cup-caps; its trace is d^(circles - length).

    Returns:
        list of (word, circles) with the circles of the stacked and closed
        configuration
    """
    result = []
    for word in transfer_words(n, m):
        diagram, circles = identity_diagram(n), 0
        for k in word:
            diagram, loops = compose(diagram, cupcap_diagram(k, n))
            circles += loops
        result.append((word, circles + closure_circles(diagram)))
    return result
