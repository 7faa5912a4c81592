"""The chromatic algebra

Elements of the chromatic algebra C_n are linear combinations of planar
graphs in a rectangle with n bottom and n top boundary points, modulo the
relations

    (1) G = G/e - G\\e          for an inner edge e which is not a loop
    (2) G = (Q - 1) G\\e        for an inner loop e, and likewise for a
                               closed curve without vertices
    (3) G = 0                  if G has a 1-valent interior vertex

Every element reduces to a combination of planar partitions of the 2n
boundary points without singleton blocks, each drawn as a star graph.
Boundary points are labelled 1..2n counterclockwise: bottom 1..n left to
right, then top n+1..2n right to left.

Classes:
    PlanarPartition - Noncrossing partition of the boundary points
    ChromaticElement - Element of C_n in the planar-partition basis
    ReductionCache - Thread-safe memo of reduced graphs

Functions:
    enumerate_basis(n) - Planar partitions without singletons
    star_graph(p) - Canonical drawing of a planar partition
    reduce(g) - Rewrite a graph in the basis
    psi_expansion(g) - Subset state sum of a graph
    multiply(a, b), reflect(a), trace(a), partial_trace(a), graph_trace(g),
        inner_product(a, b) - Algebra structure
    identity(n), cupcap(i, n), vertex4(i, n) - Named elements
    gram_polynomials(n), gram_matrix(n, Q), gram_spectrum(n, Q), beraha(k) -
        The trace pairing on the basis
    verify_trivalent_relations(n) - Residuals of the trivalent relations

License:    MIT, see LICENSE for more details
"""

import itertools
import logging
import math
import re
import threading

import numpy as np
from networkx.utils import UnionFind

from .combination import LinearCombination, linear_extension
from .exceptions import (AlgebraError, BoundaryMismatchError, DegreeMismatchError,
                         GeneratorRangeError, InputFormatError, LimitExceededError)
from .graph import EmbeddedGraph, stack
from .laurent import LaurentPolynomial, ParameterFrame
from .polynomials import ChromaticCache, dual_chromatic


logger = logging.getLogger(__name__)

PSI_EDGE_LIMIT = 24

_Q = LaurentPolynomial.gen('Q')


class PlanarPartition:
    """Noncrossing partition of the boundary points 1..2n.

    Attributes:
        n (int): Strand count
        blocks (tuple): Sorted tuple of sorted tuples of labels
    """

    __slots__ = ['n', 'blocks']

    def __init__(self, n: int, blocks, check: bool=True):
        self.n = n
        self.blocks = tuple(sorted(tuple(sorted(b)) for b in blocks))
        if check:
            self._check()

    def _check(self):
        points = [p for b in self.blocks for p in b]
        if sorted(points) != list(range(1, 2 * self.n + 1)):
            raise AlgebraError('blocks %s do not partition 1..%d' % (self.blocks, 2 * self.n))
        if any(len(b) < 2 for b in self.blocks):
            raise AlgebraError('singleton block in %s' % (self.blocks,))
        for a, b in itertools.combinations(self.blocks, 2):
            if _crossing(a, b):
                raise AlgebraError('blocks %s and %s cross' % (a, b))

    @classmethod
    def parse(cls, text: str, n: int=None, path: str='<string>', line: int=1,
              column: int=1) -> 'PlanarPartition':
        """Parse `{1,4}{2,3}`; the strand count is inferred unless given

        Raises:
            InputFormatError: On malformed text or an invalid partition
        """
        stripped = text.strip()
        if not re.fullmatch(r'(\{\s*\d+(\s*,\s*\d+)*\s*\}\s*)*|\{\s*\}', stripped):
            raise InputFormatError('malformed partition %r' % stripped, path, line, column)
        blocks = [tuple(int(p) for p in m.group(1).split(','))
                  for m in re.finditer(r'\{([^}]+)\}', stripped)]
        size = sum(len(b) for b in blocks)
        if n is None:
            n = size // 2
        try:
            return cls(n, blocks)
        except AlgebraError as e:
            raise InputFormatError(e.description, path, line, column)

    def edge_count(self) -> int:
        """Edges of the star drawing"""
        return sum(1 if len(b) == 2 else len(b) for b in self.blocks)

    def reflect(self) -> 'PlanarPartition':
        m = 2 * self.n + 1
        return PlanarPartition(self.n, [[m - p for p in b] for b in self.blocks], check=False)

    def sort_key(self) -> tuple:
        return (self.n, self.blocks)

    def __eq__(self, other):
        if not isinstance(other, PlanarPartition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __str__(self):
        if not self.blocks:
            return '{}'
        return ''.join('{%s}' % ','.join(map(str, b)) for b in self.blocks)

    def __repr__(self):
        return '<%s n=%d %s>' % (self.__class__.__name__, self.n, self)


def _crossing(a, b) -> bool:
    """Whether two disjoint blocks interleave in the circular order"""
    for a1, a2 in itertools.combinations(a, 2):
        for b1, b2 in itertools.combinations(b, 2):
            if a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2:
                return True
    return False


def enumerate_basis(n: int) -> list:
    """All noncrossing partitions of 1..2n without singleton blocks, sorted"""
    if n < 0:
        raise DegreeMismatchError(n, 0, 'strand count must be non-negative, got %d' % n)
    parts = [PlanarPartition(n, blocks, check=False)
             for blocks in _noncrossing(tuple(range(1, 2 * n + 1)))]
    return sorted(parts, key=PlanarPartition.sort_key)


def _noncrossing(points: tuple):
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for k in range(1, len(rest) + 1):
        for chosen in itertools.combinations(range(len(rest)), k):
            block = (first,) + tuple(rest[i] for i in chosen)
            bounds = (-1,) + chosen + (len(rest),)
            gaps = [rest[x + 1:y] for x, y in zip(bounds, bounds[1:])]
            for filling in itertools.product(*(list(_noncrossing(g)) for g in gaps)):
                yield (block,) + tuple(b for part in filling for b in part)


def star_graph(p: PlanarPartition) -> EmbeddedGraph:
    """Canonical drawing: a 2-block is an edge, a larger block is a star.

    The dart of boundary point k is k - 1; star centers list their darts
    counterclockwise in increasing label order.
    """
    size = 2 * p.n
    alpha, sigma = {}, {b: b for b in range(size)}
    next_dart = size
    for block in p.blocks:
        if len(block) == 2:
            x, y = block[0] - 1, block[1] - 1
            alpha[x], alpha[y] = y, x
            continue
        center = list(range(next_dart, next_dart + len(block)))
        next_dart += len(block)
        for label, c in zip(block, center):
            alpha[label - 1], alpha[c] = c, label - 1
        for i, c in enumerate(center):
            sigma[c] = center[(i + 1) % len(center)]
    return EmbeddedGraph.from_maps(alpha, sigma, range(size), p.n, p.n)


class ChromaticElement(LinearCombination):
    """Element of the chromatic algebra C_n in the planar-partition basis.

    Coefficients are Laurent polynomials in Q, or in any variable Q converts
    to (d, q, A).
    """

    __slots__ = []

    default_variable = 'Q'

    @property
    def n(self) -> int:
        return self.strands

    @classmethod
    def from_partition(cls, p: PlanarPartition, coeff=1, variable: str=None):
        return cls(p.n, {p: coeff}, variable)

    def _product(self, other):
        return multiply(self, other)


class ReductionCache:
    """Memo of reduced graphs keyed on their canonical form"""

    __slots__ = ['_data', '_lock']

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            return self._data.get(key)

    def put(self, key, element: ChromaticElement) -> None:
        with self._lock:
            self._data[key] = element

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __len__(self):
        with self._lock:
            return len(self._data)


default_reduction_cache = ReductionCache()


def _strand_count(g: EmbeddedGraph) -> int:
    if g.n_bottom != g.n_top:
        raise BoundaryMismatchError('%d bottom and %d top points'
                                    % (g.n_bottom, g.n_top))
    return g.n_bottom


def reduce(g: EmbeddedGraph, cache: ReductionCache=None,
           chi_cache: ChromaticCache=None) -> ChromaticElement:
    """Rewrite a rectangle graph in the planar-partition basis.

    Interior 2-valent vertices are smoothed and isolated vertices deleted;
    closed curves give a factor (Q - 1) and floating components the factor
    Q^-1 chi of their dual. The rest is rewritten by relations (1)-(3),
    always on the first inner edge in canonical dart order.

    Raises:
        BoundaryMismatchError: If top and bottom point counts differ
    """
    n = _strand_count(g)
    cache = default_reduction_cache if cache is None else cache

    g = g.smooth_2valent().delete_isolated()
    factor = (_Q - 1) ** g.free_loops
    g = g.without_free_loops()

    floating, g = g.floating_split()
    for component in floating:
        factor = factor * dual_chromatic(component, chi_cache).divide_exact(_Q)
    if not factor:
        return ChromaticElement.zero(n)

    return _reduce_attached(g, n, cache, chi_cache).scale(factor)


def _reduce_attached(g: EmbeddedGraph, n: int, cache, chi_cache) -> ChromaticElement:
    """Reduction of a graph whose components all touch the boundary"""
    key, order = g.canonical_form()
    cached = cache.get(key)
    if cached is not None:
        return cached

    interior = g.interior_vertices()
    if any(g.degree(v) == 1 for v in interior):
        result = ChromaticElement.zero(n)
    else:
        pivot = next((d for d in order if g.is_inner(d)), None)
        if pivot is None:
            result = ChromaticElement.from_partition(boundary_partition(g))
        elif g.is_loop(pivot):
            result = reduce(g.delete_edge(pivot), cache, chi_cache).scale(_Q - 1)
        else:
            result = reduce(g.contract_edge(pivot), cache, chi_cache) - \
                reduce(g.delete_edge(pivot), cache, chi_cache)

    cache.put(key, result)
    return result


def boundary_partition(g: EmbeddedGraph, edges=None) -> PlanarPartition:
    """Partition of the boundary points by connectivity.

    Args:
        g (EmbeddedGraph): Rectangle graph
        edges (optional, iterable): Dart pairs to connect along, default: all

    Returns:
        PlanarPartition, unchecked; may contain singleton blocks
    """
    uf = UnionFind(range(len(g.vertices())))
    for d, a in (g.edges() if edges is None else edges):
        uf.union(g.vertex_of(d), g.vertex_of(a))
    blocks = {}
    for label, b in enumerate(g.boundary, 1):
        blocks.setdefault(uf[g.vertex_of(b)], []).append(label)
    return PlanarPartition(_strand_count(g), blocks.values(), check=False)


def psi_expansion(g: EmbeddedGraph, limit: int=PSI_EDGE_LIMIT) -> ChromaticElement:
    """State sum over subsets S of the inner edges:

        psi(G) = sum_S (-1)^(inner - |S|) (-1)^E(b_S) Q^n(S) b_S

    where b_S partitions the boundary points by connectivity of G_S (all
    vertices, outer edges and S), E(b_S) is the edge count of its star
    drawing and n(S) the nullity of G_S. Partitions with a singleton block
    are dropped; closed curves give a factor (Q - 1).

    Raises:
        LimitExceededError: If the inner-edge count exceeds `limit`
    """
    n = _strand_count(g)
    inner, outer = g.inner_edges(), g.outer_edges()
    if len(inner) > limit:
        raise LimitExceededError('psi inner-edge count', len(inner), limit)

    n_vertices = len(g.vertices())
    coeffs = {}
    for mask in range(2 ** len(inner)):
        chosen = [e for i, e in enumerate(inner) if mask >> i & 1]
        uf = UnionFind(range(n_vertices))
        for d, a in outer + chosen:
            uf.union(g.vertex_of(d), g.vertex_of(a))
        components = len(set(uf[v] for v in range(n_vertices)))
        nullity = len(outer) + len(chosen) - n_vertices + components

        p = boundary_partition(g, outer + chosen)
        if any(len(b) < 2 for b in p.blocks):
            continue
        sign = -1 if (len(inner) - len(chosen) + p.edge_count()) % 2 else 1
        coeffs[p] = coeffs.get(p, 0) + _Q ** nullity * sign

    logger.debug('psi: %d subsets, %d partitions', 2 ** len(inner), len(coeffs))
    return ChromaticElement(n, coeffs).scale((_Q - 1) ** g.free_loops)


def multiply(a: ChromaticElement, b: ChromaticElement) -> ChromaticElement:
    """Vertical stacking: `a` below `b`"""
    a, b = a._align(b)
    result = ChromaticElement.zero(a.n, a.variable)
    for p, cp in a.items():
        for r, cr in b.items():
            term = reduce(stack(star_graph(p), star_graph(r)))
            result = result + term.scale(cp * cr)
    return result


def reflect(a: ChromaticElement) -> ChromaticElement:
    """Mirror image in a horizontal line, coefficients unchanged"""
    return ChromaticElement(a.n, {p.reflect(): c for p, c in a.items()}, a.variable)


def graph_trace(g: EmbeddedGraph, chi_cache: ChromaticCache=None) -> LaurentPolynomial:
    """Q^-1 chi of the dual of the closure of a rectangle graph"""
    return dual_chromatic(g.closure(), chi_cache).divide_exact(_Q)


def trace(a: ChromaticElement) -> LaurentPolynomial:
    """Markov trace, extended linearly.

    Raises:
        InexactDivisionError: If a chromatic polynomial of a dual is not
            divisible by Q
    """
    result = LaurentPolynomial.zero(a.variable)
    for p, c in a.items():
        result = result + c * ParameterFrame.substitute(graph_trace(star_graph(p)),
                                                        a.variable)
    return result


def partial_trace(a: ChromaticElement) -> ChromaticElement:
    """Close the rightmost strand, an element of C_(n-1)"""
    if a.n == 0:
        raise GeneratorRangeError('partial trace of C_0')
    return linear_extension(a, lambda p: reduce(star_graph(p).partial_closure()),
                            ChromaticElement.zero(a.n - 1, a.variable))


def inner_product(a: ChromaticElement, b: ChromaticElement) -> LaurentPolynomial:
    """tr(a b̄), with b̄ the reflection of b"""
    return trace(multiply(a, reflect(b)))


# Named elements

def identity_partition(n: int) -> PlanarPartition:
    return PlanarPartition(n, [(c, 2 * n + 1 - c) for c in range(1, n + 1)], check=False)


def identity(n: int) -> ChromaticElement:
    """n vertical strands"""
    return ChromaticElement.from_partition(identity_partition(n))


def _check_index(i: int, n: int):
    if not 1 <= i <= n - 1:
        raise GeneratorRangeError('generator index %d outside 1..%d' % (i, n - 1))


def _local(i: int, n: int, local_blocks) -> PlanarPartition:
    blocks = [(c, 2 * n + 1 - c) for c in range(1, n + 1) if c not in (i, i + 1)]
    return PlanarPartition(n, blocks + local_blocks, check=False)


def cupcap(i: int, n: int) -> ChromaticElement:
    """Cap joining bottom points i, i+1 and cup joining top points i, i+1"""
    _check_index(i, n)
    top_i, top_next = 2 * n + 1 - i, 2 * n - i
    return ChromaticElement.from_partition(_local(i, n, [(i, i + 1), (top_next, top_i)]))


def vertex4(i: int, n: int) -> ChromaticElement:
    """4-valent vertex joining strands i and i+1"""
    _check_index(i, n)
    return ChromaticElement.from_partition(
        _local(i, n, [(i, i + 1, 2 * n - i, 2 * n + 1 - i)]))


# The trace pairing

def gram_polynomials(n: int) -> list:
    """Exact matrix of <b, b'> over the basis of C_n"""
    basis = [ChromaticElement.from_partition(p) for p in enumerate_basis(n)]
    return [[inner_product(a, b) for b in basis] for a in basis]


def gram_matrix(n: int, Q: float) -> np.ndarray:
    """Gram matrix of the trace pairing evaluated at a real Q"""
    return np.array([[entry.eval_real(Q) for entry in row]
                     for row in gram_polynomials(n)], dtype=float)


def gram_spectrum(n: int, Q: float) -> np.ndarray:
    """Eigenvalues of the Gram matrix in increasing order"""
    return np.linalg.eigvalsh(gram_matrix(n, Q))


def beraha(k: int) -> float:
    """2 + 2 cos(2 pi / k)"""
    return 2 + 2 * math.cos(2 * math.pi / k)


# Trivalent relations

def _strands_with(n: int, i: int, alpha: dict, sigma: dict) -> EmbeddedGraph:
    """Rectangle graph: local darts at columns i-1, i (0-based) joined to the
    boundary, vertical strands elsewhere.

    Bottom column c has dart c, top column c has dart n + c.
    """
    for c in range(n):
        sigma[c], sigma[n + c] = c, n + c
        if c not in (i - 1, i):
            alpha[c], alpha[n + c] = n + c, c
    for d, a in list(alpha.items()):
        alpha[a] = d
    boundary = list(range(n)) + [n + c for c in reversed(range(n))]
    return EmbeddedGraph.from_maps(alpha, sigma, boundary, n, n, check=True)


def h_graph(i: int, n: int) -> EmbeddedGraph:
    """Strands i and i+1 joined by a horizontal inner edge"""
    _check_index(i, n)
    b0, b1, t0, t1 = i - 1, i, n + i - 1, n + i
    k = 2 * n
    left, right = [k, k + 1, k + 2], [k + 3, k + 4, k + 5]
    alpha = {left[0]: b0, left[1]: right[2], left[2]: t0,
             right[0]: b1, right[1]: t1}
    sigma = {}
    for v in (left, right):
        for j, x in enumerate(v):
            sigma[x] = v[(j + 1) % 3]
    return _strands_with(n, i, alpha, sigma)


def i_graph(i: int, n: int) -> EmbeddedGraph:
    """Bottom points i, i+1 and top points i, i+1 joined through a vertical
    inner edge"""
    _check_index(i, n)
    b0, b1, t0, t1 = i - 1, i, n + i - 1, n + i
    k = 2 * n
    lower, upper = [k, k + 1, k + 2], [k + 3, k + 4, k + 5]
    alpha = {lower[0]: b0, lower[1]: b1, lower[2]: upper[0],
             upper[1]: t1, upper[2]: t0}
    sigma = {}
    for v in (lower, upper):
        for j, x in enumerate(v):
            sigma[x] = v[(j + 1) % 3]
    return _strands_with(n, i, alpha, sigma)


def tadpole_graph(n: int) -> EmbeddedGraph:
    """Leftmost strand carrying an edge to a vertex with a loop"""
    if n < 1:
        raise GeneratorRangeError('tadpole needs a strand')
    k = 2 * n
    v, w = [k, k + 1, k + 2], [k + 3, k + 4, k + 5]
    alpha = {}
    for c in range(n):
        if c != 0:
            alpha[c], alpha[n + c] = n + c, c
    alpha.update({v[0]: 0, v[2]: n, v[1]: w[0], w[1]: w[2]})
    for d, a in list(alpha.items()):
        alpha[a] = d
    sigma = {c: c for c in range(2 * n)}
    for x in (v, w):
        for j, y in enumerate(x):
            sigma[y] = x[(j + 1) % 3]
    boundary = list(range(n)) + [n + c for c in reversed(range(n))]
    return EmbeddedGraph.from_maps(alpha, sigma, boundary, n, n, check=True)


def verify_trivalent_relations(n: int) -> list:
    """Residuals of the trivalent relations in C_n.

    For every position i the F relation

        H + (vertical strands) - I - cupcap = 0

    with H and I the two trivalent graphs at strands i, i+1, and the
    tadpole, which must reduce to zero.

    Returns:
        list of (name, ChromaticElement) pairs; every residual must be zero
    """
    if n < 2:
        raise GeneratorRangeError('trivalent relations need n >= 2')
    residuals = []
    for i in range(1, n):
        f = reduce(h_graph(i, n)) + identity(n) - reduce(i_graph(i, n)) - cupcap(i, n)
        residuals.append(('F relation at %d' % i, f))
    residuals.append(('tadpole', reduce(tadpole_graph(n))))
    return residuals
