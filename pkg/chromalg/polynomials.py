"""Chromatic polynomials of multigraphs

The chromatic polynomial is computed by deletion-contraction over the blocks
of the graph, memoized on isomorphism classes, and independently by the
rank-sum expansion over edge subsets. Both accept a networkx (multi)graph or
an `EmbeddedGraph`, whose embedding is forgotten.

Classes:
    ChromaticCache - Thread-safe memo of chromatic polynomials keyed on
        isomorphism classes

Functions:
    chromatic_delcon(g) - Chromatic polynomial by deletion-contraction
    chromatic_ranksum(g) - Chromatic polynomial by subset enumeration
    dual_chromatic(g) - Chromatic polynomial of the planar dual
    flow_polynomial(g) - Flow polynomial by subset enumeration
    proper_colorings(g, k) - Brute-force count of proper k-colorings

License:    MIT, see LICENSE for more details
"""

import functools
import itertools
import logging
import threading

import networkx as nx
from networkx.utils import UnionFind

from .exceptions import LimitExceededError
from .graph import EmbeddedGraph
from .laurent import LaurentPolynomial
from .util import map_reduce


logger = logging.getLogger(__name__)

RANKSUM_EDGE_LIMIT = 24

_Q = LaurentPolynomial.gen('Q')
_ONE = LaurentPolynomial.constant('Q', 1)
_ZERO = LaurentPolynomial.zero('Q')

# subsets per work item of the subset sums
_CHUNK_BITS = 12


class ChromaticCache:
    """Memo of chromatic polynomials of connected simple graphs.

    Graphs are bucketed by vertex count, edge count and Weisfeiler-Lehman
    hash; a hit needs an exact isomorphism check inside the bucket. All
    access is guarded by a lock.

    Attributes:
        hits (int): Successful lookups
        misses (int): Failed lookups
    """

    __slots__ = ['_buckets', '_lock', 'hits', 'misses']

    def __init__(self):
        self._buckets = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    @staticmethod
    def _key(g: nx.Graph) -> tuple:
        return (g.number_of_nodes(), g.number_of_edges(),
                nx.weisfeiler_lehman_graph_hash(g))

    def get(self, g: nx.Graph):
        """Cached polynomial of a graph isomorphic to `g`, or None"""
        key = self._key(g)
        with self._lock:
            for h, poly in self._buckets.get(key, ()):
                if nx.is_isomorphic(g, h):
                    self.hits += 1
                    return poly
            self.misses += 1
        return None

    def put(self, g: nx.Graph, poly: LaurentPolynomial) -> None:
        key = self._key(g)
        h = nx.convert_node_labels_to_integers(g)
        with self._lock:
            self._buckets.setdefault(key, []).append((h, poly))

    def clear(self) -> None:
        with self._lock:
            self._buckets.clear()
            self.hits = self.misses = 0

    def __len__(self):
        with self._lock:
            return sum(len(b) for b in self._buckets.values())

    def __repr__(self):
        return '<%s size=%d hits=%d misses=%d>' % (self.__class__.__name__, len(self),
                                                   self.hits, self.misses)


default_cache = ChromaticCache()


def _as_multigraph(g) -> nx.MultiGraph:
    if isinstance(g, EmbeddedGraph):
        return g.to_multigraph()
    return g


def chromatic_delcon(g, cache: ChromaticCache=None) -> LaurentPolynomial:
    """Chromatic polynomial by deletion-contraction.

    Loops give 0, parallel edges are collapsed, the result is the product over
    connected components, and every component is split into its blocks:

        chi(G) = prod chi(B) / Q^(#blocks - 1)

    Inside a block the recursion chi(G) = chi(G - e) - chi(G / e) is memoized
    on isomorphism classes.

    Args:
        g (nx.Graph, nx.MultiGraph or EmbeddedGraph): Input graph
        cache (optional, ChromaticCache): Memo, default: the shared cache

    Returns:
        LaurentPolynomial: Polynomial in Q with nonnegative exponents
    """
    g = _as_multigraph(g)
    cache = default_cache if cache is None else cache

    if nx.number_of_selfloops(g):
        return _ZERO

    simple = nx.Graph(g)
    result = _ONE
    for nodes in nx.connected_components(simple):
        result = result * _connected(simple.subgraph(nodes).copy(), cache)
    return result


def _tree(n_edges: int) -> LaurentPolynomial:
    return _Q * (_Q - 1) ** n_edges


def _connected(g: nx.Graph, cache: ChromaticCache) -> LaurentPolynomial:
    """Chromatic polynomial of a connected simple graph"""
    n, m = g.number_of_nodes(), g.number_of_edges()
    if m == n - 1:
        return _tree(m)

    cached = cache.get(g)
    if cached is not None:
        return cached

    blocks = list(nx.biconnected_component_edges(g))
    if len(blocks) > 1:
        result = _ONE
        for edges in blocks:
            result = result * (_tree(1) if len(edges) == 1
                               else _connected(nx.Graph(edges), cache))
        result = result.divide_exact(_Q ** (len(blocks) - 1))
    else:
        u, v = next(iter(g.edges()))
        deleted = g.copy()
        deleted.remove_edge(u, v)
        contracted = nx.Graph(nx.contracted_nodes(g, u, v, self_loops=False).edges())
        result = _connected(deleted, cache) - _connected(contracted, cache)

    cache.put(g, result)
    return result


def chromatic_ranksum(g, limit: int=RANKSUM_EDGE_LIMIT, jobs: int=1) -> LaurentPolynomial:
    """Chromatic polynomial by the rank-sum expansion.

        chi(G) = sum over S subset of E of (-1)^|S| Q^k(S)

    where k(S) counts the components of (V, S) over all vertices of G.

    Args:
        g (nx.MultiGraph or EmbeddedGraph): Input graph
        limit (optional, int): Maximum edge count
        jobs (optional, int): Worker processes

    Raises:
        LimitExceededError: If the edge count exceeds `limit`
    """
    g = _as_multigraph(g)
    nodes = list(g.nodes())
    edges = [(u, v) for u, v, *_ in g.edges()]
    if len(edges) > limit:
        raise LimitExceededError('rank-sum edge count', len(edges), limit)

    terms = _subset_sum(functools.partial(_ranksum_chunk, nodes, edges), len(edges), jobs)
    logger.debug('rank sum over %d subsets', 2 ** len(edges))
    return LaurentPolynomial('Q', terms)


def flow_polynomial(g, limit: int=RANKSUM_EDGE_LIMIT, jobs: int=1) -> LaurentPolynomial:
    """Flow polynomial by subset enumeration.

        F(G) = sum over S subset of E of (-1)^(|E| - |S|) Q^n(S)

    with n(S) the nullity of (V, S). For a plane graph Q * F(G) is the
    chromatic polynomial of the dual.

    Raises:
        LimitExceededError: If the edge count exceeds `limit`
    """
    g = _as_multigraph(g)
    nodes = list(g.nodes())
    edges = [(u, v) for u, v, *_ in g.edges()]
    if len(edges) > limit:
        raise LimitExceededError('flow-sum edge count', len(edges), limit)

    terms = _subset_sum(functools.partial(_flow_chunk, nodes, edges), len(edges), jobs)
    return LaurentPolynomial('Q', terms)


def _subset_sum(chunk_func, n_edges: int, jobs: int) -> dict:
    bits = min(n_edges, _CHUNK_BITS)
    starts = range(0, 2 ** n_edges, 2 ** bits)
    chunks = [(s, s + 2 ** bits) for s in starts]
    return map_reduce(chunk_func, chunks, jobs, reducer=_merge_terms, initial={})


def _merge_terms(acc: dict, terms: dict) -> dict:
    for e, c in terms.items():
        acc[e] = acc.get(e, 0) + c
    return acc


def _components(nodes, edges, mask: int) -> int:
    uf = UnionFind(nodes)
    count = len(nodes)
    for i, (u, v) in enumerate(edges):
        if mask >> i & 1 and uf[u] != uf[v]:
            uf.union(u, v)
            count -= 1
    return count


def _ranksum_chunk(nodes, edges, bounds) -> dict:
    terms = {}
    for mask in range(*bounds):
        k = _components(nodes, edges, mask)
        sign = -1 if bin(mask).count('1') % 2 else 1
        terms[k] = terms.get(k, 0) + sign
    return terms


def _flow_chunk(nodes, edges, bounds) -> dict:
    terms = {}
    for mask in range(*bounds):
        size = bin(mask).count('1')
        nullity = size - len(nodes) + _components(nodes, edges, mask)
        sign = -1 if (len(edges) - size) % 2 else 1
        terms[nullity] = terms.get(nullity, 0) + sign
    return terms


def dual_chromatic(g: EmbeddedGraph, cache: ChromaticCache=None) -> LaurentPolynomial:
    """Chromatic polynomial of the planar dual of a closed embedded graph.

    Raises:
        BoundaryMismatchError: If `g` has boundary points
    """
    return chromatic_delcon(g.dual().to_multigraph(), cache)


def proper_colorings(g, k: int) -> int:
    """Number of proper colorings of `g` with `k` colors, by brute force"""
    g = _as_multigraph(g)
    nodes = list(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    edges = [(index[u], index[v]) for u, v, *_ in g.edges()]
    if any(u == v for u, v in edges):
        return 0
    return sum(1 for colors in itertools.product(range(k), repeat=len(nodes))
               if all(colors[u] != colors[v] for u, v in edges))
