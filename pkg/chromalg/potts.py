"""Potts partition functions on small grids

The coupling enters through x = e^(beta J): a configuration contributes
x^(number of equal nearest-neighbour pairs). Two independent evaluations are
provided, the plain sum over spin configurations and the expansion over nets
(sets of unequal edges), where a net N contributes

    x^(E - |N|) chi(G / (E - N))(Q)

with chi the chromatic polynomial of the multigraph obtained by contracting
every edge outside N. Quotients with loops contribute nothing.

Classes:
    GridSpec - Open rectangular grid
    PottsParams - Number of spin states, or None for a symbolic Q

Functions:
    grid_multigraph(grid) - networkx graph of the grid
    partition_function_spins(grid, Q) - Spin sum
    net_expansion(grid) - Net expansion with coefficients in Q
    partition_function_nets(grid, Q) - Net expansion at a value of Q
    zero_temperature_check(grid, Q) - Constant term against chi of the grid

License:    MIT, see LICENSE for more details
"""

import functools
import logging

from fractions import Fraction

import networkx as nx
import numpy as np
from networkx.utils import UnionFind

from .exceptions import EvaluationDomainError, LimitExceededError
from .laurent import LaurentPolynomial
from .polynomials import chromatic_delcon
from .util import map_reduce


logger = logging.getLogger(__name__)

SPIN_STATE_LIMIT = 10 ** 8
NET_EDGE_LIMIT = 24

_SPIN_CHUNK = 2 ** 16
_NET_CHUNK = 2 ** 10


class GridSpec:
    """Open rows x cols grid; site (r, c) has index r * cols + c.

    Attributes:
        rows (int): Number of rows
        cols (int): Number of columns
    """

    __slots__ = ['rows', 'cols']

    def __init__(self, rows: int, cols: int):
        if rows < 1 or cols < 1:
            raise ValueError('grid dimensions must be positive: %dx%d' % (rows, cols))
        self.rows = rows
        self.cols = cols

    @property
    def n_vertices(self) -> int:
        return self.rows * self.cols

    def edges(self) -> list:
        """Nearest-neighbour pairs: horizontal edges row by row, then vertical"""
        index = np.arange(self.n_vertices).reshape(self.rows, self.cols)
        horizontal = zip(index[:, :-1].ravel(), index[:, 1:].ravel())
        vertical = zip(index[:-1, :].ravel(), index[1:, :].ravel())
        return [(int(u), int(v)) for u, v in list(horizontal) + list(vertical)]

    def __repr__(self):
        return '<%s %dx%d>' % (self.__class__.__name__, self.rows, self.cols)


class PottsParams:
    """Number of spin states Q; None stands for a formal Q"""

    __slots__ = ['Q']

    def __init__(self, Q=None):
        if Q is not None:
            Q = Fraction(Q)
            if Q < 1:
                raise EvaluationDomainError('Q must be at least 1, got %s' % Q)
        self.Q = Q

    @property
    def is_symbolic(self) -> bool:
        return self.Q is None

    def spin_count(self) -> int:
        """Q as a number of spin states

        Raises:
            EvaluationDomainError: If Q is symbolic or not an integer
        """
        if self.Q is None or self.Q.denominator != 1:
            raise EvaluationDomainError('the spin sum needs an integer Q, got %s' % self.Q)
        return int(self.Q)

    def __repr__(self):
        return '<%s Q=%s>' % (self.__class__.__name__, 'Q' if self.Q is None else self.Q)


def grid_multigraph(grid: GridSpec) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(grid.n_vertices))
    g.add_edges_from(grid.edges())
    return g


# Spin sums

def _spin_chunk(n_vertices: int, edges, Q: int, bounds) -> dict:
    start, stop = bounds
    if not edges:
        return {0: stop - start}
    states = np.arange(start, stop, dtype=np.int64)
    spins = states[:, None] // (Q ** np.arange(n_vertices, dtype=np.int64)) % Q
    u, v = np.array(edges, dtype=np.int64).T
    equal = (spins[:, u] == spins[:, v]).sum(axis=1)
    counts = np.bincount(equal, minlength=len(edges) + 1)
    return {k: int(c) for k, c in enumerate(counts) if c}


def _merge(acc: dict, terms: dict) -> dict:
    for k, c in terms.items():
        acc[k] = acc.get(k, 0) + c
    return acc


def partition_function_spins(grid: GridSpec, Q, limit: int=SPIN_STATE_LIMIT,
                             jobs: int=1) -> LaurentPolynomial:
    """Sum over all Q^V spin assignments of x^(#equal adjacent pairs).

    Raises:
        EvaluationDomainError: If Q is not a positive integer
        LimitExceededError: If Q^V exceeds `limit`
    """
    q = PottsParams(Q).spin_count()
    total = q ** grid.n_vertices
    if total > limit:
        raise LimitExceededError('spin state count', total, limit)

    chunks = [(s, min(s + _SPIN_CHUNK, total)) for s in range(0, total, _SPIN_CHUNK)]
    func = functools.partial(_spin_chunk, grid.n_vertices, grid.edges(), q)
    terms = map_reduce(func, chunks, jobs, reducer=_merge, initial={})
    logger.debug('spin sum over %d states', total)
    return LaurentPolynomial('x', terms)


# Net expansion

def _quotient(n_vertices: int, edges, mask: int):
    """Multigraph contracting the edges outside the net `mask`, or None when
    a net edge becomes a loop"""
    uf = UnionFind(range(n_vertices))
    for i, (u, v) in enumerate(edges):
        if not mask >> i & 1:
            uf.union(u, v)
    g = nx.MultiGraph()
    g.add_nodes_from({uf[v] for v in range(n_vertices)})
    for i, (u, v) in enumerate(edges):
        if mask >> i & 1:
            if uf[u] == uf[v]:
                return None
            g.add_edge(uf[u], uf[v])
    return g


def _net_chunk(n_vertices: int, edges, bounds) -> dict:
    terms = {}
    for mask in range(*bounds):
        g = _quotient(n_vertices, edges, mask)
        if g is None:
            continue
        k = len(edges) - bin(mask).count('1')
        chi = chromatic_delcon(g)
        terms[k] = terms[k] + chi if k in terms else chi
    return terms


def _merge_polys(acc: dict, terms: dict) -> dict:
    for k, p in terms.items():
        acc[k] = acc[k] + p if k in acc else p
    return acc


def net_expansion(grid: GridSpec, limit: int=NET_EDGE_LIMIT, jobs: int=1) -> dict:
    """Partition function with a formal Q.

    Returns:
        dict: x-exponent -> LaurentPolynomial in Q, without zero entries

    Raises:
        LimitExceededError: If the grid has more than `limit` edges
    """
    edges = grid.edges()
    if len(edges) > limit:
        raise LimitExceededError('net edge count', len(edges), limit)
    total = 2 ** len(edges)
    chunks = [(s, min(s + _NET_CHUNK, total)) for s in range(0, total, _NET_CHUNK)]
    func = functools.partial(_net_chunk, grid.n_vertices, edges)
    terms = map_reduce(func, chunks, jobs, reducer=_merge_polys, initial={})
    logger.debug('net expansion over %d edge subsets', total)
    return {k: p for k, p in sorted(terms.items()) if p}


def partition_function_nets(grid: GridSpec, Q, limit: int=NET_EDGE_LIMIT,
                            jobs: int=1) -> LaurentPolynomial:
    """Net expansion evaluated at a rational Q"""
    value = PottsParams(Q).Q
    if value is None:
        raise EvaluationDomainError('a value of Q is required, use net_expansion')
    expansion = net_expansion(grid, limit, jobs)
    return LaurentPolynomial('x', {k: p.evaluate(value) for k, p in expansion.items()})


def zero_temperature_check(grid: GridSpec, Q) -> bool:
    """The x^0 coefficient counts proper Q-colorings of the grid"""
    value = PottsParams(Q).Q
    constant = partition_function_nets(grid, value).coefficient(0)
    expected = chromatic_delcon(grid_multigraph(grid)).evaluate(value)
    logger.info('zero temperature limit of %r at Q=%s: %s (chromatic %s)',
                grid, value, constant, expected)
    return constant == expected
