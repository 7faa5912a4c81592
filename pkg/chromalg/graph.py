"""Embedded planar graphs as combinatorial maps

A graph embedded in a rectangle (or, without boundary points, in the sphere)
is stored as a set of darts 0..k-1 with two permutations:

    alpha - fixed-point-free involution pairing the two darts of every edge
    sigma - counterclockwise rotation of the darts around every vertex

Boundary points are degree-one vertices. They are listed in `boundary` in the
counterclockwise order of the rectangle: the `n_bottom` bottom points from left
to right, then the `n_top` top points from right to left. Closed curves
without vertices are counted by `free_loops`, vertices without darts by
`isolated_vertices`.

Faces are the orbits of sigma∘alpha. In rectangle mode the map is augmented by
the rectangle wall: wall dart ids follow the real darts, two per boundary
point, and the outer face is the orbit made of wall darts only.

Classes:
    Face - A face of an embedded graph
    EmbeddedGraph - Immutable combinatorial map with boundary points

Functions:
    stack(lower, upper) - Vertical composition of rectangle graphs
    strand_graph(n), circle_graph(), theta_graph(), cycle_graph(k),
        path_graph(k) - Small named graphs
    random_rectangle_graph(start, inner_edges, rng) - Random planar graph
        obtained from `start` by face-splitting and subdivision moves

License:    MIT, see LICENSE for more details
"""

import logging

import networkx as nx
from networkx.utils import UnionFind

from .exceptions import (BoundaryMismatchError, InvalidMapError,
                         LoopContractionError, NonPlanarError)


logger = logging.getLogger(__name__)


class Face:
    """A face of an embedded graph.

    Attributes:
        darts (tuple): Orbit of the face permutation; ids >= the dart count of
            the graph are wall darts
        is_outer (bool): Whether this is the face outside the rectangle
    """

    __slots__ = ['darts', 'is_outer']

    def __init__(self, darts: tuple, is_outer: bool=False):
        self.darts = darts
        self.is_outer = is_outer

    def __len__(self):
        return len(self.darts)

    def __repr__(self):
        return '<%s %s%s>' % (self.__class__.__name__, self.darts,
                              ' outer' if self.is_outer else '')


class EmbeddedGraph:
    """Immutable combinatorial map of a graph in a rectangle or the sphere.

    Attributes:
        alpha (tuple): Edge involution on darts
        sigma (tuple): Counterclockwise vertex rotation on darts
        boundary (tuple): Dart of each boundary point, in circular order
        n_bottom (int): Number of bottom boundary points
        n_top (int): Number of top boundary points
        free_loops (int): Closed curves without vertices
        isolated_vertices (int): Interior vertices without darts
    """

    __slots__ = ['alpha', 'sigma', 'boundary', 'n_bottom', 'n_top',
                 'free_loops', 'isolated_vertices', '_vertices', '_vertex_of',
                 '_boundary_set']

    def __init__(self, alpha, sigma, boundary=(), n_bottom: int=0, n_top: int=0,
                 free_loops: int=0, isolated_vertices: int=0, check: bool=True):
        self.alpha = tuple(alpha)
        self.sigma = tuple(sigma)
        self.boundary = tuple(boundary)
        self.n_bottom = n_bottom
        self.n_top = n_top
        self.free_loops = free_loops
        self.isolated_vertices = isolated_vertices
        self._vertices = None
        self._vertex_of = None
        self._boundary_set = frozenset(self.boundary)
        if check:
            self._check_structure()

    @classmethod
    def from_maps(cls, alpha: dict, sigma: dict, boundary=(), n_bottom: int=0,
                  n_top: int=0, free_loops: int=0, isolated_vertices: int=0,
                  check: bool=False) -> 'EmbeddedGraph':
        """Build a graph from permutations on arbitrary dart ids.

        Dart ids are compacted to 0..k-1 preserving their relative order.
        """
        ids = sorted(sigma)
        index = {old: new for new, old in enumerate(ids)}
        try:
            return cls([index[alpha[d]] for d in ids],
                       [index[sigma[d]] for d in ids],
                       [index[b] for b in boundary],
                       n_bottom, n_top, free_loops, isolated_vertices, check)
        except KeyError as e:
            raise InvalidMapError('dangling dart %s' % e.args[0])

    @classmethod
    def empty(cls, free_loops: int=0, isolated_vertices: int=0) -> 'EmbeddedGraph':
        return cls((), (), (), 0, 0, free_loops, isolated_vertices)

    # Basic structure

    @property
    def size(self) -> int:
        """Number of darts"""
        return len(self.alpha)

    @property
    def n_boundary(self) -> int:
        return len(self.boundary)

    @property
    def is_closed(self) -> bool:
        return not self.boundary

    def is_boundary_dart(self, d: int) -> bool:
        return d in self._boundary_set

    def bottom_dart(self, column: int) -> int:
        return self.boundary[column]

    def top_dart(self, column: int) -> int:
        return self.boundary[self.n_bottom + self.n_top - 1 - column]

    def vertices(self) -> tuple:
        """Rotation orbits (including boundary points), ordered by least dart"""
        if self._vertices is None:
            vertex_of = [-1] * self.size
            orbits = []
            for d in range(self.size):
                if vertex_of[d] >= 0:
                    continue
                orbit, x = [], d
                while vertex_of[x] < 0:
                    vertex_of[x] = len(orbits)
                    orbit.append(x)
                    x = self.sigma[x]
                orbits.append(tuple(orbit))
            self._vertices = tuple(orbits)
            self._vertex_of = tuple(vertex_of)
        return self._vertices

    def vertex_of(self, d: int) -> int:
        self.vertices()
        return self._vertex_of[d]

    def is_boundary_vertex(self, v: int) -> bool:
        orbit = self.vertices()[v]
        return len(orbit) == 1 and orbit[0] in self._boundary_set

    def interior_vertices(self) -> list:
        return [v for v in range(len(self.vertices())) if not self.is_boundary_vertex(v)]

    def degree(self, v: int) -> int:
        return len(self.vertices()[v])

    def edges(self) -> list:
        """Edges as dart pairs (d, alpha(d)) with d < alpha(d)"""
        return [(d, a) for d, a in enumerate(self.alpha) if d < a]

    def is_inner(self, d: int) -> bool:
        return d not in self._boundary_set and self.alpha[d] not in self._boundary_set

    def is_loop(self, d: int) -> bool:
        return self.vertex_of(d) == self.vertex_of(self.alpha[d])

    def inner_edges(self) -> list:
        return [e for e in self.edges() if self.is_inner(e[0])]

    def outer_edges(self) -> list:
        return [e for e in self.edges() if not self.is_inner(e[0])]

    def n_vertices(self) -> int:
        """Vertices of the graph, boundary points and isolated vertices included"""
        return len(self.vertices()) + self.isolated_vertices

    # Validation

    def _check_structure(self):
        k = self.size
        if len(self.sigma) != k:
            raise InvalidMapError('alpha and sigma differ in length')
        if sorted(self.sigma) != list(range(k)):
            raise InvalidMapError('sigma is not a permutation')
        for d, a in enumerate(self.alpha):
            if not 0 <= a < k or a == d or self.alpha[a] != d:
                raise InvalidMapError('alpha is not a fixed-point-free involution at %d' % d)
        if len(self.boundary) != self.n_bottom + self.n_top:
            raise BoundaryMismatchError('%d boundary darts for %d + %d points'
                                        % (len(self.boundary), self.n_bottom, self.n_top))
        if len(self._boundary_set) != len(self.boundary):
            raise BoundaryMismatchError('repeated boundary dart')
        for b in self.boundary:
            if not 0 <= b < k:
                raise BoundaryMismatchError('boundary dart %d out of range' % b)
            if self.sigma[b] != b:
                raise BoundaryMismatchError('boundary point of dart %d is not 1-valent' % b)
        if self.free_loops < 0 or self.isolated_vertices < 0:
            raise InvalidMapError('negative counts')

    def validate(self) -> 'EmbeddedGraph':
        """Full check: permutations, boundary degrees and the Euler formula.

        The Euler formula V - E + F = 2 is checked on every connected
        component of the wall-augmented map.

        Raises:
            InvalidMapError, BoundaryMismatchError, NonPlanarError
        """
        self._check_structure()
        alpha, sigma = self._augmented()
        uf = UnionFind(range(len(alpha)))
        for d in range(len(alpha)):
            uf.union(d, alpha[d])
            uf.union(d, sigma[d])

        counts = {}
        for orbits, kind in ((_orbits(sigma), 'V'),
                             (_orbits([sigma[alpha[d]] for d in range(len(alpha))]), 'F')):
            for orbit in orbits:
                c = counts.setdefault(uf[orbit[0]], {'V': 0, 'E': 0, 'F': 0})
                c[kind] += 1
        for d in range(len(alpha)):
            if d < alpha[d]:
                counts[uf[d]]['E'] += 1

        for c in counts.values():
            if c['V'] - c['E'] + c['F'] != 2:
                raise NonPlanarError('Euler characteristic %d on a component'
                                     % (c['V'] - c['E'] + c['F']))
        return self

    # Faces

    def _augmented(self):
        """Permutations of the map augmented by the rectangle wall.

        At boundary point i with dart b the counterclockwise order is
        w_i+ (toward point i+1), b, w_i- (toward point i-1).
        """
        k, n = self.size, len(self.boundary)
        alpha, sigma = list(self.alpha), list(self.sigma)
        if n == 0:
            return alpha, sigma
        alpha += [0] * (2 * n)
        sigma += [0] * (2 * n)
        for i, b in enumerate(self.boundary):
            plus, minus = k + 2 * i, k + 2 * i + 1
            sigma[plus], sigma[b], sigma[minus] = b, minus, plus
            nxt_minus = k + 2 * ((i + 1) % n) + 1
            alpha[plus], alpha[nxt_minus] = nxt_minus, plus
        return alpha, sigma

    def faces(self) -> list:
        """Orbits of the face permutation sigma∘alpha.

        In rectangle mode the wall-augmented map is used and exactly one face
        is outer. A graph without darts has a single face.
        """
        alpha, sigma = self._augmented()
        if not alpha:
            return [Face((), is_outer=bool(self.boundary))]
        phi = [sigma[alpha[d]] for d in range(len(alpha))]
        outer = self.size if self.boundary else None
        return [Face(orbit, is_outer=outer in orbit) for orbit in _orbits(phi)]

    # Editing operations

    def _dicts(self):
        return dict(enumerate(self.alpha)), dict(enumerate(self.sigma))

    def _rebuild(self, alpha, sigma, boundary=None, free_loops=None,
                 isolated_vertices=None, n_bottom=None, n_top=None):
        return EmbeddedGraph.from_maps(
            alpha, sigma,
            self.boundary if boundary is None else boundary,
            self.n_bottom if n_bottom is None else n_bottom,
            self.n_top if n_top is None else n_top,
            self.free_loops if free_loops is None else free_loops,
            self.isolated_vertices if isolated_vertices is None else isolated_vertices)

    def delete_edge(self, d: int) -> 'EmbeddedGraph':
        """Remove the edge of dart `d`; vertices left without darts become isolated.

        Raises:
            BoundaryMismatchError: If the edge ends at a boundary point
        """
        a = self.alpha[d]
        if not self.is_inner(d):
            raise BoundaryMismatchError('cannot delete an edge ending on the boundary')
        removed = {d, a}
        emptied = {self.vertex_of(x) for x in removed
                   if set(self.vertices()[self.vertex_of(x)]) <= removed}

        alpha, sigma = self._dicts()
        for x in list(sigma):
            if x in removed:
                continue
            y = sigma[x]
            while y in removed:
                y = self.sigma[y]
            sigma[x] = y
        for x in removed:
            del alpha[x], sigma[x]
        return self._rebuild(alpha, sigma,
                             isolated_vertices=self.isolated_vertices + len(emptied))

    def contract_edge(self, d: int) -> 'EmbeddedGraph':
        """Contract the edge of dart `d`, merging the rotations of its endpoints.

        The merged rotation lists the darts of the first endpoint following
        `d`, then those of the second endpoint following alpha(d).

        Raises:
            LoopContractionError: If the edge is a loop
            BoundaryMismatchError: If the edge ends at a boundary point
        """
        a = self.alpha[d]
        if not self.is_inner(d):
            raise BoundaryMismatchError('cannot contract an edge ending on the boundary')
        if self.is_loop(d):
            raise LoopContractionError('edge (%d, %d) is a loop' % (d, a))

        merged = _rotation_after(self.sigma, d) + _rotation_after(self.sigma, a)
        alpha, sigma = self._dicts()
        del alpha[d], alpha[a], sigma[d], sigma[a]
        for i, x in enumerate(merged):
            sigma[x] = merged[(i + 1) % len(merged)]
        isolated = self.isolated_vertices + (0 if merged else 1)
        return self._rebuild(alpha, sigma, isolated_vertices=isolated)

    def smooth_2valent(self) -> 'EmbeddedGraph':
        """Remove every interior 2-valent vertex, merging its two edges.

        A 2-valent vertex carrying a loop becomes a free loop.
        """
        alpha, sigma = self._dicts()
        loops = self.free_loops
        bset = self._boundary_set
        changed = True
        while changed:
            changed = False
            for a in sorted(sigma):
                if a not in sigma or a in bset:
                    continue
                b = sigma[a]
                if b == a or sigma[b] != a:
                    continue
                if alpha[a] == b:
                    loops += 1
                else:
                    x, y = alpha[a], alpha[b]
                    alpha[x], alpha[y] = y, x
                del alpha[a], alpha[b], sigma[a], sigma[b]
                changed = True
        if loops == self.free_loops and len(sigma) == self.size:
            return self
        return self._rebuild(alpha, sigma, free_loops=loops)

    def delete_isolated(self) -> 'EmbeddedGraph':
        if not self.isolated_vertices:
            return self
        return EmbeddedGraph(self.alpha, self.sigma, self.boundary, self.n_bottom,
                             self.n_top, self.free_loops, 0, check=False)

    def without_free_loops(self) -> 'EmbeddedGraph':
        if not self.free_loops:
            return self
        return EmbeddedGraph(self.alpha, self.sigma, self.boundary, self.n_bottom,
                             self.n_top, 0, self.isolated_vertices, check=False)

    def subdivide(self, d: int) -> 'EmbeddedGraph':
        """Insert a 2-valent vertex in the middle of the edge of dart `d`"""
        a = self.alpha[d]
        k = self.size
        p, r = k, k + 1
        alpha, sigma = self._dicts()
        alpha[d], alpha[p] = p, d
        alpha[a], alpha[r] = r, a
        sigma[p], sigma[r] = r, p
        return self._rebuild(alpha, sigma)

    def add_edge(self, x1: int, x2: int) -> 'EmbeddedGraph':
        """Insert a new edge between the corners following darts `x1` and `x2`.

        The corner following `x` is the one between `x` and sigma(x). Both
        corners must lie in the same face; equal corners give an empty loop.

        Raises:
            BoundaryMismatchError: If a corner lies at a boundary point
            InvalidMapError: If the corners lie in different faces
        """
        if x1 in self._boundary_set or x2 in self._boundary_set:
            raise BoundaryMismatchError('cannot attach an edge to a boundary point')
        if x1 != x2 and self.corner_face(x1) != self.corner_face(x2):
            raise InvalidMapError('corners of darts %d and %d lie in different faces'
                                  % (x1, x2))
        k = self.size
        p, r = k, k + 1
        alpha, sigma = self._dicts()
        alpha[p], alpha[r] = r, p
        if x1 == x2:
            sigma[x1], sigma[p], sigma[r] = p, r, self.sigma[x1]
        else:
            sigma[x1], sigma[p] = p, self.sigma[x1]
            sigma[x2], sigma[r] = r, self.sigma[x2]
        return self._rebuild(alpha, sigma)

    def corner_face(self, x: int) -> int:
        """Index in `faces()` of the face holding the corner following dart `x`"""
        alpha, _ = self._augmented()
        target = alpha[x]
        for i, face in enumerate(self.faces()):
            if target in face.darts:
                return i
        raise InvalidMapError('dart %d has no face' % x)

    # Closing and gluing

    def closure(self) -> 'EmbeddedGraph':
        """Join top point i to bottom point i by arcs around the rectangle.

        Raises:
            BoundaryMismatchError: If top and bottom point counts differ
        """
        if self.n_bottom != self.n_top:
            raise BoundaryMismatchError('closure needs as many top as bottom points')
        alpha, sigma = self._dicts()
        pairs = [(self.top_dart(c), self.bottom_dart(c)) for c in range(self.n_bottom)]
        loops = self.free_loops + _glue(alpha, sigma, pairs)
        return EmbeddedGraph.from_maps(alpha, sigma, (), 0, 0, loops,
                                       self.isolated_vertices)

    def partial_closure(self) -> 'EmbeddedGraph':
        """Close the rightmost strand only.

        Raises:
            BoundaryMismatchError: If top and bottom point counts differ or
                there are no strands
        """
        n = self.n_bottom
        if n != self.n_top or n == 0:
            raise BoundaryMismatchError('partial closure needs n >= 1 strands on both sides')
        alpha, sigma = self._dicts()
        loops = self.free_loops + _glue(alpha, sigma,
                                        [(self.top_dart(n - 1), self.bottom_dart(n - 1))])
        boundary = self.boundary[:n - 1] + self.boundary[n + 1:]
        return self._rebuild(alpha, sigma, boundary=boundary, free_loops=loops,
                             n_bottom=n - 1, n_top=n - 1)

    def reflect(self) -> 'EmbeddedGraph':
        """Mirror image in a horizontal line (bottom and top exchanged)"""
        inverse = [0] * self.size
        for d, s in enumerate(self.sigma):
            inverse[s] = d
        return EmbeddedGraph(self.alpha, inverse, tuple(reversed(self.boundary)),
                             self.n_top, self.n_bottom, self.free_loops,
                             self.isolated_vertices, check=False)

    # Components

    def components(self) -> list:
        """Dart sets of the connected components, ordered by least dart"""
        uf = UnionFind(range(self.size))
        for d in range(self.size):
            uf.union(d, self.alpha[d])
            uf.union(d, self.sigma[d])
        comps = [sorted(c) for c in uf.to_sets()]
        return sorted(comps)

    def subgraph(self, darts) -> 'EmbeddedGraph':
        """Closed graph made of the given union of components"""
        darts = set(darts)
        alpha = {d: self.alpha[d] for d in darts}
        sigma = {d: self.sigma[d] for d in darts}
        return EmbeddedGraph.from_maps(alpha, sigma)

    def floating_split(self):
        """Separate the components that touch no boundary point.

        Returns:
            (list of closed EmbeddedGraph, EmbeddedGraph): floating components
            and the rest (which keeps free loops and isolated vertices)
        """
        floating, attached = [], set()
        for comp in self.components():
            if any(d in self._boundary_set for d in comp):
                attached.update(comp)
            else:
                floating.append(self.subgraph(comp))
        if not floating:
            return [], self
        alpha = {d: self.alpha[d] for d in attached}
        sigma = {d: self.sigma[d] for d in attached}
        return floating, self._rebuild(alpha, sigma)

    # Dual

    def dual(self) -> 'EmbeddedGraph':
        """Planar dual of a closed graph.

        Dual darts are the darts of the graph, with alpha* = alpha and
        sigma* = sigma∘alpha. For a disconnected graph the face holding the
        least dart of every component is identified with one shared dual
        vertex; every free loop adds a pendant dual edge at that vertex.

        Raises:
            BoundaryMismatchError: If the graph has boundary points
        """
        if self.boundary:
            raise BoundaryMismatchError('the dual is defined for closed graphs only')

        k = self.size
        phi = [self.sigma[self.alpha[d]] for d in range(k)]
        sigma = dict(enumerate(phi))
        alpha = dict(enumerate(self.alpha))

        shared = []
        for comp in self.components():
            shared.extend(_orbit(phi, comp[0]))
        for i in range(self.free_loops):
            p, r = k + 2 * i, k + 2 * i + 1
            alpha[p], alpha[r] = r, p
            sigma[r] = r
            shared.append(p)
        for i, x in enumerate(shared):
            sigma[x] = shared[(i + 1) % len(shared)]

        isolated = 0 if shared else 1
        return EmbeddedGraph.from_maps(alpha, sigma, isolated_vertices=isolated)

    # Canonical form

    def canonical_form(self):
        """Canonical key for map isomorphism preserving the boundary.

        Components reached from the boundary are labelled by a traversal
        started at the boundary darts in order. Every other component is
        labelled from the start dart giving the lexicographically least code,
        and those codes are sorted.

        Returns:
            (tuple, list): hashable key and the darts in canonical order
        """
        labels, order = {}, []
        _label(self.boundary, self.alpha, self.sigma, labels, order)
        main = _code(order, self.alpha, self.sigma, labels)
        boundary_labels = tuple(labels[b] for b in self.boundary)

        floating = []
        for comp in self.components():
            if comp[0] in labels:
                continue
            best = None
            for start in comp:
                sub_labels, sub_order = {}, []
                _label([start], self.alpha, self.sigma, sub_labels, sub_order)
                code = _code(sub_order, self.alpha, self.sigma, sub_labels)
                if best is None or code < best[0]:
                    best = (code, sub_order)
            floating.append(best)
        floating.sort(key=lambda item: item[0])
        for _, sub_order in floating:
            order.extend(sub_order)

        key = (self.n_bottom, self.n_top, self.free_loops, self.isolated_vertices,
               main, boundary_labels, tuple(code for code, _ in floating))
        return key, order

    # Conversion

    def to_multigraph(self) -> nx.MultiGraph:
        """Abstract multigraph forgetting the embedding.

        Nodes are vertex indices (boundary points and isolated vertices
        included); every free loop becomes a vertex carrying a loop.
        """
        g = nx.MultiGraph()
        nv = len(self.vertices())
        g.add_nodes_from(range(nv + self.isolated_vertices))
        for d, a in self.edges():
            g.add_edge(self.vertex_of(d), self.vertex_of(a))
        for i in range(self.free_loops):
            v = nv + self.isolated_vertices + i
            g.add_edge(v, v)
        return g

    def __eq__(self, other):
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return (self.alpha, self.sigma, self.boundary, self.n_bottom, self.n_top,
                self.free_loops, self.isolated_vertices) == \
               (other.alpha, other.sigma, other.boundary, other.n_bottom, other.n_top,
                other.free_loops, other.isolated_vertices)

    def __hash__(self):
        return hash((self.alpha, self.sigma, self.boundary, self.n_bottom,
                     self.n_top, self.free_loops, self.isolated_vertices))

    def __getstate__(self):
        return (self.alpha, self.sigma, self.boundary, self.n_bottom, self.n_top,
                self.free_loops, self.isolated_vertices)

    def __setstate__(self, state):
        self.__init__(*state, check=False)

    def __repr__(self):
        return '<%s darts=%d V=%d E=%d boundary=%d+%d loops=%d isolated=%d>' % (
            self.__class__.__name__, self.size, len(self.vertices()),
            len(self.alpha) // 2, self.n_bottom, self.n_top, self.free_loops,
            self.isolated_vertices)


def stack(lower: EmbeddedGraph, upper: EmbeddedGraph) -> EmbeddedGraph:
    """Place `upper` on top of `lower`, joining top column c of `lower` to
    bottom column c of `upper`.

    Raises:
        BoundaryMismatchError: If the middle point counts differ
    """
    if lower.n_top != upper.n_bottom:
        raise BoundaryMismatchError('cannot stack %d top points on %d bottom points'
                                    % (lower.n_top, upper.n_bottom))
    off = lower.size
    alpha, sigma = lower._dicts()
    for d in range(upper.size):
        alpha[d + off] = upper.alpha[d] + off
        sigma[d + off] = upper.sigma[d] + off
    pairs = [(lower.top_dart(c), upper.bottom_dart(c) + off)
             for c in range(lower.n_top)]
    loops = lower.free_loops + upper.free_loops + _glue(alpha, sigma, pairs)
    boundary = lower.boundary[:lower.n_bottom] + \
        tuple(b + off for b in upper.boundary[upper.n_bottom:])
    return EmbeddedGraph.from_maps(alpha, sigma, boundary, lower.n_bottom,
                                   upper.n_top, loops,
                                   lower.isolated_vertices + upper.isolated_vertices)


# Named graphs

def strand_graph(n: int) -> EmbeddedGraph:
    """n vertical strands"""
    alpha = [2 * n - 1 - i for i in range(2 * n)]
    return EmbeddedGraph(alpha, range(2 * n), range(2 * n), n, n)


def circle_graph() -> EmbeddedGraph:
    """A single vertex carrying a loop"""
    return EmbeddedGraph((1, 0), (1, 0))


def theta_graph() -> EmbeddedGraph:
    """Two vertices joined by three edges"""
    return EmbeddedGraph((5, 4, 3, 2, 1, 0), (1, 2, 0, 4, 5, 3))


def cycle_graph(k: int) -> EmbeddedGraph:
    """Cycle on k >= 1 vertices (a vertex with a loop for k = 1)"""
    alpha, sigma = [0] * (2 * k), [0] * (2 * k)
    for i in range(k):
        fwd, back = 2 * i, 2 * ((i + 1) % k) + 1
        alpha[fwd], alpha[back] = back, fwd
        sigma[2 * i], sigma[2 * i + 1] = 2 * i + 1, 2 * i
    return EmbeddedGraph(alpha, sigma)


def path_graph(k: int) -> EmbeddedGraph:
    """Path on k >= 1 vertices in the sphere"""
    if k == 1:
        return EmbeddedGraph.empty(isolated_vertices=1)
    alpha, sigma = {}, {}
    for i in range(k - 1):
        fwd, back = 2 * i, 2 * i + 1
        alpha[fwd], alpha[back] = back, fwd
    # vertex i holds dart 2i (toward i+1) and dart 2i-1 (toward i-1)
    for i in range(k):
        darts = [d for d in (2 * i - 1, 2 * i) if 0 <= d < 2 * (k - 1)]
        for j, d in enumerate(darts):
            sigma[d] = darts[(j + 1) % len(darts)]
    return EmbeddedGraph.from_maps(alpha, sigma, check=True)


def random_rectangle_graph(start: EmbeddedGraph, inner_edges: int, rng) -> EmbeddedGraph:
    """Random planar graph with the boundary of `start`.

    Subdivides random edges and inserts random edges (or loops) inside faces
    until the graph has at least `inner_edges` inner edges.

    Args:
        start (EmbeddedGraph): Graph whose components all touch the boundary
        inner_edges (int): Target number of inner edges
        rng (random.Random): Source of randomness
    """
    g = start
    while len(g.inner_edges()) < inner_edges:
        edges = g.edges()
        corners = _interior_corners(g)
        if not corners or rng.random() < 0.3:
            if not edges:
                break
            d, _ = rng.choice(edges)
            g = g.subdivide(d)
            continue
        face = rng.choice(sorted(corners))
        x1, x2 = rng.choice(corners[face]), rng.choice(corners[face])
        g = g.add_edge(x1, x2)
    logger.debug('random rectangle graph: %r', g)
    return g


# Helpers

def _interior_corners(g: EmbeddedGraph) -> dict:
    """face index -> darts whose following corner lies at an interior vertex"""
    alpha, _ = g._augmented()
    corners = {}
    for i, face in enumerate(g.faces()):
        for y in face.darts:
            x = alpha[y]
            if x < g.size and not g.is_boundary_dart(x):
                corners.setdefault(i, []).append(x)
    return corners


def _orbit(perm, start) -> list:
    orbit, x = [start], perm[start]
    while x != start:
        orbit.append(x)
        x = perm[x]
    return orbit


def _orbits(perm) -> list:
    seen, orbits = set(), []
    for d in range(len(perm)):
        if d not in seen:
            orbit = _orbit(perm, d)
            seen.update(orbit)
            orbits.append(tuple(orbit))
    return orbits


def _rotation_after(sigma, d) -> list:
    """Darts of the vertex of `d` in counterclockwise order, starting after `d`"""
    return _orbit(sigma, d)[1:]


def _glue(alpha: dict, sigma: dict, pairs) -> int:
    """Join pairs of boundary stubs in place; returns the number of closed loops.

    For a pair (p, r) of boundary darts the edges ending at p and r are merged
    into one edge and both boundary points disappear. If p and r are the two
    ends of one edge, a free loop is produced instead.
    """
    loops = 0
    for p, r in pairs:
        x, y = alpha[p], alpha[r]
        if x == r:
            loops += 1
        else:
            alpha[x], alpha[y] = y, x
        del alpha[p], alpha[r], sigma[p], sigma[r]
    return loops


def _label(starts, alpha, sigma, labels: dict, order: list):
    """Breadth-first labelling of darts from each unlabelled start in turn"""
    for s in starts:
        if s in labels:
            continue
        labels[s] = len(order)
        order.append(s)
        i = len(order) - 1
        while i < len(order):
            d = order[i]
            for e in (alpha[d], sigma[d]):
                if e not in labels:
                    labels[e] = len(order)
                    order.append(e)
            i += 1


def _code(order, alpha, sigma, labels) -> tuple:
    return tuple((labels[alpha[d]], labels[sigma[d]]) for d in order)
