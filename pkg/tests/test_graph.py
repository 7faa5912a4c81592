import pickle
import random

import networkx as nx
import pytest

from chromalg.exceptions import (BoundaryMismatchError, InvalidMapError,
                                 LoopContractionError, NonPlanarError)
from chromalg.graph import (EmbeddedGraph, circle_graph, cycle_graph, path_graph,
                            random_rectangle_graph, stack, strand_graph, theta_graph)


def _strand_with_circle():
    """One strand next to a floating vertex with a loop"""
    return EmbeddedGraph.from_maps({0: 1, 1: 0, 2: 3, 3: 2}, {0: 0, 1: 1, 2: 3, 3: 2},
                                   (0, 1), 1, 1)


def test_structure():
    g = strand_graph(2)
    assert(g.size == 4)
    assert(g.n_boundary == 4)
    assert(not g.is_closed)
    assert(g.bottom_dart(0) == 0)
    assert(g.top_dart(0) == 3)
    assert(g.alpha[g.bottom_dart(1)] == g.top_dart(1))
    assert(g.inner_edges() == [])
    assert(len(g.outer_edges()) == 2)
    assert(g.interior_vertices() == [])

    t = theta_graph()
    assert(t.is_closed)
    assert(t.n_vertices() == 2)
    assert(len(t.edges()) == 3)
    assert(all(t.degree(v) == 3 for v in range(2)))
    assert(len(t.inner_edges()) == 3)
    assert(not t.is_loop(0))
    assert(circle_graph().is_loop(0))


def test_validation():
    for g in (strand_graph(3), theta_graph(), cycle_graph(4), path_graph(3),
              circle_graph(), _strand_with_circle()):
        assert(g.validate() is g)

    # two interleaved loops at one vertex live on a torus
    with pytest.raises(NonPlanarError):
        EmbeddedGraph((2, 3, 0, 1), (1, 2, 3, 0)).validate()
    with pytest.raises(InvalidMapError):
        EmbeddedGraph((1, 1), (0, 1))
    with pytest.raises(InvalidMapError):
        EmbeddedGraph((1, 0), (0, 0))
    with pytest.raises(BoundaryMismatchError):
        EmbeddedGraph((1, 0), (1, 0), (0, 1), 1, 1)
    with pytest.raises(BoundaryMismatchError):
        EmbeddedGraph((1, 0), (0, 1), (0, 1), 1, 0)
    with pytest.raises(InvalidMapError):
        EmbeddedGraph.from_maps({0: 7, 7: 0}, {0: 0})


def test_faces():
    assert(len(theta_graph().faces()) == 3)
    assert(len(cycle_graph(3).faces()) == 2)
    assert(len(EmbeddedGraph.empty().faces()) == 1)

    faces = strand_graph(2).faces()
    assert(len(faces) == 4)
    assert(sum(f.is_outer for f in faces) == 1)


def test_delete_and_contract():
    c = cycle_graph(3)
    deleted = c.delete_edge(0)
    assert(len(deleted.edges()) == 2)
    assert(nx.is_isomorphic(nx.Graph(deleted.to_multigraph()), nx.path_graph(3)))

    contracted = c.contract_edge(0)
    assert(contracted.n_vertices() == 2)
    assert(contracted.to_multigraph().number_of_edges() == 2)
    assert(contracted.validate())

    loop = cycle_graph(1)
    with pytest.raises(LoopContractionError):
        loop.contract_edge(0)
    emptied = loop.delete_edge(0)
    assert(emptied.size == 0)
    assert(emptied.isolated_vertices == 1)

    with pytest.raises(BoundaryMismatchError):
        strand_graph(1).delete_edge(0)


def test_smoothing():
    smoothed = cycle_graph(3).smooth_2valent()
    assert(smoothed.size == 0)
    assert(smoothed.free_loops == 1)

    g = strand_graph(1).subdivide(0).subdivide(0)
    assert(len(g.interior_vertices()) == 2)
    assert(g.smooth_2valent() == strand_graph(1))
    assert(theta_graph().smooth_2valent() == theta_graph())


def test_stack_and_closure():
    assert(stack(strand_graph(1), strand_graph(1)) == strand_graph(1))
    assert(stack(strand_graph(2), strand_graph(2)).validate() == strand_graph(2))

    with pytest.raises(BoundaryMismatchError):
        stack(strand_graph(1), strand_graph(2))

    closed = strand_graph(2).closure()
    assert(closed.is_closed)
    assert(closed.size == 0)
    assert(closed.free_loops == 2)

    partial = strand_graph(2).partial_closure()
    assert(partial.free_loops == 1)
    assert(partial.without_free_loops() == strand_graph(1))

    with pytest.raises(BoundaryMismatchError):
        strand_graph(0).partial_closure()


def test_reflect():
    g = strand_graph(2).subdivide(0)
    assert(g.reflect().reflect() == g)
    assert(g.reflect().validate())
    assert(strand_graph(3).reflect().canonical_form()[0] == strand_graph(3).canonical_form()[0])


def test_components_and_floating():
    g = _strand_with_circle()
    assert(len(g.components()) == 2)

    floating, rest = g.floating_split()
    assert(len(floating) == 1)
    assert(floating[0].is_closed)
    assert(len(floating[0].edges()) == 1)
    assert(rest == strand_graph(1))

    assert(strand_graph(2).floating_split() == ([], strand_graph(2)))


def test_dual():
    d = theta_graph().dual()
    assert(d.n_vertices() == 3)
    assert(nx.is_isomorphic(nx.Graph(d.to_multigraph()), nx.cycle_graph(3)))

    bridge = circle_graph().dual()
    assert(bridge.n_vertices() == 2)
    assert(len(bridge.edges()) == 1)

    # free loops add pendant dual edges
    loops = EmbeddedGraph.empty(free_loops=2).dual()
    assert(len(loops.edges()) == 2)
    assert(loops.n_vertices() == 3)

    with pytest.raises(BoundaryMismatchError):
        strand_graph(1).dual()


def test_canonical_form():
    theta = theta_graph()
    # theta with darts renamed by d -> 5 - d
    renamed = EmbeddedGraph((5, 4, 3, 2, 1, 0), (2, 0, 1, 5, 3, 4))
    assert(renamed.validate())
    assert(theta.canonical_form()[0] == renamed.canonical_form()[0])
    assert(theta.canonical_form()[0] != cycle_graph(2).canonical_form()[0])
    assert(strand_graph(2).canonical_form()[0] != strand_graph(2).subdivide(0).canonical_form()[0])


def test_random_rectangle_graph():
    rng = random.Random(7)
    for _ in range(10):
        g = random_rectangle_graph(strand_graph(2), 5, rng)
        assert(len(g.inner_edges()) >= 5)
        assert(g.n_bottom == 2 and g.n_top == 2)
        assert(g.validate())

    # same seed, same graph
    first = random_rectangle_graph(strand_graph(3), 4, random.Random(1))
    second = random_rectangle_graph(strand_graph(3), 4, random.Random(1))
    assert(first == second)


def test_pickling():
    g = strand_graph(2).subdivide(1)
    assert(pickle.loads(pickle.dumps(g)) == g)
    assert(hash(pickle.loads(pickle.dumps(g))) == hash(g))


def _closed_graphs(seed, count=6, inner_edges=6):
    rng = random.Random(seed)
    return [random_rectangle_graph(theta_graph(), inner_edges, rng) for _ in range(count)]


def _shifted(d, removed):
    """Id of dart `d` once the darts in `removed` are dropped and ids compacted"""
    return d - sum(1 for r in removed if r < d)


def _apply(g, op, edge):
    return g.delete_edge(edge[0]) if op == 'delete' else g.contract_edge(edge[0])


def _both_orders(g, op1, e, op2, f):
    """Key of op1(e) then op2(f), and of op2(f) then op1(e), or None when one fails"""
    results = []
    for (first, x), (second, y) in (((op1, e), (op2, f)), ((op2, f), (op1, e))):
        try:
            h = _apply(g, first, x)
            h = _apply(h, second, tuple(_shifted(d, x) for d in y))
        except LoopContractionError:
            results.append(None)
            continue
        assert(h.validate())
        results.append(h.canonical_form()[0])
    return results


def test_double_dual():
    for g in _closed_graphs(11):
        assert(g.validate())
        dd = g.dual().dual()
        assert(dd.validate())
        assert(dd.canonical_form()[0] == g.canonical_form()[0])
        assert(nx.is_isomorphic(dd.to_multigraph(), g.to_multigraph()))
        # faces of g are the vertices of its dual
        assert(len(g.faces()) == g.dual().n_vertices())


def test_edge_operations_commute():
    rng = random.Random(5)
    for g in _closed_graphs(3) + [random_rectangle_graph(strand_graph(2), 5, rng)
                                  for _ in range(4)]:
        edges = g.inner_edges()
        for _ in range(6):
            e, f = rng.sample(edges, 2)
            for op1, op2 in (('delete', 'delete'), ('contract', 'contract'),
                             ('delete', 'contract')):
                if (op1 == 'contract' and g.is_loop(e[0])) or \
                   (op2 == 'contract' and g.is_loop(f[0])):
                    continue
                first, second = _both_orders(g, op1, e, op2, f)
                assert(first == second)


def test_random_operations_keep_euler():
    rng = random.Random(13)
    for start in (theta_graph(), strand_graph(1), strand_graph(3), cycle_graph(2)):
        g = start
        for step in range(4):
            g = random_rectangle_graph(g, len(g.inner_edges()) + 2, rng)
            assert(g.validate())
            e = rng.choice(g.inner_edges())
            assert(g.delete_edge(e[0]).validate())
            if not g.is_loop(e[0]):
                assert(g.contract_edge(e[0]).validate())
