import random

import networkx as nx
import pytest

from chromalg.exceptions import BoundaryMismatchError, LimitExceededError
from chromalg.graph import circle_graph, cycle_graph, path_graph, strand_graph, theta_graph
from chromalg.laurent import LaurentPolynomial
from chromalg.polynomials import (ChromaticCache, chromatic_delcon, chromatic_ranksum,
                                  dual_chromatic, flow_polynomial, proper_colorings)

Q = LaurentPolynomial.gen('Q')


def _random_multigraph(rng):
    g = nx.MultiGraph()
    g.add_nodes_from(range(rng.randint(1, 5)))
    for _ in range(rng.randint(0, 8)):
        g.add_edge(rng.randrange(len(g)), rng.randrange(len(g)))
    return g


def test_small_graphs():
    triangle = Q * (Q - 1) * (Q - 2)
    assert(chromatic_delcon(nx.complete_graph(3)) == triangle)
    assert(chromatic_delcon(nx.complete_graph(3)).evaluate(3) == 6)
    assert(chromatic_delcon(nx.complete_graph(4)) == triangle * (Q - 3))
    assert(chromatic_delcon(nx.cycle_graph(4)) == (Q - 1) ** 4 + (Q - 1))
    assert(chromatic_delcon(nx.path_graph(4)) == Q * (Q - 1) ** 3)
    assert(chromatic_delcon(nx.empty_graph(2)) == Q ** 2)
    assert(chromatic_delcon(nx.MultiGraph()) == 1)

    # parallel edges do not matter, loops kill everything
    g = nx.MultiGraph([(0, 1), (0, 1), (1, 2)])
    assert(chromatic_delcon(g) == Q * (Q - 1) ** 2)
    g.add_edge(2, 2)
    assert(chromatic_delcon(g) == 0)
    assert(chromatic_ranksum(g) == 0)


def test_embedded_input():
    assert(chromatic_delcon(theta_graph()) == Q * (Q - 1))
    assert(chromatic_delcon(cycle_graph(3)) == Q * (Q - 1) * (Q - 2))
    assert(chromatic_delcon(circle_graph()) == 0)
    assert(chromatic_ranksum(cycle_graph(5)) == chromatic_delcon(cycle_graph(5)))


def test_blocks():
    # two triangles sharing a vertex
    bowtie = nx.Graph([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    triangle = Q * (Q - 1) * (Q - 2)
    assert(chromatic_delcon(bowtie) == triangle * triangle / Q)
    assert(chromatic_delcon(bowtie) == chromatic_ranksum(bowtie))


def test_delcon_against_ranksum_and_colorings():
    rng = random.Random(2009)
    for _ in range(40):
        g = _random_multigraph(rng)
        chi = chromatic_delcon(g)
        assert(chi == chromatic_ranksum(g))
        for k in range(4):
            assert(chi.evaluate(k) == proper_colorings(g, k))


def test_ranksum_limit():
    with pytest.raises(LimitExceededError):
        chromatic_ranksum(nx.complete_graph(4), limit=5)
    assert(chromatic_ranksum(nx.complete_graph(4), jobs=1, limit=6) ==
           chromatic_delcon(nx.complete_graph(4)))


def test_dual_chromatic():
    assert(dual_chromatic(theta_graph()) == Q * (Q - 1) * (Q - 2))
    assert(dual_chromatic(cycle_graph(3)) == Q * (Q - 1))
    assert(dual_chromatic(circle_graph()) == Q * (Q - 1))
    # a bridge is a loop of the dual
    assert(dual_chromatic(path_graph(2)) == 0)

    with pytest.raises(BoundaryMismatchError):
        dual_chromatic(strand_graph(1))


def test_flow_polynomial():
    assert(flow_polynomial(theta_graph()) == (Q - 1) * (Q - 2))
    assert(flow_polynomial(path_graph(2)) == 0)
    for g in (theta_graph(), cycle_graph(3), cycle_graph(4)):
        assert(Q * flow_polynomial(g) == dual_chromatic(g))


def test_cache():
    cache = ChromaticCache()
    k4 = nx.complete_graph(4)
    first = chromatic_delcon(k4, cache)
    assert(len(cache) > 0)

    relabelled = nx.relabel_nodes(k4, {0: 'a', 1: 'b', 2: 'c', 3: 'd'})
    assert(chromatic_delcon(relabelled, cache) == first)
    assert(cache.hits >= 1)

    cache.clear()
    assert(len(cache) == 0)
    assert(cache.hits == 0)


def test_proper_colorings():
    assert(proper_colorings(nx.complete_graph(3), 3) == 6)
    assert(proper_colorings(nx.complete_graph(3), 2) == 0)
    assert(proper_colorings(nx.MultiGraph([(0, 0)]), 3) == 0)
    assert(proper_colorings(theta_graph(), 3) == 6)


def test_degree_and_leading_coefficient():
    rng = random.Random(23)
    for _ in range(10):
        g = nx.gnm_random_graph(rng.randint(1, 6), rng.randint(0, 8), seed=rng.randrange(1000))
        chi = chromatic_delcon(g)
        assert(chi.degree() == g.number_of_nodes())
        assert(chi.leading_coefficient() == 1)
        assert(chi.low_degree() >= nx.number_connected_components(g))


def test_disjoint_union():
    rng = random.Random(29)
    for _ in range(8):
        g, h = _random_multigraph(rng), _random_multigraph(rng)
        union = nx.disjoint_union(g, h)
        assert(chromatic_delcon(union) == chromatic_delcon(g) * chromatic_delcon(h))
        assert(chromatic_ranksum(union) == chromatic_ranksum(g) * chromatic_ranksum(h))
