import pytest

from chromalg.chromatic import (ChromaticElement, PlanarPartition, cupcap as chromatic_cupcap,
                                enumerate_basis, identity as chromatic_identity, reduce,
                                star_graph, trace)
from chromalg.exceptions import (AlgebraError, BoundaryMismatchError, GeneratorRangeError,
                                 InputFormatError, LimitExceededError)
from chromalg.graph import EmbeddedGraph, strand_graph
from chromalg.laurent import LaurentPolynomial, convert
from chromalg.temperley_lieb import (TLDiagram, TLElement, closure_circles, compose, cupcap,
                                     cupcap_diagram, generator_e, identity, jones_wenzl_p2,
                                     loop_configurations, phi, phi_element, phi_rank,
                                     potts_tl_partition, tl_trace, transfer_matrix,
                                     transfer_words, verify_tl_relations)

d = LaurentPolynomial.gen('d')


def test_diagrams():
    x = TLDiagram.parse('(2,3)(1,4)')
    assert(x.m == 2)
    assert(str(x) == '(1,4)(2,3)')
    assert(x.partner() == {1: 4, 4: 1, 2: 3, 3: 2})
    assert(str(TLDiagram(0, [])) == '()')
    assert(cupcap_diagram(1, 2) == TLDiagram.parse('(1,2)(3,4)'))

    with pytest.raises(InputFormatError):
        TLDiagram.parse('(1,3)(2,4)')
    with pytest.raises(InputFormatError):
        TLDiagram.parse('(1,2')
    with pytest.raises(InputFormatError):
        TLDiagram.parse('(1,2)', m=2)
    with pytest.raises(AlgebraError):
        TLDiagram(1, [(1, 1)])
    with pytest.raises(GeneratorRangeError):
        cupcap_diagram(3, 3)


def test_compose():
    e = cupcap_diagram(1, 2)
    assert(compose(e, e) == (e, 1))
    one = identity(2).support()[0]
    assert(compose(one, e) == (e, 0))
    assert(compose(cupcap_diagram(1, 3), cupcap_diagram(2, 3)) ==
           (TLDiagram.parse('(1,2)(3,6)(4,5)'), 0))

    with pytest.raises(AlgebraError):
        compose(e, cupcap_diagram(1, 3))


def test_products():
    e = cupcap(1, 2)
    assert(e * e == e.scale(d))
    assert(identity(2) * e == e)
    assert(generator_e(1, 2) * generator_e(1, 2) == generator_e(1, 2))

    p = jones_wenzl_p2(1, 2)
    assert(p * p == p)
    assert(p * e == TLElement.zero(2))


def test_relations():
    for m in (2, 3, 4):
        assert(all(r.is_zero() for _, r in verify_tl_relations(m)))
    assert(len(verify_tl_relations(4)) == 8)


def test_trace():
    assert(tl_trace(identity(3)) == d ** 3)
    assert(tl_trace(cupcap(1, 2)) == d)
    assert(tl_trace(generator_e(1, 2)) == 1)
    assert(tl_trace(jones_wenzl_p2(1, 2)) == d ** 2 - 1)
    assert(closure_circles(cupcap_diagram(1, 3)) == 2)

    # trace property
    a, b = cupcap(1, 3) + identity(3).scale(d), cupcap(2, 3)
    assert(tl_trace(a * b) == tl_trace(b * a))


def test_from_graph_boundary():
    assert(TLElement.from_graph_boundary(strand_graph(2)) == identity(2))
    cap_cup = star_graph(PlanarPartition.parse('{1,2}{3,4}'))
    assert(TLElement.from_graph_boundary(cap_cup) == cupcap(1, 2))
    with pytest.raises(AlgebraError):
        TLElement.from_graph_boundary(star_graph(PlanarPartition.parse('{1,2,3,4}')))


def test_phi():
    assert(phi(strand_graph(1)) == jones_wenzl_p2(1, 2))
    assert(phi(strand_graph(2)) == jones_wenzl_p2(1, 4) * jones_wenzl_p2(3, 4))
    assert(phi(EmbeddedGraph.empty(free_loops=1)) ==
           TLElement.from_diagram(TLDiagram(0, []), d ** 2 - 1))

    with pytest.raises(LimitExceededError):
        phi(strand_graph(2), limit=1)
    with pytest.raises(BoundaryMismatchError):
        phi(EmbeddedGraph((1, 0), (0, 1), (0, 1), 2, 0))


def test_phi_commutes_with_trace():
    for n in (1, 2):
        for p in enumerate_basis(n):
            g = star_graph(p)
            expected = convert(trace(ChromaticElement.from_partition(p)), 'd')
            assert(tl_trace(phi(g)) == expected)
            assert(tl_trace(phi(g, jobs=2)) == expected)


def test_phi_element():
    e = chromatic_cupcap(1, 2)
    assert(phi_element(chromatic_identity(1)) == jones_wenzl_p2(1, 2))
    assert(phi_element(e * e) == phi_element(e) * phi_element(e))
    assert(phi_element(reduce(strand_graph(2))) == phi(strand_graph(2)))
    assert(phi_element(ChromaticElement.zero(1)).is_zero())


def test_phi_rank():
    assert(phi_rank(1) == 1)
    assert(phi_rank(2) == 3)


def test_transfer_matrix():
    assert(transfer_matrix(2) == identity(2) + generator_e(1, 2))
    assert(potts_tl_partition(2, 1) == d ** 2 + 1)
    assert(potts_tl_partition(2, 0) == d ** 2)

    with pytest.raises(GeneratorRangeError):
        transfer_matrix(3)


def test_loop_configurations():
    assert(transfer_words(2, 2) == [(), (1,), (1,), (1, 1)])
    assert(loop_configurations(2, 1) == [((), 2), ((1,), 1)])

    for n, m in ((2, 2), (4, 1)):
        loops = sum((d ** (circles - len(word)) for word, circles in loop_configurations(n, m)),
                    LaurentPolynomial.zero('d'))
        assert(loops == potts_tl_partition(n, m))
