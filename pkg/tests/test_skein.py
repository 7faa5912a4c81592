import pickle

import pytest

from chromalg.chromatic import cupcap, trace
from chromalg.exceptions import GeneratorRangeError, InputFormatError, LimitExceededError
from chromalg.laurent import LaurentPolynomial, convert
from chromalg.skein import (LinkDiagram, TangleWord, bmw_rank, cable, kauffman_bracket,
                            resolutions, resolve_to_chromatic, so3_kauffman_via_cabling,
                            so3_kauffman_via_chromatic, standard_diagram,
                            verify_bmw_relations)

A = LaurentPolynomial.gen('A')
q = LaurentPolynomial.gen('q')

HOPF_BRACKET = A ** 6 + A ** 2 + A ** -2 + A ** -6


def test_diagrams():
    trefoil = standard_diagram('trefoil')
    assert(trefoil.n_crossings == 3)
    assert(trefoil.n_components() == 1)
    assert(trefoil.crossing_signs() == [1, 1, 1])
    assert(trefoil.writhe() == 3)

    hopf = standard_diagram('hopf')
    assert(hopf.n_components() == 2)
    assert(len(hopf.components()) == 2)
    assert(abs(hopf.writhe()) == 2)

    assert(standard_diagram('unlink').n_components() == 2)
    assert(standard_diagram('figure-eight').writhe() == 0)
    assert(trefoil.map().validate())


def test_parse():
    trefoil = standard_diagram('trefoil')
    assert(LinkDiagram.parse(trefoil.render()) == trefoil)
    assert(LinkDiagram.parse('# two loops\nU\n  U\n') == LinkDiagram((), 2))

    with pytest.raises(InputFormatError) as info:
        LinkDiagram.parse('U\n  X 1 2 3', path='bad.pd')
    assert(info.value.line == 2)
    assert(info.value.column == 3)
    with pytest.raises(InputFormatError):
        LinkDiagram.parse('X 1 2 3 4')
    with pytest.raises(InputFormatError):
        LinkDiagram.parse('X 1 2 0 4')
    with pytest.raises(InputFormatError):
        LinkDiagram.parse('V')


def test_pickling():
    hopf = standard_diagram('hopf')
    assert(pickle.loads(pickle.dumps(hopf)) == hopf)


def test_kauffman_bracket():
    d = -A ** 2 - A ** -2
    assert(kauffman_bracket(LinkDiagram()) == 1)
    assert(kauffman_bracket(standard_diagram('unknot')) == d)
    assert(kauffman_bracket(standard_diagram('unlink')) == d ** 2)
    assert(kauffman_bracket(standard_diagram('hopf')) == HOPF_BRACKET)
    assert(kauffman_bracket(standard_diagram('trefoil')) ==
           A ** 7 + A ** 3 + A ** -1 - A ** -9)
    assert(kauffman_bracket(standard_diagram('trefoil'), jobs=2) ==
           kauffman_bracket(standard_diagram('trefoil')))

    with pytest.raises(LimitExceededError):
        kauffman_bracket(standard_diagram('trefoil'), limit=2)


def test_resolutions():
    hopf = standard_diagram('hopf')
    states = list(resolutions(hopf))
    assert(len(states) == 9)
    assert(all(p + n + v == 2 for _, p, n, v in states))
    assert(sum(1 for _, p, n, v in states if v == 2) == 1)


def test_so3_via_chromatic():
    assert(so3_kauffman_via_chromatic(standard_diagram('unknot')) == q + 1 + q ** -1)
    assert(so3_kauffman_via_chromatic(standard_diagram('unlink')) == (q + 1 + q ** -1) ** 2)

    with pytest.raises(LimitExceededError):
        so3_kauffman_via_chromatic(standard_diagram('trefoil'), limit=2)


def test_so3_oracles_agree():
    for name in ('unknot', 'unlink', 'hopf', 'trefoil', 'figure-eight'):
        L = standard_diagram(name)
        assert(convert(so3_kauffman_via_chromatic(L), 'A') == so3_kauffman_via_cabling(L))

    with pytest.raises(LimitExceededError):
        so3_kauffman_via_cabling(standard_diagram('trefoil'), limit=2)


def test_cable():
    assert(cable(standard_diagram('hopf')).n_crossings == 8)
    assert(cable(standard_diagram('trefoil')).n_crossings == 12)
    # the blackboard 2-cable of a knot has two components
    assert(cable(standard_diagram('trefoil')).n_components() == 2)


def test_tangle_words():
    t = TangleWord.parse('B1 e2 b1')
    assert(t.n == 3)
    assert(len(t) == 3)
    assert(str(t) == 'B1 e2 b1')
    assert(TangleWord.parse('', 2).n == 2)

    with pytest.raises(InputFormatError) as info:
        TangleWord.parse('B1 x2')
    assert(info.value.column == 4)
    with pytest.raises(GeneratorRangeError):
        TangleWord(2, [('B', 2)])
    with pytest.raises(GeneratorRangeError):
        TangleWord(2, [('c', 1)])


def test_closure():
    assert(TangleWord(3).closure() == LinkDiagram((), 3))
    assert(TangleWord(2, [('e', 1)]).closure() == LinkDiagram((), 1))

    hopf = TangleWord.parse('B1 B1').closure()
    assert(hopf.n_crossings == 2)
    assert(hopf.n_components() == 2)
    assert(kauffman_bracket(hopf) == HOPF_BRACKET)


def test_to_chromatic():
    assert(TangleWord.parse('e1').to_chromatic() == cupcap(1, 2))
    t = TangleWord.parse('B1 b1')
    assert(resolve_to_chromatic(t) == TangleWord(2).to_chromatic())
    assert(len(resolve_to_chromatic(standard_diagram('trefoil'))) == 27)

    # the trace of a word is the invariant of its closure
    for text in ('B1', 'B1 B1', 'B1 e1 b1', 'B1 b2 B1'):
        word = TangleWord.parse(text)
        assert(convert(trace(word.to_chromatic()), 'A') ==
               so3_kauffman_via_cabling(word.closure()))


def test_bmw_relations():
    for n in (2, 3):
        assert(all(r.is_zero() for _, r in verify_bmw_relations(n)))

    with pytest.raises(GeneratorRangeError):
        verify_bmw_relations(1)


def test_bmw_rank():
    assert(bmw_rank(2, ['', 'B1', 'e1']) == 3)
    assert(bmw_rank(2, ['', 'e1', 'B1 b1']) == 2)
    assert(bmw_rank(3, [TangleWord.parse('B1 B2', 3), TangleWord.parse('B2 B1', 3)]) == 2)


def _closed_bracket(text, n=None):
    return kauffman_bracket(TangleWord.parse(text, n).closure())


def test_reidemeister_moves():
    d = -A ** 2 - A ** -2
    # a single twist
    assert(_closed_bracket('B1') == -A ** 3 * d)
    assert(_closed_bracket('b1') == -A ** -3 * d)
    # cancelling pair
    assert(_closed_bracket('B1 b1') == d ** 2)
    assert(_closed_bracket('B1 b1') == _closed_bracket('', 2))
    assert(_closed_bracket('B2 B1 b1', 3) == _closed_bracket('B2', 3))
    # braid move
    assert(_closed_bracket('B1 B2 B1') == _closed_bracket('B2 B1 B2'))
    assert(_closed_bracket('b1 B2 B1') == _closed_bracket('B2 B1 b2'))


def test_trefoil_presentations():
    word = TangleWord.parse('B1 B1 B1').closure()
    trefoil = standard_diagram('trefoil')
    assert(word.n_components() == 1)
    assert(word.writhe() == trefoil.writhe())
    assert(kauffman_bracket(word) == kauffman_bracket(trefoil))
    assert(so3_kauffman_via_chromatic(word) == so3_kauffman_via_chromatic(trefoil))


def test_split_union():
    unknot = q + 1 + q ** -1
    for name in ('hopf', 'trefoil'):
        L = standard_diagram(name)
        split = LinkDiagram(L.crossings, L.free_loops + 1)
        assert(so3_kauffman_via_chromatic(split) == so3_kauffman_via_chromatic(L) * unknot)
        assert(kauffman_bracket(split) == kauffman_bracket(L) * (-A ** 2 - A ** -2))
