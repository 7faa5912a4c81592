import json
import os

from fractions import Fraction

import numpy as np
import pytest

from chromalg.chromatic import ChromaticElement, PlanarPartition, reduce
from chromalg.exceptions import InputFormatError
from chromalg.formats import (dump_graph, graph_to_data, parse_element, parse_graph,
                              read_element, read_graph, read_pd, render)
from chromalg.graph import strand_graph, theta_graph
from chromalg.laurent import LaurentPolynomial
from chromalg.skein import standard_diagram
from chromalg.temperley_lieb import TLElement, jones_wenzl_p2

DATA = os.path.join(os.path.dirname(__file__), '..', 'data')

Q = LaurentPolynomial.gen('Q')


def _data(name):
    return os.path.join(DATA, name)


def test_read_graph():
    theta = read_graph(_data('theta.graph'))
    assert(theta.is_closed)
    assert(theta.canonical_form()[0] == theta_graph().canonical_form()[0])
    assert(len(read_graph(_data('triangle.graph')).faces()) == 2)

    g = strand_graph(2).subdivide(0)
    assert(parse_graph(dump_graph(g)) == g)
    assert(graph_to_data(theta)['sigma'] == [[0, 2, 4], [1, 5, 3]])


def test_parse_graph_errors():
    with pytest.raises(InputFormatError) as info:
        parse_graph('{\n  "n_bottom": 0,\n  oops\n}', 'g.graph')
    assert(info.value.path == 'g.graph')
    assert(info.value.line == 3)

    with pytest.raises(InputFormatError):
        parse_graph('[1, 2]')
    with pytest.raises(InputFormatError):
        parse_graph('{"n_bottom": 0, "n_top": 0, "alpha": [], "sigma": []}')
    with pytest.raises(InputFormatError):
        parse_graph('{"n_bottom": 0, "n_top": 0, "alpha": [[0, 1, 2]], '
                    '"sigma": [[0, 1, 2]], "boundary": []}')
    with pytest.raises(InputFormatError):
        parse_graph('{"n_bottom": 0, "n_top": 0, "alpha": [[0, "a"]], '
                    '"sigma": [[0]], "boundary": []}')
    # two interleaved loops at one vertex
    with pytest.raises(InputFormatError):
        parse_graph('{"n_bottom": 0, "n_top": 0, "alpha": [[0, 2], [1, 3]], '
                    '"sigma": [[0, 1, 2, 3]], "boundary": []}')
    with pytest.raises(InputFormatError) as info:
        read_graph(_data('missing.graph'))
    assert(str(info.value).startswith(_data('missing.graph')))


def test_read_pd():
    assert(read_pd(_data('trefoil.pd')) == standard_diagram('trefoil'))
    assert(read_pd(_data('hopf.pd')) == standard_diagram('hopf'))
    assert(read_pd(_data('unknot.pd')) == standard_diagram('unknot'))
    assert(read_pd(_data('figure_eight.pd')) == standard_diagram('figure-eight'))


def test_parse_element():
    x = read_element(_data('c2.element'))
    assert(isinstance(x, ChromaticElement))
    assert(x == ChromaticElement(2, {PlanarPartition.parse('{1,2}{3,4}'): 1,
                                     PlanarPartition.parse('{1,2,3,4}'): Q - 1}))

    p = read_element(_data('p2.element'))
    assert(isinstance(p, TLElement))
    assert(p == jones_wenzl_p2(1, 2))

    # terms add up
    assert(parse_element('n 1\n1 | {1,2}\nQ^1 | {1,2}\n') ==
           ChromaticElement(1, {PlanarPartition.parse('{1,2}'): Q + 1}))
    assert(parse_element('n 1  # comment\n\n').is_zero())


def test_element_graph_terms(tmpdir):
    tmpdir.join('strand.graph').write(dump_graph(strand_graph(2).subdivide(1)))
    path = tmpdir.join('x.element')
    path.write('n 2\n2 | @strand.graph\n')
    assert(read_element(str(path)) == reduce(strand_graph(2)).scale(2))

    path.write('n 1\n1 | @strand.graph\n')
    with pytest.raises(InputFormatError):
        read_element(str(path))


def test_parse_element_errors():
    with pytest.raises(InputFormatError):
        parse_element('')
    with pytest.raises(InputFormatError) as info:
        parse_element('k 2\n')
    assert(info.value.line == 1)
    with pytest.raises(InputFormatError) as info:
        parse_element('n 2\n1 {1,2}{3,4}\n')
    assert(info.value.line == 2)
    with pytest.raises(InputFormatError) as info:
        parse_element('n 2\n\n1 | {1,3}{2,4}\n', 'e.element')
    assert(info.value.path == 'e.element')
    assert(info.value.line == 3)
    assert(info.value.column == 4)
    with pytest.raises(InputFormatError):
        parse_element('m 2\n1 | {1,2}{3,4}\n')


def test_render_text():
    assert(render(Q ** 2 - Q) == 'Q^2 - Q^1')
    assert(render(Fraction(3, 2)) == '3/2')
    assert(render(6) == '6')
    assert(render(['{1,2}', '{1,4}{2,3}']) == '{1,2}\n{1,4}{2,3}')
    assert(render([[Q, 1], [1, Q]]) == 'Q^1, 1\n1, Q^1')
    assert(render(np.array([1.0, 2.5])) == '1\n2.5')
    assert(render({0: Q, 1: 2}) == '0: Q^1\n1: 2')
    assert(render(standard_diagram('hopf')) == 'X 4 1 3 2\nX 2 3 1 4\n')


def test_render_json():
    assert(json.loads(render(Q - 1, 'json')) == {'variable': 'Q', 'terms': [[0, -1, 1],
                                                                            [1, 1, 1]]})
    x = ChromaticElement.from_partition(PlanarPartition.parse('{1,2}'), Q)
    assert(json.loads(render(x, 'json')) == {'strands': 1, 'variable': 'Q',
                                             'terms': [['{1,2}', [[1, 1, 1]]]]})
    assert(json.loads(render(strand_graph(1), 'json'))['boundary'] == [0, 1])
    assert(json.loads(render(Fraction(3, 2), 'json')) == [3, 2])
    assert(json.loads(render({1: Q}, 'json')) == {'1': {'variable': 'Q',
                                                        'terms': [[1, 1, 1]]}})


@pytest.mark.parametrize('field, value', [
    ('alpha', '5'),
    ('alpha', '[5]'),
    ('sigma', '"cycles"'),
    ('sigma', '[[0, 1.5]]'),
    ('boundary', '{"a": 1}'),
    ('boundary', '[true]'),
    ('n_bottom', '"x"'),
    ('n_top', '-1'),
    ('free_loops', '1.0'),
    ('isolated_vertices', 'null'),
])
def test_parse_graph_field_types(field, value):
    data = {'n_bottom': '0', 'n_top': '0', 'alpha': '[[0, 1]]', 'sigma': '[[0, 1]]',
            'boundary': '[]'}
    data[field] = value
    text = '{\n' + ',\n'.join('  "%s": %s' % item for item in sorted(data.items())) + '\n}'
    with pytest.raises(InputFormatError) as info:
        parse_graph(text, 'bad.graph')
    assert(info.value.path == 'bad.graph')
    assert(info.value.line == sorted(data).index(field) + 2)
    assert(info.value.column == 3)
    assert(str(info.value).startswith('bad.graph:%d:3: ' % info.value.line))
