"""Input and output formats

Graph files are JSON objects:

    {
        "n_bottom": 1, "n_top": 1,
        "alpha": [[0, 1]],
        "sigma": [[0], [1]],
        "boundary": [0, 1],
        "free_loops": 0,
        "isolated_vertices": 0
    }

`alpha` lists the edges as dart pairs and `sigma` the counterclockwise
rotation of every vertex as a dart cycle; darts named in `boundary` but in no
cycle are boundary points. Dart ids may be any integers, they are compacted
in increasing order. `free_loops` and `isolated_vertices` are optional.

Element files hold one term per line after a header line `n N` (chromatic
algebra) or `m M` (Temperley-Lieb algebra):

    n 2
    Q^1 - 1 | {1,4}{2,3}
    -1 | @h.graph

A chromatic term is a planar partition or `@path` naming a graph file
(relative to the element file), which is reduced to the basis. A
Temperley-Lieb term is a matching `(1,4)(2,3)`. `#` starts a comment.

PD files are described in `LinkDiagram.parse`.

Functions:
    parse_graph(text, path) - Graph from JSON text
    read_graph(path) - Graph from a file
    graph_to_data(g) - JSON-ready dict of a graph
    dump_graph(g) - Graph as JSON text
    read_pd(path) - LinkDiagram from a PD file
    parse_element(text, path) - Algebra element from element-file text
    read_element(path) - Algebra element from a file
    render(value, fmt) - Text or JSON rendering of a result

License:    MIT, see LICENSE for more details
"""

import json
import os

from fractions import Fraction
from numbers import Rational

import numpy as np

from .chromatic import ChromaticElement, PlanarPartition, reduce
from .combination import LinearCombination
from .exceptions import GraphError, InputFormatError
from .graph import EmbeddedGraph
from .laurent import LaurentPolynomial
from .skein import LinkDiagram
from .temperley_lieb import TLDiagram, TLElement


FORMATS = ('text', 'json')


def _read(path: str) -> str:
    try:
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise InputFormatError('cannot read file: %s' % e.strerror, path, 1, 1)


# Graphs

_COUNT_KEYS = ('n_bottom', 'n_top', 'free_loops', 'isolated_vertices')


def _key_position(text: str, key: str) -> tuple:
    """Line and column of the first occurrence of `"key"` in `text`"""
    offset = text.find('"%s"' % key)
    if offset < 0:
        return 1, 1
    line = text.count('\n', 0, offset) + 1
    return line, offset - (text.rfind('\n', 0, offset) + 1) + 1


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _int_list(value, what: str, path: str, position: tuple) -> list:
    if not isinstance(value, list) or not all(_is_int(x) for x in value):
        raise InputFormatError('%s must be a list of integers' % what, path, *position)
    return value


def _list_of_int_lists(data: dict, key: str, what: str, text: str, path: str) -> list:
    position = _key_position(text, key)
    if not isinstance(data[key], list):
        raise InputFormatError('%s must be a list' % key, path, *position)
    return [_int_list(item, what, path, position) for item in data[key]]


def parse_graph(text: str, path: str='<string>') -> EmbeddedGraph:
    """Graph from the JSON format

    Raises:
        InputFormatError: On malformed JSON, missing keys, fields of the
            wrong type or an invalid map
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(e.msg, path, e.lineno, e.colno)
    if not isinstance(data, dict):
        raise InputFormatError('a graph file holds a JSON object', path)

    for key in ('n_bottom', 'n_top', 'alpha', 'sigma', 'boundary'):
        if key not in data:
            raise InputFormatError('missing key %r' % key, path)
    for key in _COUNT_KEYS:
        value = data.get(key, 0)
        if not _is_int(value) or value < 0:
            raise InputFormatError('%s must be a non-negative integer' % key, path,
                                   *_key_position(text, key))

    alpha, sigma = {}, {}
    for pair in _list_of_int_lists(data, 'alpha', 'an alpha pair', text, path):
        if len(pair) != 2:
            raise InputFormatError('alpha pairs have two darts', path,
                                   *_key_position(text, 'alpha'))
        d, a = pair
        alpha[d], alpha[a] = a, d
    for cycle in _list_of_int_lists(data, 'sigma', 'a sigma cycle', text, path):
        for i, d in enumerate(cycle):
            sigma[d] = cycle[(i + 1) % len(cycle)]
    boundary = _int_list(data['boundary'], 'boundary', path, _key_position(text, 'boundary'))
    for b in boundary:
        sigma.setdefault(b, b)

    try:
        g = EmbeddedGraph.from_maps(alpha, sigma, boundary, data['n_bottom'], data['n_top'],
                                    data.get('free_loops', 0),
                                    data.get('isolated_vertices', 0))
        return g.validate()
    except GraphError as e:
        raise InputFormatError(e.description, path)


def read_graph(path: str) -> EmbeddedGraph:
    return parse_graph(_read(path), path)


def graph_to_data(g: EmbeddedGraph) -> dict:
    boundary = set(g.boundary)
    return {
        'n_bottom': g.n_bottom,
        'n_top': g.n_top,
        'alpha': [list(e) for e in g.edges()],
        'sigma': [list(v) for v in g.vertices() if v[0] not in boundary],
        'boundary': list(g.boundary),
        'free_loops': g.free_loops,
        'isolated_vertices': g.isolated_vertices,
    }


def dump_graph(g: EmbeddedGraph) -> str:
    return json.dumps(graph_to_data(g), sort_keys=True)


# Link diagrams

def read_pd(path: str) -> LinkDiagram:
    return LinkDiagram.parse(_read(path), path)


# Algebra elements

def parse_element(text: str, path: str='<string>'):
    """ChromaticElement or TLElement from the element format

    Raises:
        InputFormatError: On a malformed header, coefficient or diagram
    """
    lines = [(i, raw.split('#', 1)[0]) for i, raw in enumerate(text.splitlines(), 1)]
    lines = [(i, line) for i, line in lines if line.strip()]
    if not lines:
        raise InputFormatError('empty element file', path)

    lineno, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2 or tokens[0] not in ('n', 'm') or not tokens[1].isdigit():
        raise InputFormatError('expected a header `n N` or `m M`', path, lineno, 1)
    strands = int(tokens[1])
    cls = ChromaticElement if tokens[0] == 'n' else TLElement
    result = cls.zero(strands)

    base = os.path.dirname(path) if path != '<string>' else '.'
    for lineno, line in lines[1:]:
        if '|' not in line:
            raise InputFormatError('expected `coefficient | diagram`', path, lineno, 1)
        coeff_text, diagram_text = line.split('|', 1)
        column = len(coeff_text) + 2
        coeff = LaurentPolynomial.parse(coeff_text, None, path, lineno, 1)
        result = result + _term(cls, strands, diagram_text, coeff, base, path,
                                lineno, column)
    return result


def _term(cls, strands, text, coeff, base, path, lineno, column) -> LinearCombination:
    text = text.strip()
    if cls is TLElement:
        diagram = TLDiagram.parse(text, strands, path, lineno, column)
        return TLElement.from_diagram(diagram).scale(coeff)
    if text.startswith('@'):
        g = read_graph(os.path.join(base, text[1:].strip()))
        if g.n_bottom != strands or g.n_top != strands:
            raise InputFormatError('graph %s does not have %d strands' % (text[1:], strands),
                                   path, lineno, column)
        return reduce(g).scale(coeff)
    partition = PlanarPartition.parse(text, strands, path, lineno, column)
    return ChromaticElement.from_partition(partition).scale(coeff)


def read_element(path: str):
    return parse_element(_read(path), path)


# Output

def _to_data(value):
    if isinstance(value, LaurentPolynomial):
        return {'variable': value.variable, 'terms': value.to_triples()}
    if isinstance(value, LinearCombination):
        return {'strands': value.strands, 'variable': value.variable,
                'terms': value.to_data()}
    if isinstance(value, EmbeddedGraph):
        return graph_to_data(value)
    if hasattr(value, 'to_data'):
        return value.to_data()
    if hasattr(value, 'render'):
        return value.render()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Fraction):
        return [value.numerator, value.denominator]
    if isinstance(value, (list, tuple)):
        return [_to_data(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _to_data(v) for k, v in value.items()}
    return value


def _to_text(value) -> str:
    if isinstance(value, EmbeddedGraph):
        return dump_graph(value)
    if hasattr(value, 'render'):
        return value.render()
    if isinstance(value, np.ndarray):
        return '\n'.join('%.12g' % x for x in value.ravel())
    if isinstance(value, Rational):
        return str(value)
    if isinstance(value, (list, tuple)):
        if value and all(isinstance(v, (list, tuple)) for v in value):
            return '\n'.join(', '.join(_to_text(x) for x in row) for row in value)
        return '\n'.join(_to_text(v) for v in value)
    if isinstance(value, dict):
        return '\n'.join('%s: %s' % (k, _to_text(v)) for k, v in value.items())
    return str(value)


def render(value, fmt: str='text') -> str:
    """Deterministic rendering of a command result

    Args:
        value (any): Polynomial, element, graph, array, number or a list or
            dict of those
        fmt (optional, str): 'text' or 'json'
    """
    if fmt == 'json':
        return json.dumps(_to_data(value), sort_keys=True)
    return _to_text(value)
