import operator
import os

import pytest

from chromalg import util
from chromalg.exceptions import ChromalgError, InputFormatError, LimitExceededError

BASE_PATH = os.path.dirname(__file__)


def _square_sum(chunk):
    return sum(x * x for x in range(*chunk))


def test_config_loading():
    class O: pass

    obj = O()
    setattr(obj, 'HELLO', 123)
    setattr(obj, 'hello', 456)

    cfg = util.Config()
    cfg.from_object(obj)

    assert('HELLO' in cfg)
    assert('hello' not in cfg)
    assert(cfg['HELLO'] == 123)

    cfg = util.Config(BASE_PATH)
    cfg.from_pyfile('_cfgutil.py')

    assert('BRACKET_CROSSING_LIMIT' in cfg)
    assert('other_limit' not in cfg)
    assert(cfg['BRACKET_CROSSING_LIMIT'] == 4)

    with pytest.raises(IOError):
        cfg.from_pyfile('_missing.py')


def test_config_create():
    defaults = util.ImmutableDict(JOBS=1, LOG_LEVEL='WARNING')
    cfg = util.Config.create({'JOBS': 4, 'jobs': 8}, defaults)
    assert(cfg['JOBS'] == 4)
    assert(cfg['LOG_LEVEL'] == 'WARNING')
    assert('jobs' not in cfg)

    cfg = util.Config.create('_cfgutil.py', defaults, base_path=BASE_PATH)
    assert(cfg['BRACKET_CROSSING_LIMIT'] == 4)
    assert(cfg['JOBS'] == 1)
    assert(defaults['JOBS'] == 1)

    cfg = util.Config.create({'PSI_EDGE_LIMIT': None, 'PHI_EDGE_LIMIT': '12'})
    assert(cfg.limit('PHI_EDGE_LIMIT') == 12)
    assert(cfg.limit('PSI_EDGE_LIMIT') > 2 ** 40)


def test_immutable_dict():
    d = util.ImmutableDict({'A': 1}, B=2)
    assert(dict(d) == {'A': 1, 'B': 2})
    assert(hash(d) == hash(util.ImmutableDict(A=1, B=2)))
    with pytest.raises(TypeError):
        d['C'] = 3
    with pytest.raises(TypeError):
        util.ImmutableDict({}, {})


def test_attrscope():
    as1 = util.AttributeScope(a=1, b=1)
    as2 = util.AttributeScope(as1, a=2, c=2, d=2)
    as3 = util.AttributeScope(as2, a=3, d=3, e=3, f=3)

    assert(as1['a'] == 1)
    assert(as2['a'] == 2)
    assert(as2['c'] == 2)
    assert(as3['a'] == 3)
    assert(as3['b'] == 1)
    assert(as3['c'] == 2)
    assert(as3['d'] == 3)
    assert(as3['e'] == 3)

    assert(len(as1) == 2)
    assert(len(as2) == 4)
    assert(len(as3) == 6)

    for k, v in as3.items():
        assert(as3[k] == v)

    assert(as3.all('a') == [3, 2, 1])
    assert(as3.all('f') == [3])
    assert(as3.get('missing') is None)

    moved = as2.with_parent(util.AttributeScope(b=5))
    assert(moved['b'] == 5)
    assert(moved['a'] == 2)
    assert(as2['b'] == 1)


def test_dispatchable():
    def command(ctx: object, graph_file: str, at: int=3):
        return (graph_file, at)

    disp = util.Dispatchable.from_signature(command)
    assert(list(disp.parameters) == ['ctx', 'graph_file', 'at'])
    assert(disp.parameters['graph_file'].required)
    assert(not disp.parameters['at'].required)
    assert(disp.parameters['at'].type_ is int)
    assert(disp(None, 'g') == ('g', 3))

    def untyped(ctx, x):
        pass

    with pytest.raises(TypeError):
        util.Dispatchable.from_signature(untyped)
    with pytest.raises(TypeError):
        util.Dispatchable.from_signature(42)


def test_exception_handler_order():
    def handler(ctx: object, exc: Exception):
        return 0

    scope = util.AttributeScope()
    general = util.ExceptionHandler(ChromalgError, handler, scope)
    specific = util.ExceptionHandler(InputFormatError, handler, scope)
    other = util.ExceptionHandler(ValueError, handler, scope)
    later = util.ExceptionHandler(ChromalgError, handler, scope)

    assert(sorted([later, general, specific])[:2] == [specific, general])
    assert(specific < general)
    assert(general < later)

    assert(general.handles(InputFormatError('x')))
    assert(not specific.handles(LimitExceededError('states', 10, 5)))
    assert(not other.handles(ChromalgError()))

    assert(util.exc_type_cmp(InputFormatError, ChromalgError) == -1)
    assert(util.exc_type_cmp(ChromalgError, InputFormatError) == 1)
    assert(util.exc_type_cmp(ValueError, ValueError) == 0)


def test_camel_case_split():
    assert(util.camel_case_split('InputFormatError') == ['Input', 'Format', 'Error'])
    assert(util.camel_case_split('NonPlanarError') == ['Non', 'Planar', 'Error'])


def test_map_reduce():
    chunks = [(0, 10), (10, 20), (20, 25)]
    expected = sum(x * x for x in range(25))
    assert(util.map_reduce(_square_sum, chunks) == expected)
    assert(util.map_reduce(_square_sum, chunks, jobs=2) == expected)
    assert(util.map_reduce(_square_sum, chunks, reducer=operator.mul, initial=1) ==
           _square_sum((0, 10)) * _square_sum((10, 20)) * _square_sum((20, 25)))
    assert(util.map_reduce(_square_sum, [], initial=0) == 0)
