import io
import json
import logging
import os

import pytest

from chromalg.app import Chromalg
from chromalg.cli import create_app
from chromalg.commands import CommandGroup
from chromalg.context import RunContext
from chromalg.exceptions import InexactDivisionError

DATA = os.path.join(os.path.dirname(__file__), '..', 'data')


def _data(name):
    return os.path.join(DATA, name)


def _run(*argv, config=None):
    out = io.StringIO()
    code = create_app(config).run(list(argv), out=out)
    return code, out.getvalue()


def test_graph_commands():
    assert(_run('chromatic', _data('triangle.graph'), '--at', '3') == (0, '6\n'))
    assert(_run('chromatic', _data('triangle.graph')) == (0, 'Q^3 - 3*Q^2 + 2*Q^1\n'))
    assert(_run('ranksum', _data('triangle.graph'), '--at', '3/2') == (0, '-3/8\n'))
    assert(_run('dual-chromatic', _data('theta.graph')) == (0, 'Q^3 - 3*Q^2 + 2*Q^1\n'))

    code, out = _run('faces', _data('theta.graph'))
    assert(code == 0)
    assert(len(out.splitlines()) == 3)
    # a closed graph has no face outside a rectangle
    assert(not any(line.endswith('(outer)') for line in out.splitlines()))

    code, out = _run('--format', 'json', 'dual', _data('theta.graph'))
    assert(code == 0)
    assert(len(json.loads(out)['sigma']) == 3)


def test_algebra_commands():
    assert(_run('basis', '--n', '2') == (0, '{1,2}{3,4}\n{1,2,3,4}\n{1,4}{2,3}\n'))
    assert(_run('basis', '--n', '2', '--rank') == (0, '3\n'))
    assert(_run('trace', _data('c2.element')) == (0, 'Q^3 - 3*Q^2 + 4*Q^1 - 2\n'))
    assert(_run('tl-trace', _data('p2.element')) == (0, 'd^2 - 1\n'))
    assert(_run('trace', _data('p2.element'), '--algebra', 'tl') == (0, 'd^2 - 1\n'))
    assert(_run('gram', '--n', '1') == (0, 'Q^1 - 1\n'))
    assert(_run('gram', '--n', '1', '--Q', '3') == (0, '2\n'))
    assert(_run('transfer', '--n', '2') == (0, 'd^2 + 1\n'))
    assert(_run('transfer', '--n', '2', '--loops') == (0, '1: 2\ne1: 1\n'))

    code, out = _run('--format', 'json', 'reduce', _data('theta.graph'))
    assert(code == 0)
    assert(json.loads(out) == {'strands': 0, 'variable': 'Q',
                               'terms': [['{}', [[0, 2, 1], [1, -3, 1], [2, 1, 1]]]]})


def test_knot_commands():
    assert(_run('kauffman-so3', _data('unknot.pd')) == (0, 'q^1 + 1 + q^-1\n'))
    assert(_run('kauffman-so3', _data('unknot.pd'), '--oracle', 'cable') ==
           (0, 'q^1 + 1 + q^-1\n'))
    assert(_run('bracket', _data('hopf.pd')) == (0, 'A^6 + A^2 + A^-2 + A^-6\n'))
    assert(_run('tangle', 'B1 b1') == (0, '1 | {1,4}{2,3}\n'))

    code, out = _run('tangle', 'B1 B1', '--closure')
    assert(code == 0)
    assert(out.startswith('X '))
    assert(len(out.split()) == 10)


def test_physics_commands():
    assert(_run('potts', '--rows', '1', '--cols', '2', '--Q', '3') == (0, '3*x^1 + 6\n'))
    assert(_run('potts', '--rows', '1', '--cols', '2', '--Q', '3', '--method', 'spins') ==
           (0, '3*x^1 + 6\n'))
    assert(_run('potts', '--rows', '1', '--cols', '2') == (0, '0: Q^2 - Q^1\n1: Q^1\n'))


def test_verify_command():
    code, out = _run('--seed', '5', 'verify', '--suite', 'trivalent', '--n', '2')
    assert(code == 0)
    assert(out.splitlines() == ['PASS C_2 F relation at 1', 'PASS C_2 tadpole'])

    code, out = _run('--format', 'json', 'verify', '--suite', 'bmw-relations', '--n', '2')
    assert(code == 0)
    assert(json.loads(out)['passed'])


def test_errors(caplog):
    with caplog.at_level(logging.ERROR, logger='chromalg'):
        code, out = _run('chromatic', _data('missing.graph'))
    assert(code == 2)
    assert(out == '')
    assert('missing.graph' in caplog.text)

    assert(_run('trace', _data('p2.element'))[0] == 2)
    assert(_run('potts', '--rows', '0')[0] == 2)
    assert(_run('potts', '--Q', '3/2', '--method', 'spins')[0] == 2)
    assert(_run('bracket', _data('trefoil.pd'), config={'BRACKET_CROSSING_LIMIT': 2})[0] == 2)
    assert(_run('tangle', 'B1 x2')[0] == 2)
    assert(_run('basis', '--n', '-1')[0] == 2)
    assert(_run('basis', '--n', '-1', '--rank')[0] == 2)


def test_usage_errors():
    assert(_run()[0] == 2)
    assert(_run('no-such-command')[0] == 2)
    assert(_run('verify', '--suite', 'no-such-suite')[0] == 2)
    assert(_run('--config', _data('missing.py'), 'basis')[0] == 2)


def test_config_file(tmpdir):
    config = tmpdir.join('limits.py')
    config.write('BRACKET_CROSSING_LIMIT = 2\n')
    assert(_run('--config', str(config), 'bracket', _data('trefoil.pd'))[0] == 2)
    assert(_run('--config', str(config), 'bracket', _data('hopf.pd'))[0] == 0)


def test_exception_handlers():
    group = CommandGroup('extra')
    seen = []

    @group.command()
    def divide(ctx: RunContext):
        raise InexactDivisionError('Q^2 + 1 by Q - 1')

    @group.command()
    def crash(ctx: RunContext):
        raise RuntimeError('unexpected')

    @group.exception(InexactDivisionError)
    def inexact(ctx: RunContext, exc: InexactDivisionError):
        seen.append(exc)
        return exc.exit_code

    app = Chromalg('extra', groups=[group])
    assert(app.run(['divide'], out=io.StringIO()) == 1)
    assert(len(seen) == 1)

    # unhandled exceptions propagate
    with pytest.raises(RuntimeError):
        app.run(['crash'], out=io.StringIO())


def test_default_logger():
    first = create_app().logger
    second = create_app().logger
    assert(first is second)
    assert(sum(getattr(h, '_chromalg_default', False) for h in first.handlers) == 1)


def test_malformed_graph_fields(tmpdir, caplog):
    bad = tmpdir.join('bad.graph')
    bad.write('{"n_bottom": 0, "n_top": 0, "alpha": 5, "sigma": [], "boundary": []}')
    with caplog.at_level(logging.ERROR, logger='chromalg'):
        assert(_run('chromatic', str(bad)) == (2, ''))
    assert('alpha must be a list' in caplog.text)

    bad.write('{"n_bottom": "x", "n_top": 0, "alpha": [], "sigma": [], "boundary": []}')
    assert(_run('chromatic', str(bad))[0] == 2)
