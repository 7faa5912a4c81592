import random

import pytest

from chromalg.chromatic import identity
from chromalg.verify import SUITES, Check, Report, SuiteOptions, run_suite


def _options(seed=1, n=2):
    return SuiteOptions(n, random.Random(seed), random_graphs=4, inner_edges=3)


def test_report():
    report = Report('demo')
    assert(report.passed)
    assert(report.add('true', True))
    assert(not report.expect_equal('one is two', 1, 2))
    assert(report.expect_zero('zero', identity(1) - identity(1)))
    assert(not report.expect_zero('nonzero', identity(1)))

    assert(not report.passed)
    assert([c.name for c in report.failures] == ['one is two', 'nonzero'])
    assert(report.render().splitlines()[:2] == ['PASS true', 'FAIL one is two: 1 != 2'])
    data = report.to_data()
    assert(data['suite'] == 'demo')
    assert(not data['passed'])
    assert(len(data['checks']) == 4)

    other = Report('other', [Check('extra', True, 'detail')])
    report.extend(other)
    assert(report.checks[-1].render() == 'PASS extra (detail)')


@pytest.mark.parametrize('name', ['trivalent', 'bmw-relations', 'basis-rank',
                                  'chromatic-oracle', 'psi', 'diagram-commute',
                                  'gram-positivity'])
def test_suites_pass(name):
    report = run_suite(name, _options())
    assert(report.checks)
    assert(report.passed), report.render()


def test_potts_suite():
    report = run_suite('potts-oracle', _options())
    assert(report.passed), report.render()


def test_deterministic():
    first = run_suite('psi', _options(seed=3)).render()
    second = run_suite('psi', _options(seed=3)).render()
    assert(first == second)


def test_unknown_suite():
    assert('so3-cross' in SUITES)
    with pytest.raises(KeyError):
        run_suite('no-such-suite', _options())


@pytest.mark.parametrize('name', ['trivalent', 'diagram-commute', 'basis-rank', 'psi'])
def test_suites_pass_on_three_strands(name):
    report = run_suite(name, _options(seed=20090217, n=3))
    assert(report.checks)
    assert(report.passed), report.render()


def test_so3_cross_suite():
    report = run_suite('so3-cross', _options(seed=4))
    names = [c.name for c in report.checks]
    assert('figure-eight: chromatic = cabling' in names)
    assert('unknot = q + 1 + q^-1' in names)
    assert(report.passed), report.render()
