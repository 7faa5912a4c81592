"""Verification suites

Every suite checks exact identities between independent computations and
returns a `Report` of named checks. Randomized suites draw from the
`random.Random` passed in, so a fixed seed gives byte-identical reports.

Classes:
    Check - Outcome of one named check
    Report - Ordered collection of checks
    SuiteOptions - Parameters shared by all suites

Functions:
    run_suite(name, options) - Run one suite, or all of them for 'all'

License:    MIT, see LICENSE for more details
"""

import logging
import random

from fractions import Fraction

import networkx as nx
from sympy.utilities.iterables import multiset_partitions

from . import chromatic, polynomials, potts, skein, temperley_lieb as tl
from .exceptions import AlgebraError, ChromalgError
from .graph import EmbeddedGraph, cycle_graph, random_rectangle_graph, theta_graph
from .laurent import LaurentPolynomial, ParameterFrame


logger = logging.getLogger(__name__)

_Q = LaurentPolynomial.gen('Q')


class Check:
    """Outcome of one named check.

    Attributes:
        name (str): Check name
        passed (bool): Outcome
        detail (str): Explanation of a failure, or reported data
    """

    __slots__ = ['name', 'passed', 'detail']

    def __init__(self, name: str, passed: bool, detail: str=''):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def render(self) -> str:
        if self.passed:
            return 'PASS %s' % self.name + (' (%s)' % self.detail if self.detail else '')
        return 'FAIL %s: %s' % (self.name, self.detail)

    def __repr__(self):
        return '<%s %s %s>' % (self.__class__.__name__, self.name,
                               'passed' if self.passed else 'failed')


class Report:
    """Ordered collection of checks"""

    __slots__ = ['name', 'checks']

    def __init__(self, name: str, checks=None):
        self.name = name
        self.checks = list(checks or [])

    def add(self, name: str, passed: bool, detail: str='') -> bool:
        self.checks.append(Check(name, passed, detail))
        return passed

    def expect_equal(self, name: str, left, right) -> bool:
        return self.add(name, left == right,
                        '' if left == right else '%s != %s' % (_short(left), _short(right)))

    def expect_zero(self, name: str, residual) -> bool:
        return self.add(name, residual.is_zero(),
                        '' if residual.is_zero() else 'residual %s' % _short(residual))

    def extend(self, other: 'Report') -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def render(self) -> str:
        return '\n'.join(c.render() for c in self.checks)

    def to_data(self) -> dict:
        return {'suite': self.name, 'passed': self.passed,
                'checks': [{'name': c.name, 'passed': c.passed, 'detail': c.detail}
                           for c in self.checks]}

    def __repr__(self):
        return '<%s %s: %d checks, %d failed>' % (self.__class__.__name__, self.name,
                                                 len(self.checks), len(self.failures))


class SuiteOptions:
    """Parameters shared by all suites.

    Attributes:
        n (int): Largest strand count
        rng (random.Random): Source of randomness
        jobs (int): Worker processes for state sums
        random_graphs (int): Number of random graphs per suite
        inner_edges (int): Inner edges of every random graph
        generic_d (Fraction): Value of d for exact rank computations
    """

    __slots__ = ['n', 'rng', 'jobs', 'random_graphs', 'inner_edges', 'generic_d']

    def __init__(self, n: int=3, rng: random.Random=None, jobs: int=1,
                 random_graphs: int=20, inner_edges: int=5, generic_d=Fraction(7, 2)):
        self.n = n
        self.rng = rng or random.Random(0)
        self.jobs = jobs
        self.random_graphs = random_graphs
        self.inner_edges = inner_edges
        self.generic_d = Fraction(generic_d)


def _short(value, width: int=120) -> str:
    text = ' '.join(str(value).split())
    return text if len(text) <= width else text[:width - 3] + '...'


def _random_graph(n: int, opts: SuiteOptions) -> EmbeddedGraph:
    start = opts.rng.choice(chromatic.enumerate_basis(n))
    return random_rectangle_graph(chromatic.star_graph(start), opts.inner_edges, opts.rng)


# Suites

def bmw_relations(opts: SuiteOptions) -> Report:
    report = Report('bmw-relations')
    for n in range(2, max(opts.n, 2) + 1):
        for name, residual in skein.verify_bmw_relations(n):
            report.expect_zero('C_%d %s' % (n, name), residual)
    return report


def diagram_commute(opts: SuiteOptions) -> Report:
    """Closing the phi image in TL equals the chromatic trace, Q = d^2"""
    report = Report('diagram-commute')
    graphs = []
    for n in range(1, opts.n + 1):
        graphs += [('C_%d basis %s' % (n, p), chromatic.star_graph(p))
                   for p in chromatic.enumerate_basis(n)]
    for k in range(opts.random_graphs):
        n = opts.rng.randint(1, opts.n)
        graphs.append(('random graph %d in C_%d' % (k, n), _random_graph(n, opts)))

    for name, g in graphs:
        image = tl.phi(g, jobs=opts.jobs)
        left = tl.tl_trace(image)
        right = ParameterFrame.substitute(chromatic.trace(chromatic.reduce(g)), 'd')
        report.expect_equal('%s: tl_trace(phi) = trace' % name, left, right)
        if name.startswith('random'):
            reduced = tl.phi_element(chromatic.reduce(g))
            report.expect_equal('%s: phi factors through reduce' % name, image, reduced)
    return report


def _brute_force_basis_size(n: int) -> int:
    count = 0
    for blocks in multiset_partitions(list(range(1, 2 * n + 1))):
        try:
            chromatic.PlanarPartition(n, blocks)
        except AlgebraError:
            continue
        count += 1
    return count


def basis_rank(opts: SuiteOptions) -> Report:
    report = Report('basis-rank')
    for n in range(1, opts.n + 1):
        size = len(chromatic.enumerate_basis(n))
        report.expect_equal('C_%d basis size' % n, size,
                            _brute_force_basis_size(n))
        report.expect_equal('C_%d phi rank' % n, tl.phi_rank(n, opts.generic_d), size)
    return report


def trivalent(opts: SuiteOptions) -> Report:
    report = Report('trivalent')
    for n in range(2, max(opts.n, 2) + 1):
        for name, residual in chromatic.verify_trivalent_relations(n):
            report.expect_zero('C_%d %s' % (n, name), residual)
    return report


POTTS_GRIDS = ((1, 2), (2, 2), (2, 3), (3, 3))


def potts_oracle(opts: SuiteOptions) -> Report:
    report = Report('potts-oracle')
    for rows, cols in POTTS_GRIDS:
        grid = potts.GridSpec(rows, cols)
        expansion = potts.net_expansion(grid, jobs=opts.jobs)
        for Q in (1, 2, 3):
            nets = potts.partition_function_nets(grid, Q)
            spins = potts.partition_function_spins(grid, Q, jobs=opts.jobs)
            report.expect_equal('%dx%d Q=%d nets = spins' % (rows, cols, Q), nets, spins)
            report.add('%dx%d Q=%d zero temperature' % (rows, cols, Q),
                       potts.zero_temperature_check(grid, Q))
        total = sum(expansion.values(), LaurentPolynomial.zero('Q'))
        report.expect_equal('%dx%d at x = 1' % (rows, cols), total, _Q ** grid.n_vertices)

    d = LaurentPolynomial.gen('d')
    for n, m in ((2, 2), (4, 1), (4, 2)):
        loops = sum((d ** (circles - len(word)) for word, circles in
                     tl.loop_configurations(n, m)), LaurentPolynomial.zero('d'))
        report.expect_equal('TL_%d transfer matrix, %d rows: trace = loop sum' % (n, m),
                            tl.potts_tl_partition(n, m), loops)
    return report


def _random_multigraph(rng: random.Random) -> nx.MultiGraph:
    g = nx.MultiGraph()
    n = rng.randint(1, 6)
    g.add_nodes_from(range(n))
    for _ in range(rng.randint(0, 8)):
        g.add_edge(rng.randrange(n), rng.randrange(n))
    return g


def chromatic_oracle(opts: SuiteOptions) -> Report:
    report = Report('chromatic-oracle')
    mismatches = []
    for k in range(100):
        g = _random_multigraph(opts.rng)
        delcon = polynomials.chromatic_delcon(g)
        if delcon != polynomials.chromatic_ranksum(g):
            mismatches.append('graph %d: %s' % (k, sorted(g.edges())))
        for colors in range(4):
            if delcon.evaluate(colors) != polynomials.proper_colorings(g, colors):
                mismatches.append('graph %d at %d colors' % (k, colors))
    report.add('deletion-contraction = rank sum = colorings on 100 graphs',
               not mismatches, '; '.join(mismatches[:3]))

    loop = nx.MultiGraph([(0, 1), (1, 1)])
    report.add('graph with a loop has chi = 0', polynomials.chromatic_delcon(loop).is_zero())

    bridge = EmbeddedGraph([1, 0], [0, 1])
    report.add('bridge: chi of the dual = 0', polynomials.dual_chromatic(bridge).is_zero())

    for name, g in (('theta', theta_graph()), ('triangle', cycle_graph(3)),
                    ('square', cycle_graph(4))):
        report.expect_equal('%s: Q flow = chi of the dual' % name,
                            polynomials.flow_polynomial(g) * _Q,
                            polynomials.dual_chromatic(g))
    return report


def _signed(a: chromatic.ChromaticElement) -> chromatic.ChromaticElement:
    return chromatic.ChromaticElement(a.n, {p: c * (-1) ** p.edge_count() for p, c in a.items()},
                                      a.variable)


def psi(opts: SuiteOptions) -> Report:
    report = Report('psi')
    failures = []
    cases = 0
    while cases < 50:
        n = opts.rng.randint(1, opts.n)
        g = _random_graph(n, opts)
        inner = [d for d, _ in g.inner_edges() if not g.is_loop(d)]
        if not inner:
            continue
        cases += 1
        d = opts.rng.choice(inner)
        expected = chromatic.psi_expansion(g.contract_edge(d)) - \
            chromatic.psi_expansion(g.delete_edge(d))
        value = chromatic.psi_expansion(g)
        if value != expected:
            failures.append('case %d: contraction-deletion' % cases)
        if value != _signed(chromatic.reduce(g)):
            failures.append('case %d: signed reduction' % cases)
    report.add('psi contraction-deletion and agreement with reduce on 50 graphs',
               not failures, '; '.join(failures[:3]))
    return report


GRAM_POSITIVE_Q = (4.0, 4.5, 5.0)
GRAM_BERAHA_K = (5, 6)


def gram_positivity(opts: SuiteOptions) -> Report:
    report = Report('gram-positivity')
    for n in range(1, min(opts.n, 3) + 1):
        for Q in GRAM_POSITIVE_Q:
            spectrum = chromatic.gram_spectrum(n, Q)
            low, high = spectrum[0], spectrum[-1]
            report.add('C_%d Q=%g positive definite' % (n, Q), low > 1e-9 * high,
                       'min eigenvalue %.6g' % low)
        for k in GRAM_BERAHA_K:
            spectrum = chromatic.gram_spectrum(n, chromatic.beraha(k))
            low, high = spectrum[0], spectrum[-1]
            report.add('C_%d Beraha B_%d positive semidefinite' % (n, k),
                       low >= -1e-9 * high, 'min eigenvalue %.6g' % low)
    return report


SO3_DIAGRAMS = ('unknot', 'unlink', 'hopf', 'trefoil', 'figure-eight')


def _random_word(rng: random.Random) -> skein.TangleWord:
    n = rng.randint(2, 3)
    while True:
        word = [(rng.choice(skein.TangleWord.LETTERS), rng.randint(1, n - 1))
                for _ in range(rng.randint(1, 4))]
        if sum(letter != 'e' for letter, _ in word) <= 3:
            return skein.TangleWord(n, word)


def so3_cross(opts: SuiteOptions) -> Report:
    report = Report('so3-cross')
    for name in SO3_DIAGRAMS:
        L = skein.standard_diagram(name)
        chromatic_value = ParameterFrame.substitute(
            skein.so3_kauffman_via_chromatic(L, jobs=opts.jobs), 'A')
        cabling_value = skein.so3_kauffman_via_cabling(L, jobs=opts.jobs)
        report.expect_equal('%s: chromatic = cabling' % name, chromatic_value, cabling_value)

    unknot = skein.so3_kauffman_via_chromatic(skein.standard_diagram('unknot'))
    q = LaurentPolynomial.gen('q')
    report.expect_equal('unknot = q + 1 + q^-1', unknot, q + 1 + q ** -1)

    for k in range(5):
        word = _random_word(opts.rng)
        traced = ParameterFrame.substitute(chromatic.trace(word.to_chromatic()), 'A')
        cabled = skein.so3_kauffman_via_cabling(word.closure(), jobs=opts.jobs)
        report.expect_equal('word %s on %d strands: trace = cabled bracket'
                            % (word, word.n), traced, cabled)
    return report


SUITES = {
    'bmw-relations': bmw_relations,
    'diagram-commute': diagram_commute,
    'basis-rank': basis_rank,
    'trivalent': trivalent,
    'potts-oracle': potts_oracle,
    'chromatic-oracle': chromatic_oracle,
    'psi': psi,
    'gram-positivity': gram_positivity,
    'so3-cross': so3_cross,
}


def run_suite(name: str, opts: SuiteOptions) -> Report:
    """Run the suite `name` ('all' runs every suite in order)

    Raises:
        KeyError: For an unknown suite name
    """
    if name == 'all':
        report = Report('all')
        for suite in SUITES:
            report.extend(run_suite(suite, opts))
        return report

    func = SUITES[name]
    try:
        report = func(opts)
    except ChromalgError as e:
        report = Report(name)
        report.add(name, False, str(e))
    logger.info('suite %s: %d checks, %d failed', name, len(report.checks),
                len(report.failures))
    return report
