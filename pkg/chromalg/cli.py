"""chromalg command-line interface

Commands are grouped by subject; every command takes the RunContext and the
arguments declared by its signature, and returns the value to print.

Exit codes: 0 success, 1 failed verification (or an inexact division),
2 malformed input or any other error of the library.

Functions:
    create_app() - The application with all command groups
    main() - Console entry point

License:    MIT, see LICENSE for more details
"""

import sys

from fractions import Fraction

from . import chromatic, formats, polynomials, potts, skein, temperley_lieb as tl
from .app import Chromalg
from .commands import CommandGroup
from .context import RunContext
from .exceptions import ChromalgError, InputFormatError, VerificationError
from .laurent import LaurentPolynomial
from .verify import SUITES, SuiteOptions, run_suite


graphs = CommandGroup('graphs')
algebras = CommandGroup('algebras')
knots = CommandGroup('knots')
physics = CommandGroup('physics')
checks = CommandGroup('checks')


# Graphs

@graphs.command()
def chromatic_(ctx: RunContext, graph_file: str, at: Fraction=None):
    """Chromatic polynomial of a graph, by deletion-contraction"""
    chi = polynomials.chromatic_delcon(formats.read_graph(graph_file))
    return chi if at is None else chi.evaluate(at)


@graphs.command()
def ranksum(ctx: RunContext, graph_file: str, at: Fraction=None):
    """Chromatic polynomial of a graph, by the rank-nullity subset sum"""
    chi = polynomials.chromatic_ranksum(formats.read_graph(graph_file),
                                        limit=ctx.limit('RANKSUM_EDGE_LIMIT'), jobs=ctx.jobs)
    return chi if at is None else chi.evaluate(at)


@graphs.command()
def dual_chromatic(ctx: RunContext, graph_file: str, at: Fraction=None):
    """Chromatic polynomial of the planar dual of a closed graph"""
    chi = polynomials.dual_chromatic(formats.read_graph(graph_file))
    return chi if at is None else chi.evaluate(at)


@graphs.command()
def faces(ctx: RunContext, graph_file: str):
    """Faces of a graph as dart cycles"""
    return ['%s%s' % (' '.join(map(str, f.darts)), ' (outer)' if f.is_outer else '')
            for f in formats.read_graph(graph_file).faces()]


@graphs.command()
def dual(ctx: RunContext, graph_file: str):
    """Planar dual of a closed graph"""
    return formats.read_graph(graph_file).dual()


# Algebras

@algebras.command()
def basis(ctx: RunContext, n: int=2, rank: bool=False):
    """Planar-partition basis of C_n, or the rank of its phi image"""
    if rank:
        return tl.phi_rank(n, Fraction(ctx.config['GENERIC_D']))
    return [str(p) for p in chromatic.enumerate_basis(n)]


@algebras.command(name='reduce')
def reduce_(ctx: RunContext, graph_file: str):
    """Rewrite a rectangle graph in the planar-partition basis"""
    return chromatic.reduce(formats.read_graph(graph_file))


@algebras.command()
def psi(ctx: RunContext, graph_file: str):
    """State-sum expansion of a rectangle graph"""
    return chromatic.psi_expansion(formats.read_graph(graph_file),
                                   limit=ctx.limit('PSI_EDGE_LIMIT'))


@algebras.command(choices={'algebra': ('chromatic', 'tl')})
def trace(ctx: RunContext, element_file: str, algebra: str='chromatic'):
    """Markov trace of an element of C_n (in Q) or TL_m (in d)"""
    element = formats.read_element(element_file)
    expected = chromatic.ChromaticElement if algebra == 'chromatic' else tl.TLElement
    if not isinstance(element, expected):
        raise InputFormatError('%s does not hold an element of the %s algebra'
                               % (element_file, algebra), element_file)
    return chromatic.trace(element) if algebra == 'chromatic' else tl.tl_trace(element)


@algebras.command()
def gram(ctx: RunContext, n: int=2, Q: float=None):
    """Gram matrix of the trace pairing on C_n, or its spectrum at Q"""
    if Q is None:
        return chromatic.gram_polynomials(n)
    return chromatic.gram_spectrum(n, Q)


@algebras.command()
def phi(ctx: RunContext, graph_file: str):
    """Image of a rectangle graph in the Temperley-Lieb algebra"""
    return tl.phi(formats.read_graph(graph_file), limit=ctx.limit('PHI_EDGE_LIMIT'),
                  jobs=ctx.jobs)


@algebras.command()
def tl_trace(ctx: RunContext, element_file: str):
    """Markov trace of a Temperley-Lieb element"""
    return trace(ctx, element_file, 'tl')


@algebras.command()
def transfer(ctx: RunContext, n: int=2, m: int=1, loops: bool=False):
    """Trace of the m-th power of the open-boundary transfer matrix in TL_n"""
    if loops:
        return ['%s: %d' % (' '.join('e%d' % k for k in word) or '1', circles)
                for word, circles in tl.loop_configurations(n, m)]
    return tl.potts_tl_partition(n, m)


# Knots

def _in_q(p: LaurentPolynomial) -> LaurentPolynomial:
    """Polynomial in A with exponents divisible by 4, rewritten in q = A^4"""
    if any(e % 4 for e, _ in p.items()):
        return p
    return LaurentPolynomial('q', {e // 4: c for e, c in p.items()})


@knots.command()
def bracket(ctx: RunContext, pd_file: str):
    """Kauffman bracket of a link diagram"""
    return skein.kauffman_bracket(formats.read_pd(pd_file),
                                  limit=ctx.limit('BRACKET_CROSSING_LIMIT'), jobs=ctx.jobs)


@knots.command(choices={'oracle': ('chromatic', 'cable')})
def kauffman_so3(ctx: RunContext, pd_file: str, oracle: str='chromatic'):
    """SO(3) Kauffman polynomial of a link diagram, in q"""
    L = formats.read_pd(pd_file)
    if oracle == 'cable':
        return _in_q(skein.so3_kauffman_via_cabling(
            L, limit=ctx.limit('CABLING_CROSSING_LIMIT'), jobs=ctx.jobs))
    return skein.so3_kauffman_via_chromatic(L, limit=ctx.limit('CHROMATIC_CROSSING_LIMIT'),
                                            jobs=ctx.jobs)


@knots.command()
def tangle(ctx: RunContext, word: str, n: int=None, closure: bool=False):
    """Image of a word such as 'B1 e2 b1' in C_n, or the PD code of its closure"""
    t = skein.TangleWord.parse(word, n)
    if closure:
        return t.closure()
    return skein.resolve_to_chromatic(t)


# Physics

@physics.command(choices={'method': ('nets', 'spins')})
def potts_(ctx: RunContext, rows: int=2, cols: int=2, Q: Fraction=None,
           method: str='nets'):
    """Potts partition function of a grid as a polynomial in x = e^(beta J)"""
    grid = potts.GridSpec(rows, cols)
    if method == 'spins':
        return potts.partition_function_spins(grid, Q, limit=ctx.limit('SPIN_STATE_LIMIT'),
                                              jobs=ctx.jobs)
    if Q is None:
        return potts.net_expansion(grid, limit=ctx.limit('NET_EDGE_LIMIT'), jobs=ctx.jobs)
    return potts.partition_function_nets(grid, Q, limit=ctx.limit('NET_EDGE_LIMIT'),
                                         jobs=ctx.jobs)


@physics.exception(ValueError)
def invalid_value(ctx: RunContext, exc: ValueError):
    ctx.app.logger.error('%s', exc)
    return ChromalgError.exit_code


# Checks

@checks.command(choices={'suite': ('all',) + tuple(SUITES)})
def verify(ctx: RunContext, suite: str='all', n: int=3):
    """Run verification suites; exit code 1 when a check fails"""
    options = SuiteOptions(n, ctx.rng, ctx.jobs, ctx.config['RANDOM_GRAPH_COUNT'],
                           ctx.config['RANDOM_INNER_EDGES'], Fraction(ctx.config['GENERIC_D']))
    report = run_suite(suite, options)
    ctx.emit(report)
    if not report.passed:
        raise VerificationError('%d of %d checks failed'
                                % (len(report.failures), len(report.checks)))


def create_app(config=None) -> Chromalg:
    app = Chromalg('chromalg', config=config, groups=[graphs, algebras, knots, physics, checks])

    @app.exception(ChromalgError)
    def library_error(ctx: RunContext, exc: ChromalgError):
        ctx.app.logger.error('%s', exc)
        return exc.exit_code

    @app.exception(InputFormatError)
    def input_error(ctx: RunContext, exc: InputFormatError):
        ctx.app.logger.error('%s', exc)
        return exc.exit_code

    return app


def main():
    sys.exit(create_app().run())
