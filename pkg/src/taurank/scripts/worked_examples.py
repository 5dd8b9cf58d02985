"""
The worked examples, replayed on the bundled fixture algebras.

Every example raises :class:`ExampleFailed` when a computed value
differs from the expected one. Expectations are only ever checked
against certified values, so a small number of trials can turn a yes
into a probable yes but never flip a result.
"""
import logging
from dataclasses import dataclass

from taurank.algebra.ideal import Ideal
from taurank.algebra.ideal import quotient_algebra
from taurank.ar.hierarchy import hierarchy_report
from taurank.ar.reduction import reduce_and_compare
from taurank.ar.regularity import is_tau_regular
from taurank.ar.verdict import Outcome
from taurank.exceptions import TauRankError
from taurank.fixtures import load_fixture
from taurank.fixtures.modules import double_copy_map
from taurank.fixtures.modules import reduction_module
from taurank.fixtures.modules import simples
from taurank.fixtures.modules import single_copy_cokernel
from taurank.fixtures.modules import single_copy_map
from taurank.modules.annihilator import annihilator
from taurank.modules.constructions import power
from taurank.modules.decomposition import ProjDecomp
from taurank.modules.decomposition import decomposition_grid
from taurank.modules.homological import proj_dim
from taurank.modules.homological import syzygy
from taurank.presentations.generic_rank import generic_rank
from taurank.presentations.scan import additivity_scan
from taurank.scripts.util import format_dims


from typing import Any
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Callable

    from taurank.algebra.algebra import Algebra
    from taurank.linalg.field import Field
    from taurank.types import JSONObject

    Example = Callable[['RunOptions'], str]


logger = logging.getLogger(__name__)


class ExampleFailed(Exception):
    pass


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise ExampleFailed(message)


@dataclass(frozen=True)
class RunOptions:
    field: 'Field | None' = None
    trials: int = 8
    seed: int = 42
    tmax: int = 4
    cap: int = 10
    sample_range: int = 1000
    oracle_max_params: int = 12
    oracle_max_dim: int = 40
    iso_attempts: int = 8

    @classmethod
    def from_settings(cls, settings: dict[str, Any]) -> 'RunOptions':
        """ ``settings['field']`` is a :class:`Field` by now. """
        return cls(
            field=settings['field'],
            trials=settings['trials'],
            seed=settings['seed'],
            tmax=settings['tmax'],
            cap=settings['cap'],
            sample_range=settings['sample_range'],
            oracle_max_params=settings['oracle_max_params'],
            oracle_max_dim=settings['oracle_max_dim'],
            iso_attempts=settings['iso_attempts'],
        )

    def algebra(self, name: str) -> 'Algebra':
        return load_fixture(name, self.field)


@dataclass(frozen=True)
class ExampleResult:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> 'JSONObject':
        return {
            'name': self.name,
            'passed': self.passed,
            'detail': self.detail,
        }


EXAMPLES: list[tuple[str, 'Example']] = []


def example(name: str) -> 'Callable[[Example], Example]':
    def register(fn: 'Example') -> 'Example':
        EXAMPLES.append((name, fn))
        return fn
    return register


def _vertex(algebra: 'Algebra', label: str, count: int = 1) -> ProjDecomp:
    return ProjDecomp.single(
        algebra.vertex_count, algebra.vertex_index(label), count
    )


@example('ALG-A structure')
def algebra_a_structure(options: RunOptions) -> str:
    algebra = options.algebra('ALG-A')
    dims = [algebra.projective_dims(v) for v in range(3)]
    expect(algebra.dim == 12, f'dim A = {algebra.dim}, expected 12')
    expect(
        dims == [(1, 0, 0), (3, 1, 0), (3, 3, 1)],
        'projectives ' + ' '.join(format_dims(d) for d in dims)
    )
    return 'dim A = 12; P: ' + ' '.join(format_dims(d) for d in dims)


@example('r(P(2), P(3)) = 3')
def rank_of_one_copy(options: RunOptions) -> str:
    algebra = options.algebra('ALG-A')
    result = generic_rank(
        algebra, _vertex(algebra, '2'), _vertex(algebra, '3'),
        trials=max(options.trials, 16),
        seed=options.seed,
        extra_samples=[single_copy_map(algebra)],
        sample_range=options.sample_range,
        oracle_max_params=options.oracle_max_params,
        oracle_max_dim=options.oracle_max_dim
    )
    expect(result.value == 3, f'r = {result.value}, expected 3')
    expect(result.certified, 'r = 3 is not certified')
    return f'r = 3 ({result.certificate})'


@example('r(P(2)^2, P(3)^2) = 8')
def rank_of_two_copies(options: RunOptions) -> str:
    algebra = options.algebra('ALG-A')
    witness = double_copy_map(algebra)
    expect(witness.rank == 8, f'the block map has rank {witness.rank}')
    result = generic_rank(
        algebra, _vertex(algebra, '2', 2), _vertex(algebra, '3', 2),
        trials=options.trials,
        seed=options.seed,
        extra_samples=[witness],
        sample_range=options.sample_range,
        oracle_max_params=options.oracle_max_params,
        oracle_max_dim=options.oracle_max_dim
    )
    expect(result.value == 8 and result.certified,
           f'r = {result.value}, certified {result.certified}')
    scan = additivity_scan(
        algebra, _vertex(algebra, '2'), _vertex(algebra, '3'),
        t_max=2,
        trials=max(options.trials, 16),
        seed=options.seed,
        sample_range=options.sample_range,
        oracle_max_params=options.oracle_max_params,
        oracle_max_dim=options.oracle_max_dim
    )
    expect(scan.violations == [2], f'scan violations {scan.violations}')
    return f'r = 8 ({result.certificate}); scan r = {scan.r}'


@example('Cok f is τ-regular, its square is not')
def cokernel_and_square(options: RunOptions) -> str:
    algebra = options.algebra('ALG-A')
    module = single_copy_cokernel(algebra)
    single = is_tau_regular(
        module, max(options.trials, 16), options.seed, options.sample_range,
        options.oracle_max_params, options.oracle_max_dim
    )
    expect(single.is_yes, f'M: {single}')
    double = is_tau_regular(
        power(module, 2), options.trials, options.seed,
        options.sample_range, options.oracle_max_params,
        options.oracle_max_dim
    )
    expect(double.outcome is Outcome.CERTIFIED_NO,
           f'M ⊕ M: {double}')
    expect(double.witness_rank == 8,
           f'M ⊕ M: witness of rank {double.witness_rank}')
    return f'M: {single}; M ⊕ M: {double} (witness rank 8)'


@example('S(2) ⊕ S(3) over ALG-B')
def semisimple_over_b(options: RunOptions) -> str:
    algebra = options.algebra('ALG-B')
    module = simples(algebra, '2', '3')
    report = hierarchy_report(
        module, options.trials, options.seed, options.cap,
        options.sample_range, options.oracle_max_params,
        options.oracle_max_dim, options.iso_attempts
    )
    expect(report.tau_regular.is_yes, f'τ-regular: {report.tau_regular}')
    expect(report.proj_dim.to_json() == 2, f'pd = {report.proj_dim}')
    expect(not report.tau_rigid, 'the module is τ-rigid')
    return f'τ-regular {report.tau_regular}, pd 2, not τ-rigid'


@example('P(2) ⊕ I(2) ⊕ S(3) over ALG-B0')
def reduction_over_b0(options: RunOptions) -> str:
    algebra = options.algebra('ALG-B0')
    module = reduction_module(algebra)
    ab = algebra.multiply_sparse(
        {algebra.arrow('a').basis_index: algebra.field.one},
        {algebra.arrow('b').basis_index: algebra.field.one}
    )
    expected = Ideal.generated_by(algebra, [algebra.from_sparse(ab)])
    ideal = annihilator(module)
    expect(ideal == expected, f'annihilator {ideal.describe()}')
    report = reduce_and_compare(
        module, ideal, options.trials, options.seed, options.cap,
        options.iso_attempts
    )
    expect(report.pd_A.to_json() == 1, f'pd_A = {report.pd_A}')
    expect(report.pd_B.to_json() == 2, f'pd_B = {report.pd_B}')
    expect(not report.tau_rigid_A, 'the module is τ_A-rigid')
    expect(report.regular_A.is_yes, f'τ_A-regular: {report.regular_A}')
    expect(report.regular_B.outcome is Outcome.CERTIFIED_NO,
           f'τ_B-regular: {report.regular_B}')
    return (f'I_M = (ab), pd 1 -> 2, τ_A-regular {report.regular_A}, '
            f'τ_B-regular {report.regular_B}')


@example('S(1) ⊕ S(2) over ALG-C')
def reduction_over_c(options: RunOptions) -> str:
    algebra = options.algebra('ALG-C')
    a = algebra.basis_vector(algebra.arrow('a').basis_index)
    ideal = Ideal.generated_by(algebra, [a])
    quotient, _ = quotient_algebra(algebra, ideal)
    expect(
        quotient.vertex_count == 2 and quotient.dim == 4
        and len(quotient.arrows) == 2,
        f'A/(a) is {quotient!r}'
    )

    first = simples(algebra, '1')
    second = simples(algebra, '2')
    omega_first, _ = syzygy(first)
    omega_second, _ = syzygy(second)
    expect(omega_first.dims == (0, 1), f'Ω S(1) = {omega_first.dims}')
    expect(omega_second.dims == (2, 0), f'Ω S(2) = {omega_second.dims}')

    module = simples(algebra, '1', '2')
    dimension = proj_dim(module, options.cap, options.iso_attempts)
    expect(dimension.kind == 'infinite', f'pd_A = {dimension}')
    report = reduce_and_compare(
        module, ideal, options.trials, options.seed, options.cap,
        options.iso_attempts
    )
    expect(report.regular_B.is_yes, f'τ_B-regular: {report.regular_B}')
    expect(report.regular_A.outcome is Outcome.CERTIFIED_NO,
           f'τ_A-regular: {report.regular_A}')
    return (f'pd_A infinite, τ_A-regular {report.regular_A}, '
            f'τ_B-regular {report.regular_B}')


@example('additivity over hereditary algebras')
def hereditary_additivity(options: RunOptions) -> str:
    scanned = 0
    for name in ('ALG-K', 'ALG-B0'):
        algebra = options.algebra(name)
        grid = list(decomposition_grid(algebra.vertex_count, 2))
        for p1 in grid:
            for p0 in grid:
                scan = additivity_scan(
                    algebra, p1, p0,
                    t_max=options.tmax,
                    trials=options.trials,
                    seed=options.seed,
                    sample_range=options.sample_range,
                    oracle_max_params=options.oracle_max_params,
                    oracle_max_dim=options.oracle_max_dim
                )
                expect(
                    not scan.violations,
                    f'{name}: P{p1} -> P{p0} violates '
                    f'additivity at {scan.violations}'
                )
                expect(
                    scan.all_certified,
                    f'{name}: P{p1} -> P{p0} has uncertified ranks '
                    f'{scan.r}'
                )
                scanned += 1
    return f'{scanned} pairs of projective sums, all certified additive'


def run_examples(options: RunOptions) -> list[ExampleResult]:
    results = []
    for name, fn in EXAMPLES:
        try:
            detail = fn(options)
        except (ExampleFailed, TauRankError) as exc:
            logger.warning('example %r failed: %s', name, exc)
            results.append(ExampleResult(name, False, str(exc)))
        else:
            results.append(ExampleResult(name, True, detail))
    return results
