import pytest

from taurank.fixtures import load_fixture
from taurank.modules.decomposition import ProjDecomp
from taurank.modules.decomposition import decomposition_grid
from taurank.presentations.scan import additivity_scan
from taurank.presentations.scan import RankScanReport


def test_scan_finds_the_violation(alg_a):
    report = additivity_scan(
        alg_a, ProjDecomp((0, 1, 0)), ProjDecomp((0, 0, 1)),
        t_max=2, trials=16
    )
    assert report.r == [3, 8]
    assert report.violations == [2]
    assert report.all_certified
    assert report.certificates == ['symbolic', 'dimension-bound']
    data = report.to_json()
    assert data['violations'] == [2]
    assert data['p1'] == [0, 1, 0]
    assert data['trials'] == 16


@pytest.mark.parametrize('p1,p0', [
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((1, 1), (0, 1)),
    ((0, 1), (0, 1)),
])
def test_kronecker_is_additive(alg_k, p1, p0):
    report = additivity_scan(alg_k, ProjDecomp(p1), ProjDecomp(p0), t_max=4)
    assert not report.violations
    assert report.all_certified
    assert report.r == [t * report.r[0] for t in (1, 2, 3, 4)]


def test_hereditary_grid(alg_b0):
    for source in range(3):
        for target in range(3):
            report = additivity_scan(
                alg_b0,
                ProjDecomp.single(3, source),
                ProjDecomp.single(3, target),
                t_max=2
            )
            assert not report.violations
            assert report.all_certified


def test_scan_is_reproducible(alg_k):
    args = (alg_k, ProjDecomp((1, 0)), ProjDecomp((0, 1)))
    assert additivity_scan(*args, seed=3).to_json() \
        == additivity_scan(*args, seed=3).to_json()


def test_t_max(alg_k):
    with pytest.raises(ValueError, match=r't_max must be at least 1'):
        additivity_scan(alg_k, ProjDecomp((1, 0)), ProjDecomp((0, 1)),
                        t_max=0)


def test_uncertified_first_rank_gives_no_violations():
    report = RankScanReport(
        ProjDecomp((1, 0)), ProjDecomp((0, 1)), t_max=2, seed=42,
        trials=8, field='Q', r=[1, 3], certified=[False, False]
    )
    assert report.violations == []
    assert report.candidates == [2]
    assert report.to_json()['candidates'] == [2]


def test_scan_without_oracle_reports_candidates(alg_a):
    report = additivity_scan(
        alg_a, ProjDecomp((0, 1, 0)), ProjDecomp((0, 0, 1)),
        t_max=2, trials=16, oracle_max_params=0
    )
    assert report.r == [3, 8]
    assert report.certified == [False, True]
    assert report.violations == []
    assert report.candidates == [2]
    assert not report.all_certified


def test_pinned_ranks_skip_sampling(alg_k):
    report = additivity_scan(
        alg_k, ProjDecomp((2, 1)), ProjDecomp((1, 2)), t_max=4
    )
    assert report.certificates[1:] == ['shrunk-subspace'] * 3
    assert report.r == [t * report.r[0] for t in (1, 2, 3, 4)]
    for t, witness in enumerate(report.witnesses, start=1):
        assert witness.p1 == ProjDecomp((2, 1)).scaled(t)
        assert witness.rank == report.r[t - 1]


def test_decomposition_grid():
    grid = list(decomposition_grid(2, 2))
    assert len(grid) == 8
    assert ProjDecomp((0, 0)) not in grid
    assert ProjDecomp((2, 1)) in grid


@pytest.mark.slow
@pytest.mark.parametrize('name', ['ALG-K', 'ALG-B0'])
def test_hereditary_sums_are_additive(name):
    algebra = load_fixture(name)
    grid = list(decomposition_grid(algebra.vertex_count, 2))
    for p1 in grid:
        for p0 in grid:
            report = additivity_scan(algebra, p1, p0, t_max=4)
            assert report.violations == [], (p1, p0)
            assert report.all_certified, (p1, p0, report.certificates)
