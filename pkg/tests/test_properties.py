"""
Seeded sweeps over random modules of every bundled algebra.

Forty nonzero modules of total dimension at most nine per algebra, two
hundred in all, together with the regular module of each algebra.
"""
import numpy as np
import pytest

from taurank.ar.hierarchy import hierarchy_report
from taurank.ar.invariants import ar_formula_check
from taurank.ar.invariants import ar_formula_check_dual
from taurank.ar.invariants import e_invariant
from taurank.ar.invariants import is_tau_rigid
from taurank.ar.invariants import self_ext_dim
from taurank.ar.reduction import reduce_and_compare
from taurank.ar.translate import tau
from taurank.fixtures import FIXTURE_FILES
from taurank.fixtures import load_fixture
from taurank.modules.annihilator import is_faithful
from taurank.modules.constructions import injective
from taurank.modules.constructions import projective
from taurank.modules.decomposition import ProjDecomp
from taurank.modules.decomposition import realize
from taurank.modules.hom import hom_dim
from taurank.modules.homological import is_projective
from taurank.modules.homological import proj_dim
from taurank.modules.iso import iso_test
from taurank.presentations.reduction import reduce_presentation
from taurank.testing import random_complex
from taurank.testing import random_module


pytestmark = pytest.mark.slow

MODULES_PER_ALGEBRA = 40
COMPLEXES_PER_ALGEBRA = 20


@pytest.fixture(scope='module')
def algebras():
    return [load_fixture(name) for name in FIXTURE_FILES]


@pytest.fixture(scope='module')
def random_modules(algebras):
    """ Per algebra, its random modules. """
    rng = np.random.default_rng(20241018)
    result = []
    for algebra in algebras:
        found = []
        while len(found) < MODULES_PER_ALGEBRA:
            module = random_module(algebra, rng, max_dim=9)
            if not module.is_zero:
                found.append(module)
        result.append(found)
    return result


@pytest.fixture(scope='module')
def sweep(algebras, random_modules):
    """ Every random module followed by the regular modules. """
    modules = [m for found in random_modules for m in found]
    modules.extend(
        realize(algebra, ProjDecomp((1, ) * algebra.vertex_count))
        for algebra in algebras
    )
    return modules


def test_sweep_size(random_modules, sweep):
    assert sum(len(found) for found in random_modules) >= 200
    assert all(m.total_dim <= 9 for found in random_modules for m in found)
    assert len(sweep) == 200 + len(FIXTURE_FILES)


def test_hom_counts_composition_factors(sweep):
    for module in sweep:
        algebra = module.algebra
        for v in range(algebra.vertex_count):
            assert hom_dim(projective(algebra, v), module) == module.dims[v]
            assert hom_dim(module, injective(algebra, v)) == module.dims[v]


def test_self_extensions_bounded_by_e_invariant(sweep):
    for module in sweep:
        assert self_ext_dim(module) <= e_invariant(module), module


def test_ar_formula_on_random_pairs(random_modules):
    checked = 0
    for found in random_modules:
        for i, module in enumerate(found):
            other = found[(i + 1) % len(found)]
            assert ar_formula_check(module, other), (module, other)
            if i % 5 == 0:
                assert ar_formula_check_dual(module, other)
            checked += 1
    assert checked >= 200


def test_tau_vanishes_exactly_on_projectives(sweep):
    for module in sweep:
        assert tau(module).is_zero == is_projective(module), module


def test_rank_identity_on_random_complexes(algebras):
    rng = np.random.default_rng(7)
    checked = 0
    for algebra in algebras:
        for _ in range(COMPLEXES_PER_ALGEBRA):
            complex_ = random_complex(algebra, rng)
            reduced = reduce_presentation(complex_)
            assert complex_.rank \
                == reduced.minimal.rank + reduced.identity_dim
            assert iso_test(reduced.minimal.cokernel(), complex_.cokernel())
            checked += 1
    assert checked >= 100


def test_faithful_tau_rigid_modules_have_small_proj_dim(algebras, sweep):
    found = 0
    for module in sweep:
        if is_faithful(module) and is_tau_rigid(module):
            assert proj_dim(module).at_most(1), module
            found += 1
    # the regular modules at least
    assert found >= len(algebras)


def test_hierarchy_holds(sweep):
    for module in sweep:
        report = hierarchy_report(module)
        assert all(report.edges().values()), report.to_json()


def test_tau_rigidity_survives_reduction(sweep):
    reduced = 0
    for module in sweep:
        if not is_tau_rigid(module):
            continue
        report = reduce_and_compare(module)
        assert report.tau_rigid_B, module
        assert report.e_B <= report.e_A
        assert report.E_B <= report.E_A
        reduced += 1
    assert reduced > 0
