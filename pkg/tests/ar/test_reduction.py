import pytest

from taurank.algebra.ideal import Ideal
from taurank.algebra.ideal import quotient_algebra
from taurank.algebra.ideal import radical
from taurank.ar.reduction import reduce_and_compare
from taurank.ar.reduction import search_reduction
from taurank.ar.reduction import transport
from taurank.ar.verdict import Outcome
from taurank.exceptions import NotAnnihilatingError
from taurank.fixtures.modules import reduction_module
from taurank.fixtures.modules import simples
from taurank.modules.constructions import projective


def arrow_ideal(algebra, name):
    return Ideal.generated_by(
        algebra, [algebra.basis_vector(algebra.arrow(name).basis_index)]
    )


def test_reduction_raises_proj_dim(alg_b0):
    module = reduction_module(alg_b0)
    report = reduce_and_compare(module)
    assert report.ideal.describe() == {'dim': 1, 'basis': ['a*b']}
    assert report.quotient.dim == 5
    assert report.module.dims == module.dims
    assert report.pd_A.to_json() == 1
    assert report.pd_B.to_json() == 2
    assert report.e_B <= report.e_A
    assert report.E_B <= report.E_A
    assert not report.tau_rigid_A
    assert report.regular_A.outcome is Outcome.CERTIFIED_YES
    assert report.regular_B.outcome is Outcome.CERTIFIED_NO

    data = report.to_json()
    assert data['pd_B'] == 2
    assert data['tau_regular_B']['outcome'] == 'certified-no'


def test_reduction_to_kronecker(alg_c):
    module = simples(alg_c, '1', '2')
    report = reduce_and_compare(module, arrow_ideal(alg_c, 'a'))
    assert report.pd_A.kind == 'infinite'
    assert report.pd_B.to_json() == 1
    assert report.regular_A.outcome is Outcome.CERTIFIED_NO
    assert report.regular_B.is_yes


def test_ideal_must_annihilate(alg_b0):
    module = reduction_module(alg_b0)
    with pytest.raises(NotAnnihilatingError, match=r'does not annihilate'):
        reduce_and_compare(module, arrow_ideal(alg_b0, 'a'))


def test_transport_checks_vertices(alg_b):
    e1 = alg_b.basis_vector(alg_b.idempotents[0])
    _, projection = quotient_algebra(alg_b, Ideal.generated_by(alg_b, [e1]))
    with pytest.raises(NotAnnihilatingError, match=r'vertex 1 is killed'):
        transport(projective(alg_b, 1), projection)
    module = transport(simples(alg_b, '2', '3'), projection)
    assert module.dims == (1, 1)


def test_search_keeps_zero_ideal(alg_b0):
    found = search_reduction(reduction_module(alg_b0))
    assert [c.ideal.is_zero for c in found] == [True]
    assert found[0].to_json() == {
        'ideal': {'dim': 0, 'basis': []},
        'proj_dim': 1,
    }


def test_search_over_alg_c(alg_c):
    found = search_reduction(simples(alg_c, '1', '2'))
    ideals = [c.ideal for c in found]
    assert not any(ideal.is_zero for ideal in ideals)
    assert radical(alg_c) in ideals
    assert arrow_ideal(alg_c, 'a') in ideals
    assert all(c.proj_dim.at_most(1) for c in found)
