from taurank.algebra.ideal import Ideal
from taurank.fixtures.modules import reduction_module
from taurank.modules.annihilator import annihilator
from taurank.modules.annihilator import is_faithful
from taurank.modules.annihilator import is_sincere
from taurank.modules.constructions import projective
from taurank.modules.constructions import regular_module
from taurank.modules.constructions import simple


def test_annihilator_of_simple(alg_b):
    ideal = annihilator(simple(alg_b, 0))
    assert ideal.dim == 4
    assert ideal.is_closed()
    assert not ideal.contains(alg_b.basis_vector(alg_b.idempotents[0]))


def test_annihilator_of_projective(alg_b):
    ideal = annihilator(projective(alg_b, 2))
    assert sorted(ideal.describe()['basis']) == ['a', 'e1']


def test_annihilator_of_reduction_module(alg_b0):
    module = reduction_module(alg_b0)
    ab = alg_b0.from_sparse(alg_b0.path_element(
        alg_b0.origin.path(('a', 'b'))
    ))
    assert annihilator(module) == Ideal.generated_by(alg_b0, [ab])
    assert is_sincere(module)
    assert not is_faithful(module)


def test_regular_module_is_faithful(all_algebras):
    for algebra in all_algebras:
        assert is_faithful(regular_module(algebra))
        assert annihilator(regular_module(algebra)).is_zero
