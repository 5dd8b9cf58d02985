import pytest

from taurank.exceptions import RelationViolationError
from taurank.exceptions import ShapeMismatchError
from taurank.linalg.matrix import from_rows
from taurank.linalg.matrix import zeros
from taurank.modules.constructions import cokernel
from taurank.modules.constructions import direct_sum
from taurank.modules.constructions import dual
from taurank.modules.constructions import injective
from taurank.modules.constructions import kernel
from taurank.modules.constructions import power
from taurank.modules.constructions import projective
from taurank.modules.constructions import radical_of
from taurank.modules.constructions import regular_module
from taurank.modules.constructions import simple
from taurank.modules.constructions import socle
from taurank.modules.constructions import top
from taurank.modules.representation import Representation


def test_projectives_and_injectives(all_algebras):
    for algebra in all_algebras:
        for v in range(algebra.vertex_count):
            assert projective(algebra, v).dims == algebra.projective_dims(v)
            assert injective(algebra, v).dims == algebra.injective_dims(v)
            # both are built without validation
            projective(algebra, v).validate()
            injective(algebra, v).validate()
        assert regular_module(algebra).total_dim == algebra.dim


def test_dual_lives_over_the_opposite(alg_a):
    module = projective(alg_a, 2)
    assert dual(module).algebra is alg_a.opposite()
    assert dual(dual(module)).algebra is alg_a
    assert dual(dual(module)).dims == module.dims


def test_top_radical_socle(alg_a):
    p3 = projective(alg_a, 2)
    assert top(p3)[0].dims == (0, 0, 1)
    assert radical_of(p3)[0].dims == (3, 3, 0)
    assert socle(p3)[0].dims == (3, 0, 0)
    assert socle(injective(alg_a, 0))[0].dims == (1, 0, 0)


def test_kernel_and_cokernel_of_cover(alg_b):
    # the cover P(3) -> S(3) has kernel S(2)
    p3 = projective(alg_b, 2)
    module, projection = top(p3)
    assert module.dims == simple(alg_b, 2).dims
    omega, inclusion = kernel(projection)
    assert omega.dims == (0, 1, 0)
    assert inclusion.is_injective()
    assert cokernel(inclusion)[0].dims == (0, 0, 1)


def test_direct_sum_and_power(alg_b):
    module = direct_sum([simple(alg_b, 0), projective(alg_b, 1)])
    assert module.dims == (2, 1, 0)
    assert power(module, 3).dims == (6, 3, 0)
    assert power(module, 0).is_zero
    with pytest.raises(ValueError, match=r'needs an algebra'):
        direct_sum([])


def test_shape_checks(alg_b, field):
    with pytest.raises(ShapeMismatchError, match=r'2 dimensions'):
        Representation(alg_b, (1, 1), [])
    with pytest.raises(ShapeMismatchError, match=r'arrow a needs a 1x1'):
        Representation(alg_b, (1, 1, 1), [
            zeros(field, 1, 2), zeros(field, 1, 1)
        ])


def test_relation_violation(alg_b, alg_b0, field):
    one = from_rows(field, [[field.one]], 1)
    with pytest.raises(RelationViolationError, match=r'violates a relation'):
        Representation(alg_b, (1, 1, 1), [one, one])
    # the same matrices are fine over the hereditary algebra
    Representation(alg_b0, (1, 1, 1), [one, one])
