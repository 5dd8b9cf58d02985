import pytest

from taurank.fixtures.modules import simples
from taurank.modules.constructions import injective
from taurank.modules.constructions import projective
from taurank.modules.constructions import simple
from taurank.modules.homological import ext1_dim
from taurank.modules.homological import injective_envelope
from taurank.modules.homological import is_injective
from taurank.modules.homological import is_projective
from taurank.modules.homological import proj_dim
from taurank.modules.homological import projective_cover
from taurank.modules.homological import syzygy
from taurank.testing import random_module


def test_projective_cover(alg_a, cok_f):
    decomp, cover, epi = projective_cover(cok_f)
    assert decomp.multiplicities == (0, 0, 1)
    assert cover.dims == (3, 3, 1)
    assert epi.is_surjective()
    omega, _ = syzygy(cok_f)
    assert omega.dims == (2, 1, 0)


def test_injective_envelope(alg_b):
    decomp, envelope, mono = injective_envelope(simple(alg_b, 1))
    assert decomp.multiplicities == (0, 1, 0)
    assert envelope.dims == injective(alg_b, 1).dims
    assert mono.is_injective()


def test_projective_and_injective(alg_b0):
    assert is_projective(projective(alg_b0, 2))
    assert is_injective(projective(alg_b0, 2))
    assert not is_projective(simple(alg_b0, 2))
    assert is_injective(simple(alg_b0, 2))


@pytest.mark.parametrize('vertex,expected', [(0, 0), (1, 1), (2, 2)])
def test_proj_dim_of_simples(alg_b, vertex, expected):
    dimension = proj_dim(simple(alg_b, vertex))
    assert dimension.is_finite
    assert dimension.value == expected
    assert dimension.to_json() == expected
    assert dimension.at_most(2)


def test_infinite_proj_dim(alg_c):
    omega, _ = syzygy(simple(alg_c, 0))
    assert omega.dims == (0, 1)
    omega, _ = syzygy(simple(alg_c, 1))
    assert omega.dims == (2, 0)

    dimension = proj_dim(simples(alg_c, '1', '2'))
    assert dimension.kind == 'infinite'
    assert dimension.to_json() == 'infinite'
    assert not dimension.at_most(10)


def test_proj_dim_cap(alg_b):
    # pd S(3) = 2 is out of reach
    dimension = proj_dim(simple(alg_b, 2), cap=1)
    assert dimension.kind == 'at-least'
    assert str(dimension) == '>=1'
    with pytest.raises(ValueError, match=r'cap must be at least 1'):
        proj_dim(simple(alg_b, 2), cap=0)


def test_ext1(alg_b):
    s1, s2, s3 = (simple(alg_b, v) for v in range(3))
    assert ext1_dim(s2, s1) == 1
    assert ext1_dim(s1, s2) == 0
    assert ext1_dim(s3, s2) == 1
    assert ext1_dim(s3, s1) == 0
    assert ext1_dim(s2, s2) == 0


def test_ext1_vanishes_on_projectives(all_algebras, rng):
    for algebra in all_algebras:
        module = random_module(algebra, rng)
        for v in range(algebra.vertex_count):
            assert ext1_dim(projective(algebra, v), module) == 0
            assert ext1_dim(module, injective(algebra, v)) == 0
