from taurank.modules.constructions import injective
from taurank.modules.constructions import projective
from taurank.modules.constructions import simple
from taurank.modules.hom import hom_basis
from taurank.modules.hom import hom_dim
from taurank.testing import random_module


def test_hom_from_projectives_and_into_injectives(all_algebras, rng):
    for algebra in all_algebras:
        for _ in range(3):
            module = random_module(algebra, rng)
            for v in range(algebra.vertex_count):
                assert hom_dim(projective(algebra, v), module) \
                    == module.dims[v]
                assert hom_dim(module, injective(algebra, v)) \
                    == module.dims[v]


def test_hom_between_projectives(alg_a):
    # Hom(P(j), P(i)) is e_j A e_i
    for i in range(3):
        for j in range(3):
            assert hom_dim(projective(alg_a, j), projective(alg_a, i)) \
                == len(alg_a.basis_between(i, j))


def test_hom_basis_is_made_of_morphisms(alg_b):
    basis = hom_basis(projective(alg_b, 1), projective(alg_b, 2))
    assert len(basis) == 1
    for f in basis:
        f.validate()
        assert f.rank == 1


def test_hom_between_simples(alg_k):
    assert hom_dim(simple(alg_k, 0), simple(alg_k, 0)) == 1
    assert hom_dim(simple(alg_k, 0), simple(alg_k, 1)) == 0
