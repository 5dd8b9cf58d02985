import pytest

from taurank.exceptions import AlgebraMismatchError
from taurank.fixtures.modules import reduction_module
from taurank.fixtures.modules import simples
from taurank.modules.constructions import injective
from taurank.modules.constructions import power
from taurank.modules.constructions import projective
from taurank.modules.constructions import simple
from taurank.modules.iso import is_direct_summand
from taurank.modules.iso import iso_test


def test_projective_injective(alg_b0):
    assert iso_test(projective(alg_b0, 2), injective(alg_b0, 0))
    assert not iso_test(projective(alg_b0, 1), simples(alg_b0, '1', '2'))
    assert not iso_test(projective(alg_b0, 1), projective(alg_b0, 2))


def test_simple_projective(alg_k):
    assert iso_test(projective(alg_k, 0), simple(alg_k, 0))
    assert iso_test(power(simple(alg_k, 1), 0), power(simple(alg_k, 0), 0))


def test_direct_summands(alg_b0):
    module = reduction_module(alg_b0)
    assert is_direct_summand(projective(alg_b0, 1), module)
    assert is_direct_summand(simple(alg_b0, 2), module)
    assert not is_direct_summand(simple(alg_b0, 0), module)
    assert is_direct_summand(simple(alg_b0, 0), simples(alg_b0, '1', '2'))
    # S(1) is the socle of P(2) but not a summand
    assert not is_direct_summand(simple(alg_b0, 0), projective(alg_b0, 1))


def test_different_algebras(alg_b, alg_b0):
    with pytest.raises(AlgebraMismatchError):
        iso_test(simple(alg_b, 0), simple(alg_b0, 0))
    with pytest.raises(AlgebraMismatchError):
        is_direct_summand(simple(alg_b, 0), simple(alg_b0, 0))
