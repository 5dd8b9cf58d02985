import pytest

from taurank.exceptions import InvariantViolation
from taurank.exceptions import ShapeMismatchError
from taurank.fixtures.modules import single_copy_map
from taurank.modules.constructions import projective
from taurank.modules.constructions import simple
from taurank.modules.decomposition import ProjDecomp
from taurank.modules.homological import projective_cover
from taurank.modules.iso import iso_test
from taurank.modules.morphism import identity
from taurank.presentations.complex import check_presentation
from taurank.presentations.complex import direct_sum_complex
from taurank.presentations.complex import direct_sum_of_complexes
from taurank.presentations.complex import min_presentation
from taurank.presentations.complex import TwoComplex
from taurank.presentations.reduction import reduce_presentation
from taurank.testing import random_complex


def test_min_presentation_of_simple(alg_b):
    complex_ = min_presentation(simple(alg_b, 2))
    assert complex_.p1.multiplicities == (0, 1, 0)
    assert complex_.p0.multiplicities == (0, 0, 1)
    assert complex_.rank == 1
    data = complex_.describe()
    assert data['rank'] == 1
    assert [(e['source'], e['target']) for e in data['entries']] == [(0, 0)]
    assert data['entries'][0]['element'].endswith('b')


def test_min_presentation_of_projective(alg_a):
    complex_ = min_presentation(projective(alg_a, 1))
    assert complex_.p1.is_zero
    assert complex_.p0.multiplicities == (0, 1, 0)
    assert complex_.is_zero


def test_min_presentation_of_cokernel(alg_a, cok_f):
    complex_ = min_presentation(cok_f)
    assert complex_.p1.multiplicities == (0, 1, 0)
    assert complex_.p0.multiplicities == (0, 0, 1)
    assert complex_.rank == 3
    assert iso_test(complex_.cokernel(), cok_f)


def test_min_presentation_cokernel(all_algebras, rng):
    for algebra in all_algebras:
        for _ in range(3):
            complex_ = random_complex(algebra, rng)
            module = complex_.cokernel()
            minimal = min_presentation(module)
            assert iso_test(minimal.cokernel(), module)


def kronecker_map(algebra, arrow):
    return TwoComplex.from_entries(
        algebra, ProjDecomp((1, 0)), ProjDecomp((0, 1)),
        {(0, 0): {algebra.arrow(arrow).basis_index: algebra.field.one}}
    )


def test_check_presentation(alg_k):
    first = kronecker_map(alg_k, 'c1')
    second = kronecker_map(alg_k, 'c2').cokernel()
    # same dimensions, different modules
    assert first.cokernel().dims == second.dims == (1, 1)
    assert not iso_test(first.cokernel(), second)
    _, _, epi = projective_cover(second)
    with pytest.raises(InvariantViolation, match=r'kernel of the cover'):
        check_presentation(first, epi)
    check_presentation(min_presentation(second), epi)


def test_wrong_decomposition(alg_b):
    with pytest.raises(ShapeMismatchError, match=r'does not run from'):
        TwoComplex(
            ProjDecomp((0, 1, 0)), ProjDecomp((0, 0, 1)),
            identity(projective(alg_b, 1))
        )


def test_direct_sums(alg_a):
    complex_ = single_copy_map(alg_a)
    doubled = direct_sum_complex(complex_, 2)
    assert doubled.p1.multiplicities == (0, 2, 0)
    assert doubled.rank == 6
    assert direct_sum_complex(complex_, 1) is complex_
    assert direct_sum_of_complexes([], alg_a).is_zero
    with pytest.raises(ValueError, match=r't must be at least 1'):
        direct_sum_complex(complex_, 0)


def test_direct_sum_reorders_summands(alg_b0):
    n = alg_b0.vertex_count
    one = alg_b0.field.one
    first = TwoComplex.from_entries(
        alg_b0, ProjDecomp.single(n, 2), ProjDecomp.single(n, 2),
        {(0, 0): {alg_b0.idempotents[2]: one}}
    )
    second = TwoComplex.zero(alg_b0, p1=ProjDecomp.single(n, 0))
    total = direct_sum_of_complexes([first, second])
    assert total.p1.multiplicities == (1, 0, 1)
    # P(1) comes first in canonical order
    assert set(total.entries()) == {(1, 0)}
    assert total.rank == 3


def test_reduce_presentation_splits_off_trivial_parts(alg_b0):
    n = alg_b0.vertex_count
    one = alg_b0.field.one
    complex_ = TwoComplex.from_entries(
        alg_b0, ProjDecomp((1, 0, 1)), ProjDecomp((0, 0, 1)),
        {(1, 0): {alg_b0.idempotents[2]: one}}
    )
    reduced = reduce_presentation(complex_)
    assert reduced.minimal.is_zero
    assert reduced.minimal.p0.is_zero
    assert reduced.identity_part == ProjDecomp.single(n, 2)
    assert reduced.identity_dim == 3
    assert reduced.zero_part == ProjDecomp.single(n, 0)


def test_reduce_random_complexes(all_algebras, rng):
    for algebra in all_algebras:
        for _ in range(4):
            complex_ = random_complex(algebra, rng)
            reduced = reduce_presentation(complex_)
            assert complex_.rank \
                == reduced.minimal.rank + reduced.identity_dim
            assert reduced.minimal.p0 + reduced.identity_part \
                == complex_.p0
