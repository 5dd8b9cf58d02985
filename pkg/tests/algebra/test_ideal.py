import pytest

from taurank.algebra.algebra import algebra_from_parsed
from taurank.algebra.ideal import Ideal
from taurank.algebra.ideal import ideal_from_text
from taurank.algebra.ideal import intersect
from taurank.algebra.ideal import nilpotency_index
from taurank.algebra.ideal import product_ideal
from taurank.algebra.ideal import quotient_algebra
from taurank.algebra.ideal import radical
from taurank.algebra.ideal import unit_ideal
from taurank.algebra.ideal import zero_ideal
from taurank.algebra.parser import parse_quiver_file
from taurank.exceptions import AlgebraMismatchError
from taurank.exceptions import IdealError
from taurank.exceptions import NonComposablePathError
from taurank.exceptions import UnknownArrowError
from taurank.fixtures import fixture_source


def arrow_vector(algebra, name):
    return algebra.basis_vector(algebra.arrow(name).basis_index)


def test_radical(alg_a):
    rad = radical(alg_a)
    assert rad.dim == 9
    assert rad.is_closed()
    assert nilpotency_index(rad, 10) == 3
    assert product_ideal(rad, rad).dim == 3


def test_generated_by(alg_b0):
    ideal = Ideal.generated_by(alg_b0, [arrow_vector(alg_b0, 'b')])
    # b and a*b
    assert ideal.dim == 2
    assert ideal.is_closed()
    assert ideal.contains(arrow_vector(alg_b0, 'b'))
    assert not ideal.contains(arrow_vector(alg_b0, 'a'))
    assert ideal <= radical(alg_b0)
    assert not radical(alg_b0) <= ideal


def test_equality_ignores_generators(alg_b0):
    b = arrow_vector(alg_b0, 'b')
    doubled = tuple(2 * x for x in b)
    assert Ideal.generated_by(alg_b0, [b]) \
        == Ideal.generated_by(alg_b0, [doubled])
    assert zero_ideal(alg_b0) == Ideal(alg_b0)
    assert zero_ideal(alg_b0).is_zero


def test_intersect(alg_b0):
    left = Ideal.generated_by(alg_b0, [arrow_vector(alg_b0, 'a')])
    right = Ideal.generated_by(alg_b0, [arrow_vector(alg_b0, 'b')])
    meet = intersect(left, right)
    assert meet.dim == 1
    assert meet.describe() == {'dim': 1, 'basis': ['a*b']}


def test_intersect_different_algebras(alg_b, alg_b0):
    with pytest.raises(AlgebraMismatchError):
        intersect(radical(alg_b), radical(alg_b0))


def test_quotient_by_radical(alg_a):
    quotient, projection = quotient_algebra(alg_a, radical(alg_a))
    assert quotient.dim == 3
    assert quotient.is_semisimple
    assert projection.vertex_map == {0: 0, 1: 1, 2: 2}


def test_quotient_killing_a_vertex(alg_b):
    e1 = alg_b.basis_vector(alg_b.idempotents[0])
    ideal = Ideal.generated_by(alg_b, [e1])
    # e1 and a
    assert ideal.dim == 2
    quotient, projection = quotient_algebra(alg_b, ideal)
    assert quotient.vertices == ('2', '3')
    assert quotient.dim == 3
    assert [a.name for a in quotient.arrows] == ['b']
    assert projection.vertex_map == {1: 0, 2: 1}


def test_quotient_of_alg_c_is_kronecker(alg_c, alg_k):
    ideal = Ideal.generated_by(alg_c, [arrow_vector(alg_c, 'a')])
    assert ideal.dim == 1
    quotient, _ = quotient_algebra(alg_c, ideal)
    assert quotient.dim == alg_k.dim
    assert [quotient.projective_dims(v) for v in range(2)] == [
        alg_k.projective_dims(v) for v in range(2)
    ]


def test_quotient_errors(alg_b, alg_b0):
    e1 = alg_b.basis_vector(alg_b.idempotents[0])
    with pytest.raises(IdealError, match=r'whole algebra'):
        quotient_algebra(alg_b, unit_ideal(alg_b))
    with pytest.raises(IdealError, match=r'not a two-sided ideal'):
        quotient_algebra(alg_b, Ideal(alg_b, [e1]))
    with pytest.raises(AlgebraMismatchError):
        quotient_algebra(alg_b, radical(alg_b0))


def test_ideal_from_text(alg_b0):
    ideal = ideal_from_text(alg_b0, '# the composite\na*b\n')
    assert ideal.dim == 1
    ideal = ideal_from_text(alg_b0, 'e3\n')
    # e3, b and a*b
    assert ideal.dim == 3
    ideal = ideal_from_text(alg_b0, 'a*b - a*b\n')
    assert ideal.is_zero


def test_ideal_from_text_follows_the_algebra_convention():
    text = 'convention: before\n' + fixture_source('ALG-B0')
    algebra = algebra_from_parsed(parse_quiver_file(text))
    assert algebra.convention == 'before'
    ab = algebra.from_sparse(
        algebra.path_element(algebra.origin.path(('a', 'b')))
    )
    ideal = ideal_from_text(algebra, 'b*a\n')
    assert ideal == Ideal.generated_by(algebra, [ab])
    assert ideal_from_text(algebra, 'a*b\n', convention='after') == ideal
    with pytest.raises(NonComposablePathError):
        ideal_from_text(algebra, 'a*b\n')


def test_ideal_from_text_errors(alg_b0):
    with pytest.raises(UnknownArrowError, match=r'unknown arrow: z'):
        ideal_from_text(alg_b0, 'z\n')
    with pytest.raises(IdealError, match=r'no elements'):
        ideal_from_text(alg_b0, '# nothing\n')
