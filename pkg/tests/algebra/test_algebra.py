import pytest

from taurank.algebra.algebra import algebra_from_parsed
from taurank.algebra.parser import parse_quiver_file
from taurank.exceptions import NotFiniteDimensionalError
from taurank.fixtures import load_fixture
from taurank.linalg.field import Field


def test_alg_a_structure(alg_a):
    assert alg_a.dim == 12
    assert [alg_a.projective_dims(v) for v in range(3)] == [
        (1, 0, 0), (3, 1, 0), (3, 3, 1)
    ]
    assert [alg_a.injective_dims(v) for v in range(3)] == [
        (1, 3, 3), (0, 1, 3), (0, 0, 1)
    ]
    assert sum(1 for b in alg_a.basis if b.length == 2) == 3


@pytest.mark.parametrize('name,dim,projectives', [
    ('ALG-B', 5, [(1, 0, 0), (1, 1, 0), (0, 1, 1)]),
    ('ALG-B0', 6, [(1, 0, 0), (1, 1, 0), (1, 1, 1)]),
    ('ALG-C', 5, [(1, 1), (2, 1)]),
    ('ALG-K', 4, [(1, 0), (2, 1)]),
])
def test_fixture_structure(name, dim, projectives):
    algebra = load_fixture(name)
    assert algebra.name == name
    assert algebra.dim == dim
    assert [
        algebra.projective_dims(v) for v in range(algebra.vertex_count)
    ] == projectives


def test_multiplication(alg_b):
    one = alg_b.field.one
    a = alg_b.arrow('a').basis_index
    b = alg_b.arrow('b').basis_index
    e1, e2, e3 = alg_b.idempotents
    assert alg_b.multiply_sparse({a: one}, {b: one}) == {}
    assert alg_b.multiply_sparse({e1: one}, {a: one}) == {a: one}
    assert alg_b.multiply_sparse({a: one}, {e2: one}) == {a: one}
    assert alg_b.multiply_sparse({a: one}, {e1: one}) == {}
    unit = alg_b.unit()
    x = alg_b.basis_vector(b)
    assert alg_b.multiply(unit, x) == x
    assert alg_b.multiply(x, unit) == x


def test_relation_with_sign(alg_a):
    one = alg_a.field.one
    a1, a3 = (alg_a.arrow(n).basis_index for n in ('a1', 'a3'))
    b1, b3 = (alg_a.arrow(n).basis_index for n in ('b1', 'b3'))
    left = alg_a.multiply_sparse({a1: one}, {b3: one})
    right = alg_a.multiply_sparse({a3: one}, {b1: one})
    assert left
    assert {k: -c for k, c in right.items()} == left


def test_path_element(alg_b0):
    parsed = parse_quiver_file('vertices: 1 2 3\narrow a: 2 -> 1\n'
                               'arrow b: 3 -> 2\n')
    path = parsed.quiver.path(('a', 'b'))
    element = alg_b0.path_element(path)
    assert len(element) == 1
    (k, ) = element
    assert alg_b0.basis[k].length == 2
    assert alg_b0.format_element(element) == 'a*b'


def test_opposite(alg_a):
    opposite = alg_a.opposite()
    assert opposite.opposite() is alg_a
    assert opposite.name == 'ALG-A^op'
    assert [opposite.projective_dims(v) for v in range(3)] == [
        alg_a.injective_dims(v) for v in range(3)
    ]
    opposite.check_structure()


def test_convention_before_gives_the_same_algebra(alg_b):
    text = (
        'name: ALG-B\nconvention: before\nvertices: 1 2 3\n'
        'arrow a: 2 -> 1\narrow b: 3 -> 2\nrelations:\nb*a\n'
    )
    algebra = algebra_from_parsed(parse_quiver_file(text))
    assert algebra.same_structure(alg_b)


def test_prime_field():
    algebra = load_fixture('ALG-A', Field(5))
    assert algebra.field.tag == 'F_5'
    assert algebra.dim == 12


def test_not_finite_dimensional():
    parsed = parse_quiver_file('vertices: 1\narrow x: 1 -> 1\n')
    with pytest.raises(NotFiniteDimensionalError, match=r'max_len=4'):
        algebra_from_parsed(parsed, max_len=4)


def test_loop_with_relation():
    parsed = parse_quiver_file(
        'vertices: 1\narrow x: 1 -> 1\nrelations:\nx*x*x\n'
    )
    algebra = algebra_from_parsed(parsed)
    assert algebra.dim == 3
    assert algebra.projective_dims(0) == (3, )


def test_describe(alg_b):
    data = alg_b.describe()
    assert data['dim'] == 5
    assert data['radical_dim'] == 2
    assert data['field'] == 'Q'
    assert data['projectives'] == [[1, 0, 0], [1, 1, 0], [0, 1, 1]]
    assert data['arrows'][0] == {'name': 'a', 'source': '2', 'target': '1'}
