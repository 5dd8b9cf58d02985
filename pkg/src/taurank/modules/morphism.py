from taurank.exceptions import AlgebraMismatchError
from taurank.exceptions import RelationViolationError
from taurank.exceptions import ShapeMismatchError
from taurank.linalg.matrix import add
from taurank.linalg.matrix import block_diagonal
from taurank.linalg.matrix import equal
from taurank.linalg.matrix import identity as identity_matrix
from taurank.linalg.matrix import is_zero
from taurank.linalg.matrix import linear_combination
from taurank.linalg.matrix import matmul
from taurank.linalg.matrix import rank
from taurank.linalg.matrix import scale
from taurank.linalg.matrix import zeros


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Sequence
    from sympy.polys.matrices import DomainMatrix

    from taurank.algebra.algebra import Algebra
    from taurank.modules.representation import Representation
    from taurank.types import Scalar


class Morphism:
    """ A module homomorphism, one matrix per vertex. """

    def __init__(
        self,
        source:   'Representation',
        target:   'Representation',
        maps:     'Sequence[DomainMatrix]',
        validate: bool = True
    ):
        if source.algebra is not target.algebra:
            raise AlgebraMismatchError(
                'source and target live over different algebras'
            )
        self.source = source
        self.target = target
        self.maps = tuple(maps)
        if len(self.maps) != source.algebra.vertex_count:
            raise ShapeMismatchError('one matrix per vertex expected')
        for v, m in enumerate(self.maps):
            expected = (target.dims[v], source.dims[v])
            if m.shape != expected:
                raise ShapeMismatchError(
                    f'vertex {source.algebra.vertices[v]} needs a '
                    f'{expected[0]}x{expected[1]} matrix, got '
                    f'{m.shape[0]}x{m.shape[1]}'
                )
        if validate:
            self.validate()

    @property
    def algebra(self) -> 'Algebra':
        return self.source.algebra

    def validate(self) -> None:
        for arrow, left, right in zip(
            self.source.algebra.arrows, self.source.maps, self.target.maps
        ):
            before = matmul(right, self.maps[arrow.source])
            after = matmul(self.maps[arrow.target], left)
            if not equal(before, after):
                raise RelationViolationError(
                    f'not an intertwiner at arrow {arrow.name}'
                )

    @property
    def rank(self) -> int:
        return sum(rank(m) for m in self.maps)

    @property
    def is_zero(self) -> bool:
        return all(is_zero(m) for m in self.maps)

    def is_injective(self) -> bool:
        return self.rank == self.source.total_dim

    def is_surjective(self) -> bool:
        return self.rank == self.target.total_dim

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()

    def compose(self, other: 'Morphism') -> 'Morphism':
        """ ``self ∘ other``: first ``other``, then ``self``. """
        if other.target is not self.source:
            raise ShapeMismatchError('morphisms are not composable')
        return Morphism(
            other.source, self.target,
            [matmul(f, g) for f, g in zip(self.maps, other.maps)],
            validate=False
        )

    def __add__(self, other: 'Morphism') -> 'Morphism':
        if other.source is not self.source or other.target is not self.target:
            raise ShapeMismatchError('morphisms between different modules')
        return Morphism(
            self.source, self.target,
            [add(f, g) for f, g in zip(self.maps, other.maps)],
            validate=False
        )

    def scaled(self, c: 'Scalar') -> 'Morphism':
        return Morphism(
            self.source, self.target,
            [scale(m, c) for m in self.maps],
            validate=False
        )

    def total_matrix(self) -> 'DomainMatrix':
        return block_diagonal(self.source.field, self.maps)

    def __repr__(self) -> str:
        return f'<Morphism {self.source!r} -> {self.target!r}>'


def identity(module: 'Representation') -> Morphism:
    return Morphism(
        module, module,
        [identity_matrix(module.field, d) for d in module.dims],
        validate=False
    )


def zero_morphism(
    source: 'Representation',
    target: 'Representation'
) -> Morphism:
    return Morphism(
        source, target,
        [
            zeros(source.field, t, s)
            for s, t in zip(source.dims, target.dims)
        ],
        validate=False
    )


def rank_of(f: Morphism) -> int:
    return f.rank


def combine(
    coefficients: 'Sequence[Scalar]',
    morphisms:    'Sequence[Morphism]',
    source:       'Representation',
    target:       'Representation'
) -> Morphism:
    """ The linear combination of morphisms between the same modules. """
    field = source.field
    maps = [
        linear_combination(
            field, coefficients, [f.maps[v] for f in morphisms],
            (target.dims[v], source.dims[v])
        )
        for v in range(len(source.dims))
    ]
    return Morphism(source, target, maps, validate=False)
