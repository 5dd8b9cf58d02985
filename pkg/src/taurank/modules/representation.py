import logging
from sympy.polys.matrices import DomainMatrix

from taurank.cache import instance_cache
from taurank.exceptions import RelationViolationError
from taurank.exceptions import ShapeMismatchError
from taurank.linalg.matrix import entries
from taurank.linalg.matrix import equal
from taurank.linalg.matrix import identity
from taurank.linalg.matrix import is_zero
from taurank.linalg.matrix import linear_combination
from taurank.linalg.matrix import matmul
from taurank.linalg.matrix import zeros


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Sequence

    from taurank.algebra.algebra import Algebra
    from taurank.linalg.field import Field
    from taurank.types import DimVector
    from taurank.types import Element
    from taurank.types import JSONObject


logger = logging.getLogger(__name__)


class Representation:
    """
    A left module given by one vector space per vertex and one matrix
    per arrow. The matrix of an arrow ``a: i -> j`` has shape
    ``dims[j] x dims[i]``.
    """

    def __init__(
        self,
        algebra:  'Algebra',
        dims:     'Sequence[int]',
        maps:     'Sequence[DomainMatrix]',
        validate: bool = True
    ):
        self.algebra = algebra
        self.dims: DimVector = tuple(dims)
        self.maps = tuple(maps)
        if len(self.dims) != algebra.vertex_count:
            raise ShapeMismatchError(
                f'{len(self.dims)} dimensions for '
                f'{algebra.vertex_count} vertices'
            )
        if any(d < 0 for d in self.dims):
            raise ShapeMismatchError('negative dimension')
        if len(self.maps) != len(algebra.arrows):
            raise ShapeMismatchError(
                f'{len(self.maps)} matrices for {len(algebra.arrows)} arrows'
            )
        for arrow, m in zip(algebra.arrows, self.maps):
            expected = (self.dims[arrow.target], self.dims[arrow.source])
            if m.shape != expected:
                raise ShapeMismatchError(
                    f'arrow {arrow.name} needs a {expected[0]}x{expected[1]}'
                    f' matrix, got {m.shape[0]}x{m.shape[1]}'
                )
        if validate:
            self.validate()

    @property
    def field(self) -> 'Field':
        return self.algebra.field

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.total_dim == 0

    @property
    def offsets(self) -> tuple[int, ...]:
        result = []
        offset = 0
        for d in self.dims:
            result.append(offset)
            offset += d
        return tuple(result)

    @instance_cache()
    def block(self, k: int) -> 'DomainMatrix':
        """
        The action of the k-th basis element as a map from the vertex
        space at its source to the one at its target.
        """
        b = self.algebra.basis[k]
        shape = (self.dims[b.target], self.dims[b.source])
        terms = []
        for coefficient, word in b.word:
            if not word:
                terms.append(identity(self.field, shape[0]))
                continue
            m = self.maps[word[0]]
            for letter in word[1:]:
                m = matmul(m, self.maps[letter])
            terms.append(m)
        return linear_combination(
            self.field, [c for c, _ in b.word], terms, shape
        )

    def validate(self) -> None:
        """
        Checks that the arrow matrices respect every relation: for each
        generator g and basis element b the action of g·b must equal
        the action of g composed with that of b.
        """
        algebra = self.algebra
        for g in algebra.generators:
            source = algebra.basis[g].source
            for k, b in enumerate(algebra.basis):
                if b.target != source:
                    continue
                expected = matmul(self.block(g), self.block(k))
                product = algebra.table[g][k]
                shape = expected.shape
                actual = linear_combination(
                    self.field,
                    list(product.values()),
                    [self.block(m) for m in product],
                    shape
                )
                if not equal(expected, actual):
                    raise RelationViolationError(
                        f'{algebra.basis[g].label} * {b.label} acts '
                        'inconsistently: the representation violates a '
                        'relation'
                    )

    def act(self, x: 'Element') -> 'DomainMatrix':
        """ The action of ``x`` on the total space, as a block matrix. """
        total = self.total_dim
        grid = [[self.field.zero] * total for _ in range(total)]
        offsets = self.offsets
        for k, c in enumerate(x):
            if not c:
                continue
            b = self.algebra.basis[k]
            row0, col0 = offsets[b.target], offsets[b.source]
            for i, row in enumerate(entries(self.block(k))):
                target = grid[row0 + i]
                for j, value in enumerate(row):
                    if value:
                        target[col0 + j] += c * value
        return DomainMatrix(grid, (total, total), self.field.domain)

    def kills(self, x: 'Element') -> bool:
        return is_zero(self.act(x))

    def is_sincere(self) -> bool:
        return all(d > 0 for d in self.dims)

    def change_basis(
        self,
        transforms: 'Sequence[DomainMatrix]'
    ) -> 'Representation':
        """
        Conjugates by invertible matrices ``T_v``: the arrow ``a: i->j``
        becomes ``T_j M_a T_i^{-1}``.
        """
        maps = []
        for arrow, m in zip(self.algebra.arrows, self.maps):
            inverse = transforms[arrow.source].inv() \
                if self.dims[arrow.source] else transforms[arrow.source]
            maps.append(matmul(matmul(transforms[arrow.target], m), inverse))
        return Representation(self.algebra, self.dims, maps)

    def describe(self) -> 'JSONObject':
        return {
            'dim': list(self.dims),
            'arrows': {
                arrow.name: [
                    [self.field.to_json(x) for x in row]
                    for row in entries(m)
                ]
                for arrow, m in zip(self.algebra.arrows, self.maps)
            }
        }

    def __repr__(self) -> str:
        dims = ','.join(str(d) for d in self.dims)
        return f'<Representation ({dims})>'


def zero_maps(
    algebra: 'Algebra',
    dims:    'Sequence[int]'
) -> list['DomainMatrix']:
    return [
        zeros(algebra.field, dims[a.target], dims[a.source])
        for a in algebra.arrows
    ]


def act(x: 'Element', module: Representation) -> 'DomainMatrix':
    return module.act(x)
