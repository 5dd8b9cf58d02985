"""
Standard modules and the abelian operations on representations.

Kernels, images and cokernels are computed vertex by vertex; the arrow
matrices of a submodule or a quotient are induced through a basis of
the subspaces involved, so the relations hold automatically.
"""
from sympy.polys.matrices import DomainMatrix

from taurank.cache import instance_cache
from taurank.exceptions import AlgebraMismatchError
from taurank.exceptions import InvariantViolation
from taurank.linalg.matrix import block_diagonal
from taurank.linalg.matrix import column_space
from taurank.linalg.matrix import hstack
from taurank.linalg.matrix import kernel_matrix
from taurank.linalg.matrix import matmul
from taurank.linalg.matrix import quotient_coordinates
from taurank.linalg.matrix import solve_matrix
from taurank.linalg.matrix import transpose
from taurank.linalg.matrix import vstack
from taurank.linalg.matrix import zeros
from taurank.modules.morphism import Morphism
from taurank.modules.representation import Representation
from taurank.modules.representation import zero_maps


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Sequence

    from taurank.algebra.algebra import Algebra


def zero_module(algebra: 'Algebra') -> Representation:
    dims = (0, ) * algebra.vertex_count
    return Representation(algebra, dims, zero_maps(algebra, dims),
                          validate=False)


def simple(algebra: 'Algebra', vertex: int) -> Representation:
    dims = tuple(int(v == vertex) for v in range(algebra.vertex_count))
    return Representation(algebra, dims, zero_maps(algebra, dims),
                          validate=False)


def _multiplication_block(
    algebra: 'Algebra',
    element: int,
    columns: 'Sequence[int]',
    rows:    'Sequence[int]'
) -> DomainMatrix:
    """
    Matrix of left multiplication by a basis element, restricted to the
    span of ``columns`` and read off in the basis ``rows``.
    """
    field = algebra.field
    position = {k: i for i, k in enumerate(rows)}
    grid = [[field.zero] * len(columns) for _ in rows]
    for j, x in enumerate(columns):
        for k, c in algebra.table[element][x].items():
            grid[position[k]][j] += c
    return DomainMatrix(grid, (len(rows), len(columns)), field.domain)


@instance_cache()
def projective(algebra: 'Algebra', vertex: int) -> Representation:
    """ ``P(i) = A e_i``, spanned by the basis elements starting at i. """
    bases = [
        algebra.basis_between(vertex, v)
        for v in range(algebra.vertex_count)
    ]
    maps = [
        _multiplication_block(
            algebra, arrow.basis_index, bases[arrow.source],
            bases[arrow.target]
        )
        for arrow in algebra.arrows
    ]
    return Representation(algebra, [len(b) for b in bases], maps,
                          validate=False)


@instance_cache()
def dual(module: Representation) -> Representation:
    """ ``D M = Hom_K(M, K)``, a module over the opposite algebra. """
    return Representation(
        module.algebra.opposite(), module.dims,
        [transpose(m) for m in module.maps],
        validate=False
    )


def dual_morphism(f: Morphism) -> Morphism:
    return Morphism(
        dual(f.target), dual(f.source),
        [transpose(m) for m in f.maps],
        validate=False
    )


@instance_cache()
def injective(algebra: 'Algebra', vertex: int) -> Representation:
    """ ``I(i) = D(e_i A)``, the dual of a projective of the opposite. """
    opposite_projective = projective(algebra.opposite(), vertex)
    return Representation(
        algebra, opposite_projective.dims,
        [transpose(m) for m in opposite_projective.maps],
        validate=False
    )


def regular_module(algebra: 'Algebra') -> Representation:
    """ A as a left module over itself. """
    return direct_sum(
        [projective(algebra, v) for v in range(algebra.vertex_count)],
        algebra
    )


def direct_sum(
    modules: 'Sequence[Representation]',
    algebra: 'Algebra | None' = None
) -> Representation:
    if not modules:
        if algebra is None:
            raise ValueError('the empty direct sum needs an algebra')
        return zero_module(algebra)
    if algebra is None:
        algebra = modules[0].algebra
    if any(m.algebra is not algebra for m in modules):
        raise AlgebraMismatchError('summands over different algebras')
    if len(modules) == 1:
        return modules[0]
    dims = [sum(m.dims[v] for m in modules)
            for v in range(algebra.vertex_count)]
    maps = [
        block_diagonal(algebra.field, [m.maps[a] for m in modules])
        for a in range(len(algebra.arrows))
    ]
    return Representation(algebra, dims, maps, validate=False)


def power(module: Representation, t: int) -> Representation:
    """ ``M^t``, the direct sum of t copies. """
    return direct_sum([module] * t, module.algebra)


def direct_sum_morphism(
    morphisms: 'Sequence[Morphism]',
    source:    Representation,
    target:    Representation
) -> Morphism:
    field = source.field
    return Morphism(
        source, target,
        [
            block_diagonal(field, [f.maps[v] for f in morphisms])
            for v in range(len(source.dims))
        ],
        validate=False
    )


def subrepresentation(
    module: Representation,
    bases:  'Sequence[DomainMatrix]'
) -> tuple[Representation, Morphism]:
    """
    The submodule spanned by the columns of ``bases[v]`` at each vertex,
    with its inclusion. The columns must be linearly independent.
    """
    field = module.field
    dims = [b.shape[1] for b in bases]
    maps = []
    for arrow, m in zip(module.algebra.arrows, module.maps):
        image = matmul(m, bases[arrow.source])
        induced = solve_matrix(field, bases[arrow.target], image)
        if induced is None:
            raise InvariantViolation(
                f'subspace is not stable under arrow {arrow.name}'
            )
        maps.append(induced)
    sub = Representation(module.algebra, dims, maps, validate=False)
    return sub, Morphism(sub, module, list(bases), validate=False)


def quotient_representation(
    module: Representation,
    bases:  'Sequence[DomainMatrix]'
) -> tuple[Representation, Morphism]:
    """ ``M / U`` for the submodule spanned by ``bases``, with projection. """
    field = module.field
    coordinates = [quotient_coordinates(field, b) for b in bases]
    maps = [
        matmul(
            matmul(coordinates[arrow.target][0], m),
            coordinates[arrow.source][1]
        )
        for arrow, m in zip(module.algebra.arrows, module.maps)
    ]
    dims = [q.shape[0] for q, _ in coordinates]
    quotient = Representation(module.algebra, dims, maps, validate=False)
    return quotient, Morphism(module, quotient, [q for q, _ in coordinates],
                              validate=False)


def kernel(f: Morphism) -> tuple[Representation, Morphism]:
    field = f.source.field
    return subrepresentation(f.source, [kernel_matrix(field, m)
                                        for m in f.maps])


def image(f: Morphism) -> tuple[Representation, Morphism]:
    field = f.source.field
    return subrepresentation(f.target, [column_space(field, m)
                                        for m in f.maps])


def cokernel(f: Morphism) -> tuple[Representation, Morphism]:
    field = f.source.field
    return quotient_representation(
        f.target, [column_space(field, m) for m in f.maps]
    )


def radical_bases(module: Representation) -> list[DomainMatrix]:
    field = module.field
    algebra = module.algebra
    bases = []
    for v, d in enumerate(module.dims):
        incoming = [
            m for arrow, m in zip(algebra.arrows, module.maps)
            if arrow.target == v
        ]
        bases.append(column_space(field, hstack(field, incoming, d)))
    return bases


def radical_of(module: Representation) -> tuple[Representation, Morphism]:
    """ ``rad M``: the sum of the images of all arrows. """
    return subrepresentation(module, radical_bases(module))


def top(module: Representation) -> tuple[Representation, Morphism]:
    return quotient_representation(module, radical_bases(module))


def socle(module: Representation) -> tuple[Representation, Morphism]:
    """ The joint kernel of all arrows leaving each vertex. """
    field = module.field
    algebra = module.algebra
    bases = []
    for v, d in enumerate(module.dims):
        outgoing = [
            m for arrow, m in zip(algebra.arrows, module.maps)
            if arrow.source == v
        ]
        stacked = vstack(field, outgoing, d) if outgoing \
            else zeros(field, 0, d)
        bases.append(kernel_matrix(field, stacked))
    return subrepresentation(module, bases)
