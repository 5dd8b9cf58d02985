import logging
from sympy.polys.matrices import DomainMatrix

from taurank.cache import instance_cache
from taurank.exceptions import AlgebraMismatchError
from taurank.linalg.matrix import entries
from taurank.linalg.matrix import kernel_basis
from taurank.modules.morphism import Morphism


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.modules.representation import Representation
    from taurank.types import Scalar


logger = logging.getLogger(__name__)


def _variable_offsets(
    source: 'Representation',
    target: 'Representation'
) -> list[int]:
    offsets = []
    total = 0
    for s, t in zip(source.dims, target.dims):
        offsets.append(total)
        total += s * t
    offsets.append(total)
    return offsets


def intertwiner_system(
    source: 'Representation',
    target: 'Representation'
) -> tuple[DomainMatrix, list[int]]:
    """
    The linear system whose solutions are the homomorphisms.

    Unknowns are the entries of the vertex matrices ``f_v``, row by row
    and vertex by vertex. Each arrow ``a: s -> t`` contributes the
    equations ``N_a f_s - f_t M_a = 0``.
    """
    if source.algebra is not target.algebra:
        raise AlgebraMismatchError('modules over different algebras')
    field = source.field
    offsets = _variable_offsets(source, target)
    unknowns = offsets[-1]
    rows: list[list[Scalar]] = []
    for arrow, m_map, n_map in zip(
        source.algebra.arrows, source.maps, target.maps
    ):
        s, t = arrow.source, arrow.target
        m_grid = entries(m_map)
        n_grid = entries(n_map)
        for i in range(target.dims[t]):
            for j in range(source.dims[s]):
                row = [field.zero] * unknowns
                # (N_a f_s)[i][j] = sum_k N_a[i][k] f_s[k][j]
                for k in range(target.dims[s]):
                    c = n_grid[i][k]
                    if c:
                        row[offsets[s] + k * source.dims[s] + j] += c
                # (f_t M_a)[i][j] = sum_l f_t[i][l] M_a[l][j]
                for ell in range(source.dims[t]):
                    c = m_grid[ell][j]
                    if c:
                        row[offsets[t] + i * source.dims[t] + ell] -= c
                rows.append(row)
    return DomainMatrix(rows, (len(rows), unknowns), field.domain), offsets


def morphism_from_vector(
    source:  'Representation',
    target:  'Representation',
    vector:  'list[Scalar]',
    offsets: list[int]
) -> Morphism:
    maps = []
    for v, (s, t) in enumerate(zip(source.dims, target.dims)):
        block = vector[offsets[v]:offsets[v + 1]]
        grid = [block[i * s:(i + 1) * s] for i in range(t)]
        maps.append(DomainMatrix(grid, (t, s), source.field.domain))
    return Morphism(source, target, maps, validate=False)


def morphism_to_vector(f: Morphism) -> list['Scalar']:
    vector: list[Scalar] = []
    for m in f.maps:
        for row in entries(m):
            vector.extend(row)
    return vector


@instance_cache()
def hom_basis(
    source: 'Representation',
    target: 'Representation'
) -> tuple[Morphism, ...]:
    system, offsets = intertwiner_system(source, target)
    if offsets[-1] == 0:
        return ()
    solutions = kernel_basis(system)
    logger.debug(
        'Hom solve: %d equations in %d unknowns, dimension %d',
        system.shape[0], offsets[-1], len(solutions)
    )
    return tuple(
        morphism_from_vector(source, target, v, offsets) for v in solutions
    )


def hom_dim(source: 'Representation', target: 'Representation') -> int:
    return len(hom_basis(source, target))
