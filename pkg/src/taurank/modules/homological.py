"""
Covers, envelopes, syzygies and the homological dimensions built on
them.
"""
import logging
from dataclasses import dataclass

from taurank.exceptions import InvariantViolation
from taurank.linalg.matrix import column
from taurank.linalg.matrix import columns
from taurank.linalg.matrix import from_columns
from taurank.linalg.matrix import hstack
from taurank.linalg.matrix import row_space
from taurank.linalg.matrix import transpose
from taurank.modules.constructions import dual
from taurank.modules.constructions import kernel
from taurank.modules.constructions import radical_bases
from taurank.modules.decomposition import ProjDecomp
from taurank.modules.decomposition import realize
from taurank.modules.decomposition import realize_injective
from taurank.modules.hom import hom_dim
from taurank.modules.iso import is_direct_summand
from taurank.modules.morphism import Morphism


from typing import Literal
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.modules.representation import Representation
    from taurank.types import JSON


logger = logging.getLogger(__name__)


def top_generators(module: 'Representation') -> list[list[int]]:
    """
    For every vertex, the coordinates whose unit vectors span a
    complement of the radical: the non-pivot columns of the radical's
    echelon form. Deterministic, so covers are reproducible.
    """
    field = module.field
    result = []
    for v, basis in enumerate(radical_bases(module)):
        _, pivots = row_space(field, columns(basis), module.dims[v])
        result.append([j for j in range(module.dims[v]) if j not in pivots])
    return result


def projective_cover(
    module: 'Representation'
) -> tuple[ProjDecomp, 'Representation', Morphism]:
    """
    The projective cover ``P0 -> M``. The generator of each summand
    ``P(i)`` is sent to one of the chosen top generators of ``M`` at i.
    """
    algebra = module.algebra
    field = module.field
    generators = top_generators(module)
    decomp = ProjDecomp(tuple(len(g) for g in generators))
    cover = realize(algebra, decomp)
    maps = []
    for w in range(algebra.vertex_count):
        blocks = []
        for v, coordinates in enumerate(generators):
            for j in coordinates:
                images = [
                    column(module.block(x), j)
                    for x in algebra.basis_between(v, w)
                ]
                blocks.append(from_columns(field, images, module.dims[w]))
        maps.append(hstack(field, blocks, module.dims[w]))
    epi = Morphism(cover, module, maps, validate=False)
    if not epi.is_surjective():
        raise InvariantViolation('projective cover is not surjective')
    return decomp, cover, epi


def injective_envelope(
    module: 'Representation'
) -> tuple[ProjDecomp, 'Representation', Morphism]:
    """ ``M -> I0``, dual to the projective cover of ``D M``. """
    decomp, _, epi = projective_cover(dual(module))
    envelope = realize_injective(module.algebra, decomp)
    mono = Morphism(
        module, envelope, [transpose(m) for m in epi.maps], validate=False
    )
    return decomp, envelope, mono


def is_projective(module: 'Representation') -> bool:
    decomp, _, _ = projective_cover(module)
    return decomp.total_dim(module.algebra) == module.total_dim


def is_injective(module: 'Representation') -> bool:
    return is_projective(dual(module))


def syzygy(module: 'Representation') -> tuple['Representation', Morphism]:
    """ ``Ω M``, the kernel of the projective cover, with its inclusion. """
    _, _, epi = projective_cover(module)
    return kernel(epi)


def ext1_dim(module: 'Representation', other: 'Representation') -> int:
    """ ``dim Ext¹(M, N)`` from ``0 -> K -> P0 -> M -> 0``. """
    if module.is_zero:
        return 0
    _, cover, epi = projective_cover(module)
    omega, _ = kernel(epi)
    return (
        hom_dim(omega, other) - hom_dim(cover, other)
        + hom_dim(module, other)
    )


@dataclass(frozen=True)
class ProjectiveDimension:
    kind: Literal['finite', 'infinite', 'at-least']
    value: int | None = None
    repeat: tuple[int, int] | None = None

    @property
    def is_finite(self) -> bool:
        return self.kind == 'finite'

    def at_most(self, bound: int) -> bool:
        """ Certified ``pd ≤ bound``. """
        return self.kind == 'finite' and self.value is not None \
            and self.value <= bound

    def to_json(self) -> 'JSON':
        if self.kind == 'finite':
            return self.value
        if self.kind == 'infinite':
            return 'infinite'
        return f'>={self.value}'

    def __str__(self) -> str:
        return str(self.to_json())


def proj_dim(
    module:   'Representation',
    cap:      int = 10,
    attempts: int = 8,
    seed:     int = 0
) -> ProjectiveDimension:
    """
    Iterates minimal syzygies. The dimension is finite once a syzygy
    vanishes; it is infinite when a nonzero non-projective ``Ω^i`` is
    (isomorphic to) a direct summand of a later ``Ω^j``.
    """
    if cap < 1:
        raise ValueError('cap must be at least 1')
    syzygies: list[Representation] = []
    current = module
    for k in range(cap + 1):
        if current.is_zero or is_projective(current):
            return ProjectiveDimension('finite', k)
        syzygies.append(current)
        current, _ = syzygy(current)
        logger.debug('proj_dim: dim Ω^%d = %s', k + 1, current.dims)
        for i, earlier in enumerate(syzygies):
            if earlier.total_dim > current.total_dim:
                continue
            if is_direct_summand(earlier, current, attempts, seed):
                logger.debug('proj_dim: Ω^%d is a summand of Ω^%d',
                             i, k + 1)
                return ProjectiveDimension('infinite', repeat=(i, k + 1))
    return ProjectiveDimension('at-least', cap)
