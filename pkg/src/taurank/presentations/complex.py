"""
Two-complexes ``P1 -> P0`` between explicit projective sums and minimal
projective presentations.
"""
import logging

from taurank.cache import instance_cache
from taurank.exceptions import InvariantViolation
from taurank.exceptions import ShapeMismatchError
from taurank.linalg.matrix import contains_columns
from taurank.linalg.matrix import rank
from taurank.modules.constructions import cokernel
from taurank.modules.constructions import kernel
from taurank.modules.constructions import radical_bases
from taurank.modules.decomposition import entries_from_morphism
from taurank.modules.decomposition import morphism_from_entries
from taurank.modules.decomposition import ProjDecomp
from taurank.modules.decomposition import realize
from taurank.modules.decomposition import summand_order
from taurank.modules.homological import projective_cover
from taurank.modules.morphism import zero_morphism


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Sequence

    from taurank.algebra.algebra import Algebra
    from taurank.modules.morphism import Morphism
    from taurank.modules.representation import Representation
    from taurank.types import JSONObject
    from taurank.types import Scalar
    from taurank.types import SparseElement


logger = logging.getLogger(__name__)


class TwoComplex:
    """
    A morphism ``P1 -> P0`` together with the decompositions of its
    source and target. ``coefficients`` are the coordinates of the
    morphism in the parameter basis of ``Hom(P1, P0)``, when known.
    """

    def __init__(
        self,
        p1:           ProjDecomp,
        p0:           ProjDecomp,
        morphism:     'Morphism',
        coefficients: 'Sequence[Scalar] | None' = None
    ):
        algebra = morphism.algebra
        if morphism.source.dims != p1.dims(algebra) \
                or morphism.target.dims != p0.dims(algebra):
            raise ShapeMismatchError(
                f'morphism does not run from P{p1} to P{p0}'
            )
        self.p1 = p1
        self.p0 = p0
        self.morphism = morphism
        self.coefficients = (
            tuple(coefficients) if coefficients is not None else None
        )

    @classmethod
    def from_entries(
        cls,
        algebra: 'Algebra',
        p1:      ProjDecomp,
        p0:      ProjDecomp,
        entries: 'dict[tuple[int, int], SparseElement]'
    ) -> 'TwoComplex':
        return cls(p1, p0, morphism_from_entries(algebra, p1, p0, entries))

    @classmethod
    def zero(
        cls,
        algebra: 'Algebra',
        p1:      ProjDecomp | None = None,
        p0:      ProjDecomp | None = None
    ) -> 'TwoComplex':
        n = algebra.vertex_count
        p1 = p1 if p1 is not None else ProjDecomp.zero(n)
        p0 = p0 if p0 is not None else ProjDecomp.zero(n)
        return cls(p1, p0, zero_morphism(
            realize(algebra, p1), realize(algebra, p0)
        ))

    @property
    def algebra(self) -> 'Algebra':
        return self.morphism.algebra

    @property
    def rank(self) -> int:
        return self.morphism.rank

    @property
    def is_zero(self) -> bool:
        return self.morphism.is_zero

    @instance_cache()
    def entries(self) -> 'dict[tuple[int, int], SparseElement]':
        """ The entry matrix, keyed by (source summand, target summand). """
        return entries_from_morphism(self.morphism, self.p1, self.p0)

    def cokernel(self) -> 'Representation':
        return cokernel(self.morphism)[0]

    def describe(self) -> 'JSONObject':
        algebra = self.algebra
        return {
            'p1': list(self.p1.multiplicities),
            'p0': list(self.p0.multiplicities),
            'rank': self.rank,
            'entries': [
                {
                    'source': ell,
                    'target': k,
                    'element': algebra.format_element(element)
                }
                for (ell, k), element in sorted(self.entries().items())
            ]
        }

    def __repr__(self) -> str:
        return f'<TwoComplex P{self.p1} -> P{self.p0}, rank {self.rank}>'


def check_presentation(complex_: TwoComplex, epi: 'Morphism') -> None:
    """
    Raises unless ``P1 -> P0 -> M -> 0`` is exact, with ``epi`` the map
    ``P0 -> M``. Exactness means ``epi`` induces ``Cok f ≅ M``.
    """
    f = complex_.morphism
    if not epi.is_surjective():
        raise InvariantViolation(f'{epi!r} is not onto')
    if not epi.compose(f).is_zero:
        raise InvariantViolation('the presentation does not map into the '
                                 'kernel of the cover')
    image_dims = tuple(rank(m) for m in f.maps)
    kernel_dims = tuple(
        p - m for p, m in zip(epi.source.dims, epi.target.dims)
    )
    if image_dims != kernel_dims:
        raise InvariantViolation(
            f'image of the presentation has dimension {image_dims}, the '
            f'kernel of the cover {kernel_dims}'
        )


def min_presentation(module: 'Representation') -> TwoComplex:
    """
    ``P1 -> P0 -> M -> 0`` with ``P0`` the projective cover of M and
    ``P1`` the projective cover of its kernel.
    """
    algebra = module.algebra
    if module.is_zero:
        return TwoComplex.zero(algebra)
    p0, cover, epi = projective_cover(module)
    omega, inclusion = kernel(epi)
    if omega.is_zero:
        result = TwoComplex.zero(algebra, p0=p0)
    else:
        p1, _, omega_epi = projective_cover(omega)
        result = TwoComplex(p1, p0, inclusion.compose(omega_epi))

    field = algebra.field
    for v, basis in enumerate(radical_bases(cover)):
        if not contains_columns(field, basis, result.morphism.maps[v]):
            raise InvariantViolation(
                'presentation is not minimal: image leaves the radical'
            )
    check_presentation(result, epi)
    logger.debug('min_presentation of %r: %r', module, result)
    return result


def direct_sum_of_complexes(
    complexes: 'Sequence[TwoComplex]',
    algebra:   'Algebra | None' = None
) -> TwoComplex:
    """
    The block diagonal complex, with the summands of the sum put back
    into canonical order.
    """
    if not complexes:
        if algebra is None:
            raise ValueError('the empty direct sum needs an algebra')
        return TwoComplex.zero(algebra)
    algebra = complexes[0].algebra
    p1 = complexes[0].p1
    p0 = complexes[0].p0
    for c in complexes[1:]:
        p1 += c.p1
        p0 += c.p0
    sources = summand_order([c.p1 for c in complexes])
    targets = summand_order([c.p0 for c in complexes])
    entries = {}
    for r, c in enumerate(complexes):
        for (ell, k), element in c.entries().items():
            entries[sources[r][ell], targets[r][k]] = element
    result = TwoComplex.from_entries(algebra, p1, p0, entries)
    expected = sum(c.rank for c in complexes)
    if result.rank != expected:
        raise InvariantViolation(
            f'direct sum has rank {result.rank}, expected {expected}'
        )
    return result


def direct_sum_complex(complex_: TwoComplex, t: int) -> TwoComplex:
    """ ``f^{⊕t}``, the t-fold direct sum of a complex. """
    if t < 1:
        raise ValueError('t must be at least 1')
    if t == 1:
        return complex_
    return direct_sum_of_complexes([complex_] * t)
