"""
Upper bounds for the rank of every element of a space of morphisms.

A randomized search only ever finds lower bounds for the maximal rank.
The helpers here produce matching upper bounds that turn a witness into
a certificate.
"""
import logging
from dataclasses import dataclass

from taurank.linalg.matrix import column_space
from taurank.linalg.matrix import contains_columns
from taurank.linalg.matrix import from_columns
from taurank.linalg.matrix import hstack
from taurank.linalg.matrix import kernel_basis
from taurank.linalg.matrix import matmul
from taurank.linalg.matrix import rank
from taurank.linalg.matrix import zeros


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Sequence
    from sympy.polys.matrices import DomainMatrix

    from taurank.linalg.field import Field
    from taurank.modules.morphism import Morphism
    from taurank.modules.representation import Representation


logger = logging.getLogger(__name__)


def dimension_bound(
    source: 'Representation',
    target: 'Representation'
) -> int:
    """ ``Σ_v min(dim source_v, dim target_v)``, valid for any morphism. """
    return sum(min(s, t) for s, t in zip(source.dims, target.dims))


@dataclass(frozen=True)
class ShrunkSubspace:
    """
    A subspace ``U`` of the source and ``W`` of the target with
    ``g(U) ⊆ W`` for every morphism ``g`` of the space. Every element
    then has rank at most ``dim source - dim U + dim W``, and so does
    every t-by-t block matrix of them, scaled by t.
    """
    source_dim: int
    shrunk_dim: int
    image_dim: int
    steps: int

    @property
    def bound(self) -> int:
        return self.source_dim - self.shrunk_dim + self.image_dim

    def blown_up(self, t: int) -> int:
        return t * self.bound


def preimage(
    field: 'Field',
    f:     'DomainMatrix',
    space: 'DomainMatrix'
) -> 'DomainMatrix':
    """ ``f^{-1}(space)`` as a column basis. """
    n = f.shape[1]
    combined = hstack(field, [f, space], f.shape[0])
    vectors = [v[:n] for v in kernel_basis(combined)]
    return column_space(field, from_columns(field, vectors, n))


def shrunk_subspace(
    witness: 'Morphism',
    basis:   'Sequence[Morphism]',
    limit:   int = 1000
) -> ShrunkSubspace | None:
    """
    Iterates ``W_0 = 0``, ``W_{i+1} = Σ_g g(f^{-1}(W_i))`` for the
    witness f. When every ``W_i`` stays inside the image of f, the limit
    ``W`` and ``U = f^{-1}(W)`` form a shrunk subspace certifying that
    f has maximal rank. ``None`` when the sequence leaves the image.
    """
    field = witness.source.field
    f = witness.total_matrix()
    n = f.shape[1]
    image = column_space(field, f)
    generators = [g.total_matrix() for g in basis]
    current = zeros(field, f.shape[0], 0)
    for step in range(limit):
        shrunk = preimage(field, f, current)
        images = [matmul(g, shrunk) for g in generators]
        grown = column_space(
            field, hstack(field, [current] + images, f.shape[0])
        )
        logger.debug('shrunk subspace step %d: dim W = %d',
                     step, grown.shape[1])
        if not contains_columns(field, image, grown):
            return None
        if grown.shape[1] == current.shape[1]:
            certificate = ShrunkSubspace(
                n, shrunk.shape[1], grown.shape[1], step + 1
            )
            if certificate.bound != rank(f):
                return None
            return certificate
        current = grown
    return None