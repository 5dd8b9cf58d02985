import logging
from dataclasses import dataclass

from taurank.exceptions import InvariantViolation
from taurank.presentations.complex import min_presentation


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.modules.decomposition import ProjDecomp
    from taurank.presentations.complex import TwoComplex


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedComplex:
    minimal: 'TwoComplex'
    identity_part: 'ProjDecomp'
    identity_dim: int
    zero_part: 'ProjDecomp'


def reduce_presentation(complex_: 'TwoComplex') -> ReducedComplex:
    """
    Splits ``P1 -> P0`` as ``c_min ⊕ (P -1-> P) ⊕ (P' -> 0)`` with
    ``c_min`` the minimal presentation of the cokernel.

    The summands P and P' are read off by subtracting multiplicities;
    a negative multiplicity raises :class:`InvariantViolation`.
    """
    algebra = complex_.algebra
    minimal = min_presentation(complex_.cokernel())
    identity_part = complex_.p0 - minimal.p0
    zero_part = complex_.p1 - minimal.p1 - identity_part
    identity_dim = identity_part.total_dim(algebra)
    if complex_.rank != minimal.rank + identity_dim:
        raise InvariantViolation(
            f'rank {complex_.rank} of {complex_!r} does not split as '
            f'{minimal.rank} + {identity_dim}'
        )
    logger.debug('reduced %r to %r with identity part P%s, zero part P%s',
                 complex_, minimal, identity_part, zero_part)
    return ReducedComplex(minimal, identity_part, identity_dim, zero_part)
