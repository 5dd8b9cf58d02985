"""
The maximal rank ``r(P1, P0)`` of the morphisms between two projective
sums.

Random elements of ``Hom(P1, P0)`` give lower bounds. One of three
certificates may close the gap:

``dimension-bound``
    the best rank equals ``Σ_v min(dim P1_v, dim P0_v)``;
``symbolic``
    fraction free elimination on the generic element, one indeterminate
    per parameter, agrees with the best rank;
``shrunk-subspace``
    the witness admits a shrunk subspace (see
    :mod:`taurank.presentations.certificates`).
"""
import logging
from dataclasses import dataclass
from dataclasses import field as dataclass_field

from taurank.cache import instance_cache
from taurank.exceptions import OracleBudgetExceeded
from taurank.exceptions import ShapeMismatchError
from taurank.linalg.field import split_seed
from taurank.linalg.poly import poly_rank
from taurank.linalg.poly import PolyMatrix
from taurank.modules.decomposition import hom_parameters
from taurank.modules.decomposition import morphism_from_entries
from taurank.modules.decomposition import realize
from taurank.modules.morphism import combine
from taurank.presentations.certificates import dimension_bound
from taurank.presentations.certificates import shrunk_subspace
from taurank.presentations.certificates import ShrunkSubspace
from taurank.presentations.complex import TwoComplex


from typing import Literal
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Sequence
    from numpy.random import SeedSequence

    from taurank.algebra.algebra import Algebra
    from taurank.modules.decomposition import ProjDecomp
    from taurank.modules.morphism import Morphism
    from taurank.types import JSONObject


logger = logging.getLogger(__name__)


Certificate = Literal['dimension-bound', 'symbolic', 'shrunk-subspace']


@dataclass
class GenericRank:
    value: int
    witness: TwoComplex
    certified: bool
    certificate: Certificate | None = None
    field: str = 'Q'
    trial_ranks: list[int] = dataclass_field(default_factory=list)
    extra_ranks: list[int] = dataclass_field(default_factory=list)
    oracle_value: int | None = None
    shrunk: ShrunkSubspace | None = None

    def to_json(self) -> 'JSONObject':
        return {
            'value': self.value,
            'certified': self.certified,
            'certificate': self.certificate,
            'field': self.field,
            'trial_ranks': list(self.trial_ranks),
            'extra_ranks': list(self.extra_ranks),
        }


@instance_cache()
def parameter_basis(
    algebra: 'Algebra',
    p1:      'ProjDecomp',
    p0:      'ProjDecomp'
) -> tuple['Morphism', ...]:
    """
    One morphism per parameter ``(l, k, b)``: the generator of source
    summand l goes to the basis element b of target summand k.
    """
    one = algebra.field.one
    return tuple(
        morphism_from_entries(algebra, p1, p0, {(ell, k): {b: one}})
        for ell, k, b in hom_parameters(algebra, p1, p0)
    )


def symbolic_rank(
    algebra:    'Algebra',
    p1:         'ProjDecomp',
    p0:         'ProjDecomp',
    max_params: int | None = None,
    max_dim:    int | None = None
) -> int:
    """
    ``r(P1, P0)`` from the generic element, vertex by vertex. Raises
    :class:`OracleBudgetExceeded` outside the budget.
    """
    basis = parameter_basis(algebra, p1, p0)
    if max_params is not None and len(basis) > max_params:
        raise OracleBudgetExceeded(
            f'{len(basis)} parameters exceed the budget of {max_params}'
        )
    source = realize(algebra, p1)
    target = realize(algebra, p0)
    total = 0
    for v in range(algebra.vertex_count):
        shape = (target.dims[v], source.dims[v])
        if 0 in shape:
            continue
        generic = PolyMatrix.generic_combination(
            algebra.field, [f.maps[v] for f in basis], shape
        )
        total += poly_rank(generic, max_dim=max_dim)
    return total


def _as_morphism(sample: 'TwoComplex | Morphism') -> 'Morphism':
    if isinstance(sample, TwoComplex):
        return sample.morphism
    return sample


def generic_rank(
    algebra:           'Algebra',
    p1:                'ProjDecomp',
    p0:                'ProjDecomp',
    trials:            int = 8,
    seed:              'int | SeedSequence' = 42,
    extra_samples:     'Sequence[TwoComplex | Morphism]' = (),
    sample_range:      int = 1000,
    oracle_max_params: int | None = 12,
    oracle_max_dim:    int | None = 40,
    certify:           bool = True
) -> GenericRank:
    """
    Estimates and, where possible, certifies ``r(P1, P0)``.

    Trial i draws one scalar per parameter, in the order of
    :func:`hom_parameters`, from the i-th split of ``seed``. The
    witness is the first trial attaining the best rank, or the first
    extra sample if one of them does strictly better.
    """
    if trials < 1:
        raise ValueError('trials must be at least 1')
    source = realize(algebra, p1)
    target = realize(algebra, p0)
    basis = parameter_basis(algebra, p1, p0)
    field = algebra.field

    candidates = []
    for i, rng in enumerate(split_seed(seed, trials)):
        coefficients = [field.sample(rng, sample_range) for _ in basis]
        candidate = TwoComplex(
            p1, p0, combine(coefficients, basis, source, target),
            coefficients
        )
        logger.debug('generic_rank trial %d: rank %d', i, candidate.rank)
        candidates.append(candidate)
    trial_ranks = [c.rank for c in candidates]

    extras = []
    for sample in extra_samples:
        f = _as_morphism(sample)
        if f.source.dims != source.dims or f.target.dims != target.dims:
            raise ShapeMismatchError(
                'extra sample between the wrong modules'
            )
        extras.append(TwoComplex(p1, p0, f))
    extra_ranks = [c.rank for c in extras]

    best = candidates[0]
    for candidate in candidates[1:] + extras:
        if candidate.rank > best.rank:
            best = candidate

    result = GenericRank(
        value=best.rank,
        witness=best,
        certified=False,
        field=field.tag,
        trial_ranks=trial_ranks,
        extra_ranks=extra_ranks
    )
    if certify:
        certify_rank(result, algebra, p1, p0,
                     oracle_max_params, oracle_max_dim)
    return result


def certify_rank(
    result:     GenericRank,
    algebra:    'Algebra',
    p1:         'ProjDecomp',
    p0:         'ProjDecomp',
    max_params: int | None = 12,
    max_dim:    int | None = 40
) -> None:
    """ Tries the certificates in turn and records the first success. """
    source = realize(algebra, p1)
    target = realize(algebra, p0)
    if result.value == dimension_bound(source, target):
        result.certified = True
        result.certificate = 'dimension-bound'
        logger.info('r(P%s, P%s) = %d certified by the dimension bound',
                    p1, p0, result.value)
        return

    try:
        oracle = symbolic_rank(algebra, p1, p0, max_params, max_dim)
    except OracleBudgetExceeded as exc:
        logger.warning('symbolic rank skipped: %s', exc)
    else:
        result.oracle_value = oracle
        if oracle == result.value:
            result.certified = True
            result.certificate = 'symbolic'
            logger.info('r(P%s, P%s) = %d certified symbolically',
                        p1, p0, result.value)
            return
        logger.warning(
            'symbolic rank %d disagrees with the sampled rank %d for '
            'P%s -> P%s', oracle, result.value, p1, p0
        )

    basis = parameter_basis(algebra, p1, p0)
    shrunk = shrunk_subspace(result.witness.morphism, basis)
    if shrunk is not None:
        result.certified = True
        result.certificate = 'shrunk-subspace'
        result.shrunk = shrunk
        logger.info('r(P%s, P%s) = %d certified by a shrunk subspace',
                    p1, p0, result.value)
