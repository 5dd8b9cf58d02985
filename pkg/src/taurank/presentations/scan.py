"""
Scans ``r(P1^t, P0^t)`` against ``t · r(P1, P0)``.

Every estimate for t is seeded with the block diagonal sums of earlier
witnesses, so the reported sequence is superadditive by construction.
Values above ``t · r_1`` are violations of additivity and are always
certified from below by their witness.
"""
import logging
from dataclasses import dataclass
from dataclasses import field as dataclass_field

from taurank.exceptions import InvariantViolation
from taurank.linalg.field import split_seed_sequences
from taurank.presentations.certificates import shrunk_subspace
from taurank.presentations.complex import direct_sum_of_complexes
from taurank.presentations.generic_rank import GenericRank
from taurank.presentations.generic_rank import certify_rank
from taurank.presentations.generic_rank import generic_rank
from taurank.presentations.generic_rank import parameter_basis


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.algebra.algebra import Algebra
    from taurank.modules.decomposition import ProjDecomp
    from taurank.presentations.complex import TwoComplex
    from taurank.types import JSONObject


logger = logging.getLogger(__name__)


@dataclass
class RankScanReport:
    p1: 'ProjDecomp'
    p0: 'ProjDecomp'
    t_max: int
    seed: int
    trials: int
    field: str
    r: list[int] = dataclass_field(default_factory=list)
    certified: list[bool] = dataclass_field(default_factory=list)
    certificates: list[str | None] = dataclass_field(default_factory=list)
    witnesses: list['TwoComplex'] = dataclass_field(default_factory=list)

    def _exceeding(self) -> list[int]:
        if not self.r:
            return []
        return [
            t for t, value in enumerate(self.r, start=1)
            if value > t * self.r[0]
        ]

    @property
    def violations(self) -> list[int]:
        """
        Every t with ``r_t > t · r_1``, as long as ``r_1`` is certified.

        Each ``r_t`` is attained by its witness, so with an exact
        ``r_1`` these are genuine failures of additivity.
        """
        if not self.certified or not self.certified[0]:
            return []
        return self._exceeding()

    @property
    def candidates(self) -> list[int]:
        """ Would-be violations resting on an uncertified ``r_1``. """
        if not self.certified or self.certified[0]:
            return []
        return self._exceeding()

    @property
    def all_certified(self) -> bool:
        return all(self.certified)

    def to_json(self) -> 'JSONObject':
        return {
            'p1': list(self.p1.multiplicities),
            'p0': list(self.p0.multiplicities),
            'r': list(self.r),
            'certified': list(self.certified),
            'certificates': list(self.certificates),
            'violations': self.violations,
            'candidates': self.candidates,
            'seed': self.seed,
            'trials': self.trials,
            'field': self.field,
        }


def additivity_scan(
    algebra:           'Algebra',
    p1:                'ProjDecomp',
    p0:                'ProjDecomp',
    t_max:             int = 4,
    trials:            int = 8,
    seed:              int = 42,
    sample_range:      int = 1000,
    oracle_max_params: int | None = 12,
    oracle_max_dim:    int | None = 40
) -> RankScanReport:
    """
    Computes ``r(P1^t, P0^t)`` for ``t = 1..t_max``.

    The estimate for t uses the t-th split of ``seed``. A shrunk
    subspace found at t = 1 certifies every ``r_t = t · r_1`` at once,
    otherwise each t goes through the certificates of
    :func:`generic_rank` on its own.
    """
    if t_max < 1:
        raise ValueError('t_max must be at least 1')
    report = RankScanReport(p1, p0, t_max, seed, trials, algebra.field.tag)
    seeds = split_seed_sequences(seed, t_max)
    first: GenericRank | None = None
    for t in range(1, t_max + 1):
        extras = [
            direct_sum_of_complexes(
                [report.witnesses[s - 1], report.witnesses[t - s - 1]]
            )
            for s in range(1, t // 2 + 1)
        ]
        best = max(extras, key=lambda c: c.rank, default=None)
        if first is not None and first.shrunk is not None \
                and best is not None \
                and best.rank == first.shrunk.blown_up(t):
            # pinned from both sides, no sampling needed
            result = GenericRank(
                value=best.rank,
                witness=best,
                certified=True,
                certificate='shrunk-subspace',
                field=algebra.field.tag,
                extra_ranks=[c.rank for c in extras]
            )
        else:
            result = generic_rank(
                algebra, p1.scaled(t), p0.scaled(t),
                trials=trials,
                seed=seeds[t - 1],
                extra_samples=extras,
                sample_range=sample_range,
                certify=False
            )
            if first is None:
                certify_rank(result, algebra, p1, p0,
                             oracle_max_params, oracle_max_dim)
                if result.shrunk is None:
                    result.shrunk = shrunk_subspace(
                        result.witness.morphism,
                        parameter_basis(algebra, p1, p0)
                    )
            elif first.shrunk is not None \
                    and result.value == first.shrunk.blown_up(t):
                result.certified = True
                result.certificate = 'shrunk-subspace'
            else:
                certify_rank(result, algebra, p1.scaled(t), p0.scaled(t),
                             oracle_max_params, oracle_max_dim)
        if first is None:
            first = result
        logger.info('r(P%s^%d, P%s^%d) = %d%s', p1, t, p0, t, result.value,
                    '' if result.certified else ' (uncertified)')
        report.r.append(result.value)
        report.certified.append(result.certified)
        report.certificates.append(result.certificate)
        report.witnesses.append(result.witness)

        for s in range(1, t):
            if report.r[t - 1] < report.r[s - 1] + report.r[t - s - 1]:
                raise InvariantViolation(
                    f'reported ranks are not superadditive at t={t}'
                )
    return report
