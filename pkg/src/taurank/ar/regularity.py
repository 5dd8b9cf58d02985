import logging
from dataclasses import dataclass
from dataclasses import field as dataclass_field

from taurank.ar.verdict import Outcome
from taurank.ar.verdict import Verdict
from taurank.linalg.field import split_seed_sequences
from taurank.modules.constructions import power
from taurank.presentations.complex import min_presentation
from taurank.presentations.generic_rank import generic_rank
from taurank.presentations.scan import additivity_scan


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from numpy.random import SeedSequence

    from taurank.modules.representation import Representation
    from taurank.presentations.scan import RankScanReport
    from taurank.types import JSONObject


logger = logging.getLogger(__name__)


def is_tau_regular(
    module:            'Representation',
    trials:            int = 8,
    seed:              'int | SeedSequence' = 42,
    sample_range:      int = 1000,
    oracle_max_params: int | None = 12,
    oracle_max_dim:    int | None = 40
) -> Verdict:
    """
    Compares the rank of the minimal presentation with ``r(P1, P0)``.

    The presentation itself is one of the samples, so a larger rank is
    a certificate that M is not τ-regular. Equality is a certificate
    only when the maximal rank was certified.
    """
    presentation = min_presentation(module)
    estimate = generic_rank(
        module.algebra, presentation.p1, presentation.p0,
        trials=trials,
        seed=seed,
        extra_samples=[presentation],
        sample_range=sample_range,
        oracle_max_params=oracle_max_params,
        oracle_max_dim=oracle_max_dim
    )
    note = None
    if presentation.rank < estimate.value:
        outcome = Outcome.CERTIFIED_NO
        witness = estimate.witness
    elif estimate.certified:
        outcome = Outcome.CERTIFIED_YES
        witness = None
    else:
        outcome = Outcome.PROBABLE_YES
        witness = None
        note = (
            f'no certificate for r(P{presentation.p1}, P{presentation.p0});'
            f' {trials} random samples found no larger rank'
        )
    verdict = Verdict(
        outcome=outcome,
        presentation_rank=presentation.rank,
        generic_rank=estimate.value,
        certified=estimate.certified,
        certificate=estimate.certificate,
        witness=witness,
        field=estimate.field,
        note=note
    )
    logger.info('τ-regularity of %r: %s (rank %d, r = %d)', module,
                verdict, presentation.rank, estimate.value)
    return verdict


@dataclass
class PowerScanReport:
    verdicts: list[Verdict] = dataclass_field(default_factory=list)
    scan: 'RankScanReport | None' = None

    @property
    def regular_powers(self) -> list[int]:
        return [
            t for t, v in enumerate(self.verdicts, start=1) if v.is_yes
        ]

    def to_json(self) -> 'JSONObject':
        return {
            'verdicts': [v.to_json() for v in self.verdicts],
            'regular_powers': self.regular_powers,
            'scan': self.scan.to_json() if self.scan is not None else None,
        }


def power_scan(
    module:       'Representation',
    t_max:        int = 4,
    trials:       int = 8,
    seed:         int = 42,
    sample_range: int = 1000
) -> PowerScanReport:
    """
    τ-regularity of ``M^t`` for ``t = 1..t_max`` next to the additivity
    scan of the minimal presentation of M. Both columns agree: all
    powers are τ-regular exactly when the ranks are additive.
    """
    if t_max < 1:
        raise ValueError('t_max must be at least 1')
    report = PowerScanReport()
    for t, sequence in enumerate(split_seed_sequences(seed, t_max),
                                 start=1):
        report.verdicts.append(is_tau_regular(
            power(module, t), trials, sequence, sample_range
        ))
    presentation = min_presentation(module)
    report.scan = additivity_scan(
        module.algebra, presentation.p1, presentation.p0,
        t_max=t_max,
        trials=trials,
        seed=seed,
        sample_range=sample_range
    )
    return report
