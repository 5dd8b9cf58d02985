from dataclasses import dataclass
from enum import Enum


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.presentations.complex import TwoComplex
    from taurank.types import JSONObject


class Outcome(Enum):
    CERTIFIED_YES = 'certified-yes'
    CERTIFIED_NO = 'certified-no'
    PROBABLE_YES = 'probable-yes'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    """
    The answer to a randomized yes/no question.

    A ``certified-no`` always comes with a witness of strictly larger
    rank than the presentation. A yes is only certified when the
    maximal rank was; otherwise it is ``probable-yes`` and ``note``
    says why.
    """
    outcome: Outcome
    presentation_rank: int
    generic_rank: int
    certified: bool
    certificate: str | None = None
    witness: 'TwoComplex | None' = None
    field: str = 'Q'
    note: str | None = None

    @property
    def is_yes(self) -> bool:
        return self.outcome is not Outcome.CERTIFIED_NO

    @property
    def witness_rank(self) -> int | None:
        return self.witness.rank if self.witness is not None else None

    def to_json(self) -> 'JSONObject':
        return {
            'outcome': self.outcome.value,
            'witness_rank': self.witness_rank,
            'presentation_rank': self.presentation_rank,
            'generic_rank': self.generic_rank,
            'certified': self.certified,
            'certificate': self.certificate,
            'field': self.field,
            'note': self.note,
        }

    def __str__(self) -> str:
        return str(self.outcome)
