"""
Where a module sits in the hierarchy

    projective ⟹ partial tilting ⟹ proj.dim ≤ 1 ⟹ τ-regular
                 partial tilting ⟹ τ-rigid ⟹ τ-regular
                                   τ-rigid ⟹ rigid
"""
import logging
from dataclasses import dataclass

from taurank.ar.invariants import e_invariant
from taurank.ar.invariants import self_ext_dim
from taurank.ar.regularity import is_tau_regular
from taurank.exceptions import HierarchyViolation
from taurank.modules.homological import is_projective
from taurank.modules.homological import proj_dim


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.ar.verdict import Verdict
    from taurank.modules.homological import ProjectiveDimension
    from taurank.modules.representation import Representation
    from taurank.types import JSONObject


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HierarchyReport:
    projective: bool
    pd_at_most_one: bool
    rigid: bool
    tau_rigid: bool
    partial_tilting: bool
    tau_regular: 'Verdict'
    proj_dim: 'ProjectiveDimension'
    e: int
    E: int

    def edges(self) -> dict[str, bool]:
        """ Every implication of the hierarchy, evaluated. """
        regular = self.tau_regular.is_yes
        return {
            'projective => partial tilting':
                not self.projective or self.partial_tilting,
            'partial tilting => proj.dim <= 1':
                not self.partial_tilting or self.pd_at_most_one,
            'partial tilting => tau-rigid':
                not self.partial_tilting or self.tau_rigid,
            'proj.dim <= 1 => tau-regular':
                not self.pd_at_most_one or regular,
            'tau-rigid => tau-regular':
                not self.tau_rigid or regular,
            'tau-rigid => rigid':
                not self.tau_rigid or self.rigid,
            'e <= E': self.e <= self.E,
        }

    def check(self) -> None:
        failed = [name for name, holds in self.edges().items() if not holds]
        if failed:
            raise HierarchyViolation(
                'hierarchy violated: ' + ', '.join(failed)
            )

    def to_json(self) -> 'JSONObject':
        return {
            'projective': self.projective,
            'proj_dim': self.proj_dim.to_json(),
            'pd_at_most_one': self.pd_at_most_one,
            'rigid': self.rigid,
            'tau_rigid': self.tau_rigid,
            'partial_tilting': self.partial_tilting,
            'tau_regular': self.tau_regular.to_json(),
            'e': self.e,
            'E': self.E,
        }


def hierarchy_report(
    module:            'Representation',
    trials:            int = 8,
    seed:              int = 42,
    cap:               int = 10,
    sample_range:      int = 1000,
    oracle_max_params: int | None = 12,
    oracle_max_dim:    int | None = 40,
    iso_attempts:      int = 8
) -> HierarchyReport:
    dimension = proj_dim(module, cap, iso_attempts, seed)
    e = self_ext_dim(module)
    E = e_invariant(module)
    pd_at_most_one = dimension.at_most(1)
    report = HierarchyReport(
        projective=is_projective(module),
        pd_at_most_one=pd_at_most_one,
        rigid=e == 0,
        tau_rigid=E == 0,
        partial_tilting=e == 0 and pd_at_most_one,
        tau_regular=is_tau_regular(
            module, trials, seed, sample_range,
            oracle_max_params, oracle_max_dim
        ),
        proj_dim=dimension,
        e=e,
        E=E
    )
    logger.debug('hierarchy of %r: %s', module, report.to_json())
    report.check()
    return report
