"""
Reduction of a module to a quotient ``B = A / I`` of the algebra by an
ideal annihilating it.
"""
import logging
from dataclasses import dataclass

from taurank.algebra.ideal import Ideal
from taurank.algebra.ideal import quotient_algebra
from taurank.ar.invariants import e_invariant
from taurank.ar.invariants import self_ext_dim
from taurank.ar.regularity import is_tau_regular
from taurank.exceptions import InvariantViolation
from taurank.exceptions import NotAnnihilatingError
from taurank.modules.annihilator import annihilator
from taurank.modules.homological import proj_dim
from taurank.modules.representation import Representation


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.algebra.algebra import Algebra
    from taurank.algebra.ideal import QuotientMap
    from taurank.ar.verdict import Verdict
    from taurank.modules.homological import ProjectiveDimension
    from taurank.types import JSONObject


logger = logging.getLogger(__name__)


def check_annihilates(ideal: Ideal, module: Representation) -> None:
    for x in ideal.basis:
        if not module.kills(x):
            raise NotAnnihilatingError(
                f'{ideal.algebra.format_element(x)} does not annihilate '
                'the module'
            )


def transport(
    module:   Representation,
    quotient: 'QuotientMap'
) -> Representation:
    """
    M as a module over ``B = A / I`` for an ideal with ``IM = 0``. An
    arrow of B is the residue of a basis element of A and acts like it.
    """
    algebra = module.algebra
    if quotient.source is not algebra:
        raise NotAnnihilatingError('the quotient is of another algebra')
    for v, d in enumerate(module.dims):
        if d and v not in quotient.vertex_map:
            raise NotAnnihilatingError(
                f'vertex {algebra.vertices[v]} is killed by the ideal but '
                f'the module has dimension {d} there'
            )
    target = quotient.target
    dims = [module.dims[v] for v in quotient.vertex_map]
    maps = [
        module.block(quotient.survivors[arrow.basis_index])
        for arrow in target.arrows
    ]
    return Representation(target, dims, maps)


@dataclass(frozen=True)
class ReductionReport:
    ideal: Ideal
    quotient: 'Algebra'
    module: Representation
    pd_A: 'ProjectiveDimension'
    pd_B: 'ProjectiveDimension'
    e_A: int
    e_B: int
    E_A: int
    E_B: int
    regular_A: 'Verdict'
    regular_B: 'Verdict'

    @property
    def tau_rigid_A(self) -> bool:
        return self.E_A == 0

    @property
    def tau_rigid_B(self) -> bool:
        return self.E_B == 0

    def to_json(self) -> 'JSONObject':
        return {
            'ideal': self.ideal.describe(),
            'quotient': self.quotient.describe(),
            'pd_A': self.pd_A.to_json(),
            'pd_B': self.pd_B.to_json(),
            'e_A': self.e_A,
            'e_B': self.e_B,
            'E_A': self.E_A,
            'E_B': self.E_B,
            'tau_rigid_A': self.tau_rigid_A,
            'tau_rigid_B': self.tau_rigid_B,
            'tau_regular_A': self.regular_A.to_json(),
            'tau_regular_B': self.regular_B.to_json(),
        }


def reduce_and_compare(
    module:       Representation,
    ideal:        Ideal | None = None,
    trials:       int = 8,
    seed:         int = 42,
    cap:          int = 10,
    iso_attempts: int = 8
) -> ReductionReport:
    """
    Compares M over A and over ``B = A / I``, with ``I = I_M`` unless an
    ideal is given. The inequalities ``e_B ≤ e_A`` and ``E_B ≤ E_A`` as
    well as the transfer of τ-rigidity from A to B are checked.
    """
    if ideal is None:
        ideal = annihilator(module)
    else:
        check_annihilates(ideal, module)
    quotient, projection = quotient_algebra(module.algebra, ideal)
    reduced = transport(module, projection)

    e_A, e_B = self_ext_dim(module), self_ext_dim(reduced)
    E_A, E_B = e_invariant(module), e_invariant(reduced)
    if e_B > e_A or E_B > E_A:
        raise InvariantViolation(
            f'reduction increased an invariant: e {e_A} -> {e_B}, '
            f'E {E_A} -> {E_B}'
        )
    report = ReductionReport(
        ideal=ideal,
        quotient=quotient,
        module=reduced,
        pd_A=proj_dim(module, cap, iso_attempts, seed),
        pd_B=proj_dim(reduced, cap, iso_attempts, seed),
        e_A=e_A,
        e_B=e_B,
        E_A=E_A,
        E_B=E_B,
        regular_A=is_tau_regular(module, trials, seed),
        regular_B=is_tau_regular(reduced, trials, seed)
    )
    logger.info('reduced %r to %r: pd %s -> %s', module, quotient,
                report.pd_A, report.pd_B)
    return report


@dataclass(frozen=True)
class ReductionCandidate:
    ideal: Ideal
    proj_dim: 'ProjectiveDimension'

    def to_json(self) -> 'JSONObject':
        return {
            'ideal': self.ideal.describe(),
            'proj_dim': self.proj_dim.to_json(),
        }


def search_reduction(
    module:       Representation,
    cap:          int = 10,
    iso_attempts: int = 8
) -> list[ReductionCandidate]:
    """
    Tries ``0``, ``I_M`` and the ideals generated by single basis
    elements of ``I_M``, and returns those ``I`` over whose quotient M
    has projective dimension at most one.
    """
    algebra = module.algebra
    full = annihilator(module)
    candidates = [Ideal(algebra), full]
    candidates.extend(
        Ideal.generated_by(algebra, [x]) for x in full.basis
    )
    found = []
    seen: set[Ideal] = set()
    for ideal in candidates:
        if ideal in seen or ideal.dim == algebra.dim:
            continue
        seen.add(ideal)
        _, projection = quotient_algebra(algebra, ideal)
        dimension = proj_dim(
            transport(module, projection), cap, iso_attempts
        )
        logger.debug('reduction by an ideal of dimension %d: pd %s',
                     ideal.dim, dimension)
        if dimension.at_most(1):
            found.append(ReductionCandidate(ideal, dimension))
    return found
