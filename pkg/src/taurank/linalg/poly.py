"""
Symbolic rank of matrices with linear polynomial entries.

This is the certified oracle behind ``generic_rank``: every parameter of
a Hom space becomes one indeterminate, and the rank over the rational
function field is computed by fraction-free (Bareiss) elimination with
exact polynomial divisions.
"""
import logging
from sympy.polys.rings import ring

from taurank.exceptions import OracleBudgetExceeded
from taurank.linalg.matrix import entries
from taurank.linalg.matrix import from_rows


from typing import Any
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Sequence
    from sympy.polys.matrices import DomainMatrix

    from taurank.linalg.field import Field
    from taurank.types import Scalar


logger = logging.getLogger(__name__)


class PolyMatrix:
    """
    A matrix whose entries live in ``K[x_1, ..., x_m]``.

    Only ever built as the generic element ``x_1 B_1 + ... + x_m B_m``
    of a space spanned by constant matrices, so all entries are linear
    forms. Elimination raises the degree, which is why ``poly_rank``
    has a budget.
    """

    def __init__(
        self,
        field:   'Field',
        names:   'Sequence[str]',
        grid:    'Sequence[Sequence[Any]] | None' = None,
        shape:   tuple[int, int] = (0, 0)
    ):
        self.field = field
        self.names = tuple(names)
        if self.names:
            self.ring, *self.gens = ring(list(self.names), field.domain)
        else:
            self.ring = None
            self.gens = []
        self.rows, self.cols = shape
        if grid is None:
            grid = [[self.zero] * self.cols for _ in range(self.rows)]
        self.entries = [list(row) for row in grid]

    @property
    def zero(self) -> Any:
        return self.ring.zero if self.ring is not None else self.field.zero

    @classmethod
    def generic_combination(
        cls,
        field:    'Field',
        matrices: 'Sequence[DomainMatrix]',
        shape:    tuple[int, int],
        prefix:   str = 'x'
    ) -> 'PolyMatrix':
        names = [f'{prefix}{k + 1}' for k in range(len(matrices))]
        result = cls(field, names, shape=shape)
        grid = result.entries
        for gen, m in zip(result.gens, matrices):
            for i, row in enumerate(entries(m)):
                for j, value in enumerate(row):
                    if value:
                        grid[i][j] += gen.mul_ground(value)
        return result

    @property
    def parameter_count(self) -> int:
        return len(self.names)

    def specialize(self, point: 'Sequence[Scalar]') -> 'DomainMatrix':
        """ Substitutes ``point`` for the indeterminates. """
        if len(point) != len(self.names):
            raise ValueError(
                f'expected {len(self.names)} values, got {len(point)}'
            )

        def evaluate(p: Any) -> 'Scalar':
            if self.ring is None:
                return p
            if not p:
                return self.field.zero
            return self.field.domain.convert(p(*point))

        return from_rows(
            self.field,
            [[evaluate(p) for p in row] for row in self.entries],
            self.cols
        )

    def __repr__(self) -> str:
        return (
            f'PolyMatrix({self.rows}x{self.cols}, '
            f'{len(self.names)} parameters)'
        )


def poly_rank(
    pm:         PolyMatrix,
    max_params: int | None = None,
    max_dim:    int | None = None
) -> int:
    """
    Rank of ``pm`` over the field of rational functions.

    Bareiss elimination with column skipping: every entry below the
    current pivot row stays a minor of the original matrix, so each
    division by the previous pivot is exact.
    """
    if pm.field.characteristic != 0:
        logger.warning(
            'poly_rank over %s is only a lower bound for the '
            'characteristic zero value', pm.field.tag
        )
    if max_params is not None and pm.parameter_count > max_params:
        raise OracleBudgetExceeded(
            f'{pm.parameter_count} parameters exceed the budget of '
            f'{max_params}'
        )
    if max_dim is not None and max(pm.rows, pm.cols) > max_dim:
        raise OracleBudgetExceeded(
            f'a {pm.rows}x{pm.cols} matrix exceeds the budget of {max_dim}'
        )
    if pm.ring is None:
        # no indeterminates: every entry is the zero constant
        return 0

    grid = [list(row) for row in pm.entries]
    rows, cols = pm.rows, pm.cols
    previous = pm.ring.one
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        pivot_row = next((i for i in range(rank, rows) if grid[i][c]), None)
        if pivot_row is None:
            continue
        grid[rank], grid[pivot_row] = grid[pivot_row], grid[rank]
        pivot = grid[rank][c]
        for i in range(rank + 1, rows):
            lead = grid[i][c]
            row = grid[i]
            for j in range(c + 1, cols):
                row[j] = (pivot * row[j] - lead * grid[rank][j]).exquo(
                    previous
                )
            row[c] = pm.ring.zero
        previous = pivot
        rank += 1
        logger.debug('poly_rank: pivot %d in column %d', rank, c)
    return rank
