from .field import DEFAULT_PRIME
from .field import Field
from .field import sample_scalar
from .field import split_seed
from .matrix import kernel_basis
from .matrix import rank
from .matrix import solve
from .poly import PolyMatrix
from .poly import poly_rank


__all__ = (
    'DEFAULT_PRIME',
    'Field',
    'PolyMatrix',
    'kernel_basis',
    'poly_rank',
    'rank',
    'sample_scalar',
    'solve',
    'split_seed',
)
