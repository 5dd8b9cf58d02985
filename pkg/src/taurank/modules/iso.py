import logging
from itertools import product

from taurank.exceptions import AlgebraMismatchError
from taurank.linalg.field import split_seed
from taurank.linalg.matrix import from_columns
from taurank.linalg.matrix import solve
from taurank.modules.hom import hom_basis
from taurank.modules.hom import hom_dim
from taurank.modules.hom import morphism_to_vector
from taurank.modules.morphism import combine
from taurank.modules.morphism import identity


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.modules.representation import Representation


logger = logging.getLogger(__name__)


GRID = (-1, 0, 1, 2)


def iso_test(
    left:              'Representation',
    right:             'Representation',
    attempts:          int = 8,
    exhaustive_params: int = 6,
    seed:              int = 0,
    sample_range:      int = 1000
) -> bool:
    """
    Decides ``left ≅ right`` by looking for an invertible element of
    ``Hom(left, right)``.

    Random combinations of the Hom basis come first; when all of them
    are singular and the Hom space is small, every combination with
    coefficients in a small grid is tried. A positive answer is always
    correct, a negative one is correct with high probability.
    """
    if left.algebra is not right.algebra:
        raise AlgebraMismatchError('modules over different algebras')
    if left.dims != right.dims:
        return False
    if left.is_zero:
        return True
    ends = hom_dim(left, left)
    if hom_dim(right, right) != ends \
            or hom_dim(left, right) != ends \
            or hom_dim(right, left) != ends:
        return False

    basis = hom_basis(left, right)
    field = left.field
    for rng in split_seed(seed, attempts):
        coefficients = [field.sample(rng, sample_range) for _ in basis]
        if combine(coefficients, basis, left, right).is_isomorphism():
            return True

    if len(basis) <= exhaustive_params:
        logger.debug('iso_test: exhaustive search over %d parameters',
                     len(basis))
        for values in product(GRID, repeat=len(basis)):
            coefficients = [field.convert(c) for c in values]
            if combine(coefficients, basis, left, right).is_isomorphism():
                return True
    return False


def is_direct_summand(
    summand:      'Representation',
    module:       'Representation',
    attempts:     int = 8,
    seed:         int = 0,
    sample_range: int = 1000
) -> bool:
    """
    Whether ``summand`` is isomorphic to a direct summand of ``module``.

    Draws ``f: summand -> module`` at random and solves ``g ∘ f = 1``
    linearly for ``g`` in ``Hom(module, summand)``; a solution is a
    split monomorphism and certifies the answer.
    """
    if summand.algebra is not module.algebra:
        raise AlgebraMismatchError('modules over different algebras')
    if summand.is_zero:
        return True
    if any(d > e for d, e in zip(summand.dims, module.dims)):
        return False
    into = hom_basis(summand, module)
    back = hom_basis(module, summand)
    if not into or not back:
        return False

    field = summand.field
    target = morphism_to_vector(identity(summand))
    for rng in split_seed(seed, attempts):
        coefficients = [field.sample(rng, sample_range) for _ in into]
        f = combine(coefficients, into, summand, module)
        if not f.is_injective():
            continue
        system = from_columns(
            field,
            [morphism_to_vector(g.compose(f)) for g in back],
            len(target)
        )
        if solve(field, system, target) is not None:
            return True
    return False
