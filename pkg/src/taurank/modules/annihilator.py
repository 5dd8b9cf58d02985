from taurank.algebra.ideal import Ideal
from taurank.linalg.matrix import entries
from taurank.linalg.matrix import from_columns
from taurank.linalg.matrix import kernel_basis


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.modules.representation import Representation


def annihilator(module: 'Representation') -> Ideal:
    """
    ``I_M = {a in A | aM = 0}``, the kernel of ``a -> act(a, M)``.

    Only the block ``e_t A e_s -> Hom(M_s, M_t)`` of each basis element
    can be nonzero, so each column is the flattened block at the
    coordinates reserved for its vertex pair.
    """
    algebra = module.algebra
    field = module.field
    offsets: dict[tuple[int, int], int] = {}
    size = 0
    for s, ds in enumerate(module.dims):
        for t, dt in enumerate(module.dims):
            offsets[s, t] = size
            size += ds * dt
    vectors = []
    for k, b in enumerate(algebra.basis):
        vector = [field.zero] * size
        offset = offsets[b.source, b.target]
        flat = [x for row in entries(module.block(k)) for x in row]
        vector[offset:offset + len(flat)] = flat
        vectors.append(vector)
    solutions = kernel_basis(from_columns(field, vectors, size))
    return Ideal(algebra, [tuple(x) for x in solutions])


def is_faithful(module: 'Representation') -> bool:
    return annihilator(module).is_zero


def is_sincere(module: 'Representation') -> bool:
    return module.is_sincere()
