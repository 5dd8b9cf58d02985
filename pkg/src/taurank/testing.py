"""
Random modules and two-complexes for property based tests.

Modules are produced as cokernels of random maps between small sums of
projectives, so they satisfy the relations by construction.
"""
import numpy as np

from taurank.modules.constructions import cokernel
from taurank.modules.decomposition import hom_parameters
from taurank.modules.decomposition import ProjDecomp
from taurank.presentations.complex import TwoComplex


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.algebra.algebra import Algebra
    from taurank.modules.representation import Representation
    from taurank.types import SparseElement


def random_decomp(
    algebra:       'Algebra',
    rng:           np.random.Generator,
    max_summands:  int = 2,
    max_dim:       int | None = None
) -> ProjDecomp:
    n = algebra.vertex_count
    while True:
        count = int(rng.integers(0, max_summands, endpoint=True))
        multiplicities = [0] * n
        for v in rng.integers(0, n, size=count):
            multiplicities[int(v)] += 1
        decomp = ProjDecomp(tuple(multiplicities))
        if max_dim is None or decomp.total_dim(algebra) <= max_dim:
            return decomp


def random_complex(
    algebra:      'Algebra',
    rng:          np.random.Generator,
    p1:           ProjDecomp | None = None,
    p0:           ProjDecomp | None = None,
    max_summands: int = 2,
    density:      float = 0.6
) -> TwoComplex:
    """
    A two-complex with small integer entries; each parameter is zero
    with probability ``1 - density`` so that degenerate maps (with
    identity or zero summands) come up regularly.
    """
    if p1 is None:
        p1 = random_decomp(algebra, rng, max_summands)
    if p0 is None:
        p0 = random_decomp(algebra, rng, max_summands)
    field = algebra.field
    entries: dict[tuple[int, int], SparseElement] = {}
    for ell, k, b in hom_parameters(algebra, p1, p0):
        if rng.random() >= density:
            continue
        value = int(rng.integers(-2, 2, endpoint=True))
        if value:
            entries.setdefault((ell, k), {})[b] = field.convert(value)
    return TwoComplex.from_entries(algebra, p1, p0, entries)


def random_module(
    algebra: 'Algebra',
    rng:     np.random.Generator,
    max_dim: int = 9
) -> 'Representation':
    """ The cokernel of a random map into a sum of dimension ≤ max_dim. """
    p0 = random_decomp(algebra, rng, 2, max_dim)
    complex_ = random_complex(algebra, rng, p0=p0)
    module, _ = cokernel(complex_.morphism)
    return module
