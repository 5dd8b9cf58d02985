"""
The Nakayama functor on two-complexes.

``ν = D Hom_A(-, A)`` sends ``P(i)`` to ``I(i) = D(e_i A)``. A morphism
``P(j) -> P(i)`` given by ``p`` in ``e_j A e_i`` becomes the dual of
left multiplication ``e_i A -> e_j A, y -> p y``.
"""
from sympy.polys.matrices import DomainMatrix

from taurank.modules.decomposition import layout
from taurank.modules.decomposition import realize_injective
from taurank.modules.morphism import Morphism


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.presentations.complex import TwoComplex


def nakayama_complex(complex_: 'TwoComplex') -> Morphism:
    """ ``ν(P1) -> ν(P0)``, a morphism between sums of injectives. """
    algebra = complex_.algebra
    field = algebra.field
    opposite = algebra.opposite()
    source = realize_injective(algebra, complex_.p1)
    target = realize_injective(algebra, complex_.p0)
    # the vertex space of I(i) at v is dual to e_i A e_v, laid out like
    # the opposite projective at i
    src = layout(opposite, complex_.p1)
    dst = layout(opposite, complex_.p0)
    grids = [
        [[field.zero] * source.dims[v] for _ in range(target.dims[v])]
        for v in range(algebra.vertex_count)
    ]
    for (ell, k), p in complex_.entries().items():
        for v in range(algebra.vertex_count):
            columns = {x: c for c, x in enumerate(src.basis(ell, v))}
            if not columns:
                continue
            row0 = dst.offsets[k][v]
            col0 = src.offsets[ell][v]
            grid = grids[v]
            for r, y in enumerate(dst.basis(k, v)):
                product = algebra.multiply_sparse(p, {y: field.one})
                for x, value in product.items():
                    grid[row0 + r][col0 + columns[x]] += value
    maps = [
        DomainMatrix(grid, (target.dims[v], source.dims[v]), field.domain)
        for v, grid in enumerate(grids)
    ]
    return Morphism(source, target, maps, validate=False)
