"""
The modules and morphisms the examples are about.
"""
from taurank.modules.constructions import cokernel
from taurank.modules.constructions import direct_sum
from taurank.modules.constructions import injective
from taurank.modules.constructions import projective
from taurank.modules.constructions import simple
from taurank.modules.decomposition import ProjDecomp
from taurank.presentations.complex import TwoComplex


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Sequence

    from taurank.algebra.algebra import Algebra
    from taurank.modules.representation import Representation
    from taurank.types import SparseElement


def _b_element(
    algebra: 'Algebra',
    lambdas: 'Sequence[int]'
) -> 'SparseElement':
    """ ``λ1 b1 + λ2 b2 + λ3 b3`` in ALG-A. """
    field = algebra.field
    return {
        algebra.basis_index(f'b{i}'): field.convert(c)
        for i, c in enumerate(lambdas, start=1)
        if c
    }


def single_copy_map(
    algebra: 'Algebra',
    lambdas: 'Sequence[int]' = (1, 0, 0)
) -> TwoComplex:
    """ ``f^λ: P(2) -> P(3)`` with ``f(e_2) = Σ λ_i b_i``. """
    n = algebra.vertex_count
    return TwoComplex.from_entries(
        algebra,
        ProjDecomp.single(n, algebra.vertex_index('2')),
        ProjDecomp.single(n, algebra.vertex_index('3')),
        {(0, 0): _b_element(algebra, lambdas)}
    )


def double_copy_map(algebra: 'Algebra') -> TwoComplex:
    """
    ``P(2)^2 -> P(3)^2`` with the entry matrix
    ``[[f^(1,0,0), f^(0,1,0)], [f^(0,1,0), f^(0,0,1)]]``.
    """
    n = algebra.vertex_count
    entries = {
        (0, 0): _b_element(algebra, (1, 0, 0)),
        (0, 1): _b_element(algebra, (0, 1, 0)),
        (1, 0): _b_element(algebra, (0, 1, 0)),
        (1, 1): _b_element(algebra, (0, 0, 1)),
    }
    return TwoComplex.from_entries(
        algebra,
        ProjDecomp.single(n, algebra.vertex_index('2'), 2),
        ProjDecomp.single(n, algebra.vertex_index('3'), 2),
        entries
    )


def single_copy_cokernel(
    algebra: 'Algebra',
    lambdas: 'Sequence[int]' = (1, 0, 0)
) -> 'Representation':
    """ ``M = Cok f^λ`` over ALG-A. """
    module, _ = cokernel(single_copy_map(algebra, lambdas).morphism)
    return module


def simples(algebra: 'Algebra', *labels: str) -> 'Representation':
    return direct_sum(
        [simple(algebra, algebra.vertex_index(v)) for v in labels],
        algebra
    )


def reduction_module(algebra: 'Algebra') -> 'Representation':
    """ ``P(2) ⊕ I(2) ⊕ S(3)`` over ALG-B0. """
    v = algebra.vertex_index
    return direct_sum([
        projective(algebra, v('2')),
        injective(algebra, v('2')),
        simple(algebra, v('3')),
    ])
