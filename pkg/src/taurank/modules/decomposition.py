"""
Explicit direct sums of indecomposable projectives (and injectives).

A :class:`ProjDecomp` is a multiplicity vector ``(m_1, ..., m_n)`` for
``P(1)^m_1 ⊕ ... ⊕ P(n)^m_n``. Its realization lists the summands in
canonical order, all copies of ``P(1)`` first. A morphism between two
realized sums is determined by its *entry matrix*: the entry for source
summand ``P(j)`` and target summand ``P(i)`` is the element of
``e_j A e_i`` that the generator ``e_j`` is sent to.
"""
from dataclasses import dataclass
from itertools import product
from sympy.polys.matrices import DomainMatrix

from taurank.cache import instance_cache
from taurank.exceptions import InvariantViolation
from taurank.exceptions import ShapeMismatchError
from taurank.linalg.matrix import entries
from taurank.modules.constructions import dual
from taurank.modules.constructions import direct_sum
from taurank.modules.constructions import projective
from taurank.modules.morphism import Morphism
from taurank.modules.representation import Representation


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Iterator
    from collections.abc import Mapping
    from collections.abc import Sequence

    from taurank.algebra.algebra import Algebra
    from taurank.types import SparseElement

    EntryMatrix = Mapping[tuple[int, int], SparseElement]


@dataclass(frozen=True)
class ProjDecomp:
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(m < 0 for m in self.multiplicities):
            raise InvariantViolation(
                f'negative multiplicity in {self.multiplicities}'
            )

    @classmethod
    def zero(cls, n: int) -> 'ProjDecomp':
        return cls((0, ) * n)

    @classmethod
    def single(cls, n: int, vertex: int, count: int = 1) -> 'ProjDecomp':
        return cls(tuple(count if v == vertex else 0 for v in range(n)))

    @property
    def summands(self) -> tuple[int, ...]:
        """ The vertex of every summand, in canonical order. """
        return tuple(
            v for v, m in enumerate(self.multiplicities) for _ in range(m)
        )

    @property
    def is_zero(self) -> bool:
        return not any(self.multiplicities)

    def __len__(self) -> int:
        return sum(self.multiplicities)

    def __add__(self, other: 'ProjDecomp') -> 'ProjDecomp':
        return ProjDecomp(tuple(
            a + b for a, b in zip(self.multiplicities, other.multiplicities,
                                  strict=True)
        ))

    def __sub__(self, other: 'ProjDecomp') -> 'ProjDecomp':
        """ Multiplicity subtraction, negative results are an error. """
        return ProjDecomp(tuple(
            a - b for a, b in zip(self.multiplicities, other.multiplicities,
                                  strict=True)
        ))

    def scaled(self, t: int) -> 'ProjDecomp':
        return ProjDecomp(tuple(t * m for m in self.multiplicities))

    def total_dim(self, algebra: 'Algebra') -> int:
        return sum(
            m * sum(algebra.projective_dims(v))
            for v, m in enumerate(self.multiplicities)
        )

    def dims(self, algebra: 'Algebra') -> tuple[int, ...]:
        result = [0] * algebra.vertex_count
        for v, m in enumerate(self.multiplicities):
            for w, d in enumerate(algebra.projective_dims(v)):
                result[w] += m * d
        return tuple(result)

    def __str__(self) -> str:
        return '(' + ','.join(str(m) for m in self.multiplicities) + ')'


def decomposition_grid(
    vertex_count:     int,
    max_multiplicity: int
) -> 'Iterator[ProjDecomp]':
    """ Every nonzero sum with multiplicities up to ``max_multiplicity``. """
    for multiplicities in product(range(max_multiplicity + 1),
                                  repeat=vertex_count):
        if any(multiplicities):
            yield ProjDecomp(multiplicities)


class Layout:
    """
    Where each summand of a realized projective sum sits: for summand
    ``k`` (at vertex ``i_k``) and vertex ``w``, the slice of the vertex
    space at ``w`` spanned by the basis of ``e_w A e_{i_k}``.
    """

    def __init__(self, algebra: 'Algebra', decomp: ProjDecomp):
        self.algebra = algebra
        self.decomp = decomp
        self.summands = decomp.summands
        n = algebra.vertex_count
        self.offsets: list[list[int]] = []
        running = [0] * n
        for i in self.summands:
            self.offsets.append(list(running))
            for w in range(n):
                running[w] += len(algebra.basis_between(i, w))
        self.dims = tuple(running)

    def basis(self, k: int, w: int) -> tuple[int, ...]:
        return self.algebra.basis_between(self.summands[k], w)

    def generator_position(self, k: int) -> int:
        """ Coordinate of the generator ``e_i`` of summand k at vertex i. """
        i = self.summands[k]
        e = self.algebra.idempotents[i]
        return self.offsets[k][i] + self.basis(k, i).index(e)

    def __iter__(self) -> 'Iterator[int]':
        return iter(self.summands)


@instance_cache()
def layout(algebra: 'Algebra', decomp: ProjDecomp) -> Layout:
    return Layout(algebra, decomp)


@instance_cache()
def realize(algebra: 'Algebra', decomp: ProjDecomp) -> Representation:
    """ The representation ``⊕ P(i)^{m_i}`` with summands in order. """
    if len(decomp.multiplicities) != algebra.vertex_count:
        raise ShapeMismatchError(
            f'{decomp} does not match {algebra.vertex_count} vertices'
        )
    return direct_sum(
        [projective(algebra, i) for i in decomp.summands], algebra
    )


@instance_cache()
def realize_injective(
    algebra: 'Algebra',
    decomp:  ProjDecomp
) -> Representation:
    """ ``⊕ I(i)^{m_i}``, the dual of the sum of opposite projectives. """
    opposite = realize(algebra.opposite(), decomp)
    return dual(opposite)


def hom_parameters(
    algebra: 'Algebra',
    p1:      ProjDecomp,
    p0:      ProjDecomp
) -> list[tuple[int, int, int]]:
    """
    A basis of ``Hom(P1, P0)``: triples ``(l, k, b)`` for source summand
    ``l``, target summand ``k`` and a basis element ``b`` of
    ``e_{j_l} A e_{i_k}``, the paths from ``i_k`` to ``j_l``.
    """
    sources = p1.summands
    targets = p0.summands
    return [
        (ell, k, b)
        for ell, j in enumerate(sources)
        for k, i in enumerate(targets)
        for b in algebra.basis_between(i, j)
    ]


def morphism_from_entries(
    algebra: 'Algebra',
    p1:      ProjDecomp,
    p0:      ProjDecomp,
    entries_: 'EntryMatrix'
) -> Morphism:
    """
    Realizes an entry matrix: the generator of source summand ``l`` goes
    to ``Σ_k entries[l, k]`` in the target summands, and a basis element
    ``x`` of that summand goes to ``x`` times it.
    """
    source = realize(algebra, p1)
    target = realize(algebra, p0)
    src = layout(algebra, p1)
    dst = layout(algebra, p0)
    field = algebra.field
    grids = [
        [[field.zero] * source.dims[w] for _ in range(target.dims[w])]
        for w in range(algebra.vertex_count)
    ]
    for (ell, k), p in entries_.items():
        if not p:
            continue
        for w in range(algebra.vertex_count):
            rows = dst.basis(k, w)
            position = {b: r for r, b in enumerate(rows)}
            row0 = dst.offsets[k][w]
            col0 = src.offsets[ell][w]
            grid = grids[w]
            for c, x in enumerate(src.basis(ell, w)):
                image = algebra.multiply_sparse({x: field.one}, p)
                for b, value in image.items():
                    grid[row0 + position[b]][col0 + c] += value
    maps = [
        DomainMatrix(grid, (target.dims[w], source.dims[w]), field.domain)
        for w, grid in enumerate(grids)
    ]
    return Morphism(source, target, maps, validate=False)


def entries_from_morphism(
    f:  Morphism,
    p1: ProjDecomp,
    p0: ProjDecomp
) -> dict[tuple[int, int], 'SparseElement']:
    """ Reads the entry matrix off the images of the summand generators. """
    algebra = f.source.algebra
    src = layout(algebra, p1)
    dst = layout(algebra, p0)
    result: dict[tuple[int, int], SparseElement] = {}
    for ell, j in enumerate(src.summands):
        column = [row[src.generator_position(ell)]
                  for row in entries(f.maps[j])]
        for k in range(len(dst.summands)):
            offset = dst.offsets[k][j]
            element = {
                b: column[offset + r]
                for r, b in enumerate(dst.basis(k, j))
                if column[offset + r]
            }
            if element:
                result[ell, k] = element
    return result


def summand_order(decomps: 'Sequence[ProjDecomp]') -> list[list[int]]:
    """
    For a list of decompositions, where each of their summands lands in
    the canonical order of their sum.
    """
    keyed = [
        (vertex, r, k)
        for r, decomp in enumerate(decomps)
        for k, vertex in enumerate(decomp.summands)
    ]
    result = [[0] * len(d) for d in decomps]
    for position, (_, r, k) in enumerate(sorted(keyed)):
        result[r][k] = position
    return result
