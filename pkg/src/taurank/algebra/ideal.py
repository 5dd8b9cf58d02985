import logging
from dataclasses import dataclass

from taurank.algebra.algebra import Algebra
from taurank.algebra.algebra import AlgebraArrow
from taurank.algebra.algebra import BasisElement
from taurank.algebra.parser import parse_elements
from taurank.exceptions import AlgebraMismatchError
from taurank.exceptions import IdealError
from taurank.exceptions import InvariantViolation
from taurank.linalg.matrix import from_columns
from taurank.linalg.matrix import kernel_basis
from taurank.linalg.matrix import reduce_vector
from taurank.linalg.matrix import row_space


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Sequence

    from taurank.algebra.algebra import Word
    from taurank.algebra.parser import Convention
    from taurank.types import Element
    from taurank.types import JSONObject
    from taurank.types import Scalar
    from taurank.types import SparseElement


logger = logging.getLogger(__name__)


class Ideal:
    """
    A two-sided ideal, kept as a reduced echelon basis.

    Columns are ordered longest path first when echelonizing, so the
    pivots sit on the longest basis elements; equal ideals have equal
    echelon bases and compare equal.
    """

    def __init__(
        self,
        algebra:    Algebra,
        elements:   'Sequence[Element]' = (),
        generators: 'Sequence[Element] | None' = None
    ):
        self.algebra = algebra
        self.generators = tuple(elements if generators is None
                                else generators)
        self._order = sorted(
            range(algebra.dim),
            key=lambda k: (-algebra.basis[k].length, k)
        )
        permuted = [[x[k] for k in self._order] for x in elements]
        reduced, pivots = row_space(algebra.field, permuted, algebra.dim)
        self._reduced = reduced
        self._pivots = pivots

    @classmethod
    def generated_by(
        cls,
        algebra:  Algebra,
        elements: 'Sequence[Element]'
    ) -> 'Ideal':
        """ The two-sided ideal generated by ``elements``. """
        ideal = cls(algebra, elements)
        generators = algebra.generators
        while True:
            products = []
            for x in ideal.basis:
                sparse = algebra.to_sparse(x)
                for g in generators:
                    products.append(algebra.from_sparse(
                        algebra.multiply_sparse({g: algebra.field.one},
                                                sparse)
                    ))
                    products.append(algebra.from_sparse(
                        algebra.multiply_sparse(sparse,
                                                {g: algebra.field.one})
                    ))
            grown = cls(algebra, list(ideal.basis) + products)
            if grown.dim == ideal.dim:
                break
            ideal = grown
        return cls(algebra, ideal.basis, generators=elements)

    @property
    def dim(self) -> int:
        return len(self._pivots)

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def pivots(self) -> tuple[int, ...]:
        """ Basis indices of the pivot positions. """
        return tuple(self._order[p] for p in self._pivots)

    @property
    def basis(self) -> tuple['Element', ...]:
        result = []
        for row in self._reduced:
            x = [self.algebra.field.zero] * self.algebra.dim
            for position, k in enumerate(self._order):
                x[k] = row[position]
            result.append(tuple(x))
        return tuple(result)

    def reduce(self, x: 'Element') -> 'Element':
        """ Normal form of ``x`` modulo the ideal. """
        permuted = [x[k] for k in self._order]
        reduced = reduce_vector(permuted, self._reduced, self._pivots)
        result = [self.algebra.field.zero] * self.algebra.dim
        for position, k in enumerate(self._order):
            result[k] = reduced[position]
        return tuple(result)

    def contains(self, x: 'Element') -> bool:
        return not any(self.reduce(x))

    def is_closed(self) -> bool:
        """ Closure under multiplication by every basis element. """
        algebra = self.algebra
        one = algebra.field.one
        for x in self.basis:
            sparse = algebra.to_sparse(x)
            for k in range(algebra.dim):
                for product in (
                    algebra.multiply_sparse({k: one}, sparse),
                    algebra.multiply_sparse(sparse, {k: one})
                ):
                    if not self.contains(algebra.from_sparse(product)):
                        return False
        return True

    def _check_algebra(self, other: 'Ideal') -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError('ideals of different algebras')

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self._pivots == other._pivots
            and self._reduced == other._reduced
        )

    def __hash__(self) -> int:
        return hash((id(self.algebra), self._pivots))

    def __le__(self, other: 'Ideal') -> bool:
        self._check_algebra(other)
        return all(other.contains(x) for x in self.basis)

    def __repr__(self) -> str:
        return f'<Ideal dim={self.dim} of {self.algebra!r}>'

    def describe(self) -> 'JSONObject':
        return {
            'dim': self.dim,
            'basis': [self.algebra.format_element(x) for x in self.basis],
        }


def zero_ideal(algebra: Algebra) -> Ideal:
    return Ideal(algebra)


def unit_ideal(algebra: Algebra) -> Ideal:
    return Ideal(
        algebra, [algebra.basis_vector(k) for k in range(algebra.dim)]
    )


def radical(algebra: Algebra) -> Ideal:
    return Ideal(algebra, [
        algebra.basis_vector(k)
        for k, b in enumerate(algebra.basis)
        if b.length > 0
    ])


def intersect(left: Ideal, right: Ideal) -> Ideal:
    left._check_algebra(right)
    algebra = left.algebra
    # x in left ∩ right iff x is in left and reduces to zero mod right
    basis = left.basis
    field = algebra.field
    images = [right.reduce(x) for x in basis]
    relations = kernel_basis(from_columns(field, images, algebra.dim)) \
        if basis else []
    elements = [
        tuple(
            sum((c * x[k] for c, x in zip(v, basis)), field.zero)
            for k in range(algebra.dim)
        )
        for v in relations
    ]
    return Ideal(algebra, elements)


def product_ideal(left: Ideal, right: Ideal) -> Ideal:
    """ The span of all products of an element of left and one of right. """
    left._check_algebra(right)
    algebra = left.algebra
    return Ideal(algebra, [
        algebra.multiply(x, y) for x in left.basis for y in right.basis
    ])


def nilpotency_index(ideal: Ideal, limit: int) -> int | None:
    """ The least L with ideal^L = 0, or None if not reached by limit. """
    power = ideal
    for exponent in range(1, limit + 1):
        if power.is_zero:
            return exponent
        power = product_ideal(power, ideal)
    return None


@dataclass(frozen=True)
class QuotientMap:
    """ The projection ``A -> A/I`` with its vertex correspondence. """

    source: Algebra
    target: Algebra
    ideal: Ideal
    survivors: tuple[int, ...]
    vertex_map: dict[int, int]

    def apply(self, x: 'Element') -> 'Element':
        reduced = self.ideal.reduce(x)
        return tuple(reduced[k] for k in self.survivors)

    def apply_sparse(self, x: 'SparseElement') -> 'SparseElement':
        image = self.apply(self.source.from_sparse(x))
        return {k: c for k, c in enumerate(image) if c}


def _substitute(
    word:   'Word',
    images: 'dict[int, SparseElement]',
    zero:   'Scalar'
) -> 'Word':
    """
    Rewrites a word over the arrows of A into a word over the arrows of
    A/I, given the image of each A-arrow as a combination of B-arrows.
    """
    expanded: dict[tuple[int, ...], Scalar] = {}
    for coefficient, letters in word:
        partial: dict[tuple[int, ...], Scalar] = {(): coefficient}
        for letter in letters:
            step: dict[tuple[int, ...], Scalar] = {}
            for prefix, c in partial.items():
                for image_letter, d in images[letter].items():
                    key = prefix + (image_letter,)
                    step[key] = step.get(key, zero) + c * d
            partial = {k: v for k, v in step.items() if v}
        for key, c in partial.items():
            expanded[key] = expanded.get(key, zero) + c
    return tuple((c, key) for key, c in sorted(expanded.items()) if c)


def quotient_algebra(
    algebra: Algebra,
    ideal:   Ideal
) -> tuple[Algebra, QuotientMap]:
    if ideal.algebra is not algebra:
        raise AlgebraMismatchError('the ideal belongs to another algebra')
    if ideal.dim == algebra.dim:
        raise IdealError('cannot divide by the whole algebra')
    if not ideal.is_closed():
        raise IdealError('not a two-sided ideal')

    pivots = set(ideal.pivots)
    survivors = tuple(k for k in range(algebra.dim) if k not in pivots)
    position = {k: i for i, k in enumerate(survivors)}
    vertex_map = {}
    for v, e in enumerate(algebra.idempotents):
        if not ideal.contains(algebra.basis_vector(e)):
            vertex_map[v] = len(vertex_map)
    for k in survivors:
        b = algebra.basis[k]
        if b.source not in vertex_map or b.target not in vertex_map:
            raise InvariantViolation(
                f'{b.label} survives although its vertex does not'
            )

    def residue(x: 'SparseElement') -> 'SparseElement':
        reduced = ideal.reduce(algebra.from_sparse(x))
        return {position[k]: c for k, c in enumerate(reduced) if c}

    table = [
        [residue(algebra.table[i][j]) for j in survivors]
        for i in survivors
    ]

    arrows = []
    arrow_of_basis: dict[int, int] = {}
    for k in survivors:
        b = algebra.basis[k]
        if b.length == 1:
            arrow_of_basis[position[k]] = len(arrows)
            arrows.append(AlgebraArrow(
                b.label, vertex_map[b.source], vertex_map[b.target],
                position[k]
            ))

    one = algebra.field.one
    images: dict[int, SparseElement] = {}
    for a, arrow in enumerate(algebra.arrows):
        image = residue({arrow.basis_index: one})
        if any(k not in arrow_of_basis for k in image):
            raise InvariantViolation(
                f'arrow {arrow.name} does not map into the arrows of '
                'the quotient'
            )
        images[a] = {arrow_of_basis[k]: c for k, c in image.items()}

    basis = [
        BasisElement(
            vertex_map[algebra.basis[k].source],
            vertex_map[algebra.basis[k].target],
            algebra.basis[k].length,
            algebra.basis[k].label,
            _substitute(algebra.basis[k].word, images, algebra.field.zero)
            if algebra.basis[k].length else ((one, ()), )
        )
        for k in survivors
    ]
    vertices = [algebra.vertices[v] for v in vertex_map]
    name = f'{algebra.name}/I' if algebra.name else None
    quotient = Algebra(algebra.field, vertices, arrows, basis, table, name,
                       convention=algebra.convention)
    logger.debug(
        'quotient of %r by an ideal of dimension %d: %r',
        algebra, ideal.dim, quotient
    )
    return quotient, QuotientMap(algebra, quotient, ideal, survivors,
                                 vertex_map)


def ideal_from_text(
    algebra:    Algebra,
    text:       str,
    convention: 'Convention | None' = None
) -> Ideal:
    """
    The ideal generated by the elements of an ideal file, one per line,
    see :func:`taurank.algebra.parser.parse_elements`. Paths are read
    in the convention of the algebra's own file unless told otherwise.
    """
    if algebra.origin is None:
        raise IdealError('ideal files need an algebra built from a quiver')
    field = algebra.field
    elements = []
    for terms in parse_elements(
        algebra.origin, text, convention or algebra.convention
    ):
        element: SparseElement = {}
        for coefficient, path in terms:
            c = field.convert(coefficient)
            for k, value in algebra.path_element(path).items():
                element[k] = element.get(k, field.zero) + c * value
        elements.append(algebra.from_sparse(
            {k: c for k, c in element.items() if c}
        ))
    if not elements:
        raise IdealError('the ideal file lists no elements')
    ideal = Ideal.generated_by(algebra, elements)
    logger.debug('read an ideal of dimension %d', ideal.dim)
    return ideal
