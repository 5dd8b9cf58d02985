"""
Finite-dimensional algebras in structure constant form.

An :class:`Algebra` is a vector space with an ordered basis, each basis
element tagged by ``(source, target, length)``, and a sparse product
table. Every basis element also carries a *word*: an expression in the
generating arrows. Representations evaluate words through their arrow
matrices, which is how an algebra element acts on a module.
"""
import logging
from dataclasses import dataclass
from itertools import product

from taurank.algebra.quiver import Path
from taurank.exceptions import InvariantViolation
from taurank.exceptions import NotFiniteDimensionalError
from taurank.linalg.field import Field
from taurank.linalg.matrix import reduce_vector
from taurank.linalg.matrix import row_space


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Iterable
    from collections.abc import Sequence

    from taurank.algebra.parser import Convention
    from taurank.algebra.parser import ParsedQuiver
    from taurank.algebra.quiver import Quiver
    from taurank.algebra.quiver import RelationPoly
    from taurank.types import Element
    from taurank.types import JSONObject
    from taurank.types import Scalar
    from taurank.types import SparseElement

    Word = tuple[tuple[Scalar, tuple[int, ...]], ...]


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasisElement:
    source: int
    target: int
    length: int
    label: str
    word: 'Word'


@dataclass(frozen=True)
class AlgebraArrow:
    name: str
    source: int
    target: int
    basis_index: int


class Algebra:

    def __init__(
        self,
        field:      Field,
        vertices:   'Sequence[str]',
        arrows:     'Sequence[AlgebraArrow]',
        basis:      'Sequence[BasisElement]',
        table:      'Sequence[Sequence[SparseElement]]',
        name:       str | None = None,
        origin:     'Quiver | None' = None,
        check:      bool = True,
        convention: 'Convention' = 'after'
    ):
        self.field = field
        self.vertices = tuple(vertices)
        self.arrows = tuple(arrows)
        self.basis = tuple(basis)
        self.table = tuple(tuple(row) for row in table)
        self.name = name
        self.origin = origin
        # how paths are written in files for this algebra
        self.convention = convention
        self._opposite: Algebra | None = None

        self.idempotents = tuple(
            next(
                k for k, b in enumerate(self.basis)
                if b.length == 0 and b.source == v
            )
            for v in range(len(self.vertices))
        )
        self._between: dict[tuple[int, int], tuple[int, ...]] = {}
        for k, b in enumerate(self.basis):
            key = (b.source, b.target)
            self._between[key] = self._between.get(key, ()) + (k,)
        self._labels = {b.label: k for k, b in enumerate(self.basis)}
        if check:
            self.check_structure()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def vertex_index(self, label: str | int) -> int:
        try:
            return self.vertices.index(str(label))
        except ValueError:
            raise KeyError(f'unknown vertex: {label}') from None

    def basis_index(self, label: str) -> int:
        return self._labels[label]

    def arrow(self, name: str) -> AlgebraArrow:
        for arrow in self.arrows:
            if arrow.name == name:
                return arrow
        raise KeyError(f'unknown arrow: {name}')

    def basis_between(self, source: int, target: int) -> tuple[int, ...]:
        """ Basis of ``e_target A e_source``: elements from source. """
        return self._between.get((source, target), ())

    def starting_at(self, source: int) -> tuple[int, ...]:
        return tuple(
            k for k, b in enumerate(self.basis) if b.source == source
        )

    @property
    def generators(self) -> tuple[int, ...]:
        """ Idempotents and arrows, they generate A as an algebra. """
        return self.idempotents + tuple(a.basis_index for a in self.arrows)

    @property
    def is_semisimple(self) -> bool:
        return all(b.length == 0 for b in self.basis)

    def projective_dims(self, vertex: int) -> tuple[int, ...]:
        return tuple(
            len(self.basis_between(vertex, v))
            for v in range(self.vertex_count)
        )

    def injective_dims(self, vertex: int) -> tuple[int, ...]:
        return tuple(
            len(self.basis_between(v, vertex))
            for v in range(self.vertex_count)
        )

    # element arithmetic

    def zero(self) -> 'Element':
        return (self.field.zero, ) * self.dim

    def unit(self) -> 'Element':
        return self.from_sparse({k: self.field.one for k in self.idempotents})

    def basis_vector(self, k: int) -> 'Element':
        return self.from_sparse({k: self.field.one})

    def from_sparse(self, x: 'SparseElement') -> 'Element':
        result = [self.field.zero] * self.dim
        for k, c in x.items():
            result[k] = c
        return tuple(result)

    def to_sparse(self, x: 'Element') -> 'SparseElement':
        return {k: c for k, c in enumerate(x) if c}

    def multiply_sparse(
        self,
        x: 'SparseElement',
        y: 'SparseElement'
    ) -> 'SparseElement':
        result: SparseElement = {}
        for i, a in x.items():
            row = self.table[i]
            for j, b in y.items():
                for k, c in row[j].items():
                    value = result.get(k, self.field.zero) + a * b * c
                    if value:
                        result[k] = value
                    else:
                        result.pop(k, None)
        return result

    def multiply(self, x: 'Element', y: 'Element') -> 'Element':
        return self.from_sparse(
            self.multiply_sparse(self.to_sparse(x), self.to_sparse(y))
        )

    def path_element(self, path: Path) -> 'SparseElement':
        """ The residue of a quiver path, as a product of arrows. """
        result: SparseElement = {self.idempotents[path.source]: self.field.one}
        for a in reversed(path.arrows):
            result = self.multiply_sparse(
                {self.arrows[a].basis_index: self.field.one}, result
            )
        return result

    def format_element(self, x: 'Element | SparseElement') -> str:
        if not isinstance(x, dict):
            x = self.to_sparse(x)
        if not x:
            return '0'
        terms = []
        for k, c in sorted(x.items()):
            coefficient = self.field.to_json(c)
            label = self.basis[k].label
            terms.append(
                label if coefficient == 1 else f'{coefficient} {label}'
            )
        return ' + '.join(terms)

    def check_structure(self) -> None:
        """
        Verifies the idempotent relations and associativity on all
        triples of basis elements.
        """
        one = self.field.one
        for i, ei in enumerate(self.idempotents):
            for j, ej in enumerate(self.idempotents):
                expected = {ei: one} if i == j else {}
                if self.table[ei][ej] != expected:
                    raise InvariantViolation(
                        f'e{self.vertices[i]} e{self.vertices[j]} is wrong'
                    )
        for k, b in enumerate(self.basis):
            left = self.table[self.idempotents[b.target]][k]
            right = self.table[k][self.idempotents[b.source]]
            if left != {k: one} or right != {k: one}:
                raise InvariantViolation(
                    f'{b.label} is not fixed by its idempotents'
                )
        dim = self.dim
        for i, j, k in product(range(dim), repeat=3):
            if self.basis[j].target != self.basis[i].source:
                continue
            if self.basis[k].target != self.basis[j].source:
                continue
            left = self.multiply_sparse(self.table[i][j], {k: one})
            right = self.multiply_sparse({i: one}, self.table[j][k])
            if left != right:
                raise InvariantViolation(
                    'multiplication is not associative on '
                    f'{self.basis[i].label}, {self.basis[j].label}, '
                    f'{self.basis[k].label}'
                )

    def opposite(self) -> 'Algebra':
        """
        The opposite algebra. Taking it twice returns this very object,
        so dualising a module twice lands over the original algebra.
        """
        if self._opposite is None:
            basis = [
                BasisElement(
                    b.target, b.source, b.length, b.label,
                    tuple((c, tuple(reversed(w))) for c, w in b.word)
                )
                for b in self.basis
            ]
            arrows = [
                AlgebraArrow(a.name, a.target, a.source, a.basis_index)
                for a in self.arrows
            ]
            dim = self.dim
            table = [
                [self.table[j][i] for j in range(dim)]
                for i in range(dim)
            ]
            name = None
            if self.name is not None:
                name = self.name[:-3] if self.name.endswith('^op') \
                    else f'{self.name}^op'
            opposite = Algebra(
                self.field, self.vertices, arrows, basis, table, name,
                self.origin.opposite() if self.origin else None,
                check=False,
                convention=self.convention
            )
            opposite._opposite = self
            self._opposite = opposite
        return self._opposite

    def same_structure(self, other: 'Algebra') -> bool:
        """ Basis-wise equality: same tags, same arrows, same products. """
        return (
            self.field == other.field
            and self.vertices == other.vertices
            and [(a.name, a.source, a.target, a.basis_index)
                 for a in self.arrows]
            == [(a.name, a.source, a.target, a.basis_index)
                for a in other.arrows]
            and [(b.source, b.target, b.length) for b in self.basis]
            == [(b.source, b.target, b.length) for b in other.basis]
            and self.table == other.table
        )

    def describe(self) -> 'JSONObject':
        n = self.vertex_count
        return {
            'name': self.name,
            'field': self.field.tag,
            'vertices': list(self.vertices),
            'arrows': [
                {
                    'name': a.name,
                    'source': self.vertices[a.source],
                    'target': self.vertices[a.target]
                }
                for a in self.arrows
            ],
            'dim': self.dim,
            'radical_dim': sum(1 for b in self.basis if b.length > 0),
            'projectives': [list(self.projective_dims(i)) for i in range(n)],
            'injectives': [list(self.injective_dims(i)) for i in range(n)],
        }

    def __repr__(self) -> str:
        name = self.name or 'Algebra'
        return f'<{name} dim={self.dim} over {self.field.tag}>'


def multiply(algebra: Algebra, x: 'Element', y: 'Element') -> 'Element':
    return algebra.multiply(x, y)


def opposite_algebra(algebra: Algebra) -> Algebra:
    return algebra.opposite()


def _unit(field: Field, size: int, k: int) -> list['Scalar']:
    result = [field.zero] * size
    result[k] = field.one
    return result


def _relation_closure(
    field:      Field,
    quiver:     'Quiver',
    relations:  'Sequence[RelationPoly]',
    coordinate: dict[Path, int],
    paths:      'Sequence[Path]',
    bound:      int
) -> tuple[list[list['Scalar']], tuple[int, ...]]:
    """
    The span of the two-sided ideal generated by ``relations`` inside
    the space of paths of length at most ``bound``, in reduced echelon
    form. Longer paths are dropped, which is harmless once every path
    of length ``bound`` turns out to lie in the span.
    """
    size = len(paths)

    def vector(terms: 'Iterable[tuple[Scalar, Path]]') -> list['Scalar']:
        result = [field.zero] * size
        for c, path in terms:
            if path.length <= bound:
                result[coordinate[path]] += c
        return result

    rows = [
        vector((field.convert(c), path) for c, path in relation.terms)
        for relation in relations
    ]
    reduced, pivots = row_space(field, rows, size)
    while True:
        products = []
        for row in reduced:
            support = [(c, paths[k]) for k, c in enumerate(row) if c]
            for a, arrow in enumerate(quiver.arrows):
                step = Path((a,), arrow.source, arrow.target)
                left = [
                    (c, composed) for c, path in support
                    if (composed := step.compose(path)) is not None
                ]
                right = [
                    (c, composed) for c, path in support
                    if (composed := path.compose(step)) is not None
                ]
                if left:
                    products.append(vector(left))
                if right:
                    products.append(vector(right))
        grown, grown_pivots = row_space(field, reduced + products, size)
        if len(grown_pivots) == len(pivots):
            return reduced, pivots
        reduced, pivots = grown, grown_pivots


def build_algebra(
    quiver:     'Quiver',
    relations:  'Sequence[RelationPoly]' = (),
    field:      Field | None = None,
    max_len:    int = 30,
    name:       str | None = None,
    convention: 'Convention' = 'after'
) -> Algebra:
    """
    Builds ``KQ/I`` for the ideal generated by ``relations``.

    The admissible truncation ``bound`` is found by increasing it until
    every path of that length lies in the relation ideal modulo longer
    paths. Basis elements are the surviving paths; when echelonizing,
    longer paths are eliminated first, so the survivors of each
    ``(source, target)`` block are as short as possible.
    """
    if max_len < 1:
        raise ValueError('max_len must be at least 1')
    if field is None:
        field = Field()

    for bound in range(1, max_len + 1):
        by_length = [quiver.paths_of_length(k) for k in range(bound + 1)]
        paths = [p for layer in reversed(by_length) for p in layer]
        coordinate = {path: k for k, path in enumerate(paths)}
        reduced, pivots = _relation_closure(
            field, quiver, relations, coordinate, paths, bound
        )
        logger.debug(
            'bound %d: %d paths, relation span of dimension %d',
            bound, len(paths), len(pivots)
        )
        pivot_set = set(pivots)
        size = len(paths)
        if not any(
            any(reduce_vector(_unit(field, size, coordinate[p]),
                              reduced, pivots))
            for p in by_length[bound]
        ):
            break
    else:
        raise NotFiniteDimensionalError(max_len)

    survivors = [
        path
        for layer in by_length[:bound]
        for path in layer
        if coordinate[path] not in pivot_set
    ]
    index = {path: k for k, path in enumerate(survivors)}
    one = field.one
    basis = [
        BasisElement(
            path.source, path.target, path.length, quiver.label(path),
            ((one, path.arrows), )
        )
        for path in survivors
    ]

    table: list[list[SparseElement]] = []
    for p in survivors:
        row: list[SparseElement] = []
        for q in survivors:
            composed = p.compose(q)
            if composed is None or composed.length >= bound:
                row.append({})
                continue
            residue = reduce_vector(
                _unit(field, size, coordinate[composed]), reduced, pivots
            )
            row.append({
                index[paths[k]]: c for k, c in enumerate(residue) if c
            })
        table.append(row)

    arrows = [
        AlgebraArrow(
            arrow.name, arrow.source, arrow.target,
            index[Path((a,), arrow.source, arrow.target)]
        )
        for a, arrow in enumerate(quiver.arrows)
    ]
    algebra = Algebra(
        field, quiver.vertices, arrows, basis, table, name, quiver,
        convention=convention
    )
    logger.debug('built %r with truncation %d', algebra, bound)
    return algebra


def algebra_from_parsed(
    parsed:  'ParsedQuiver',
    field:   Field | None = None,
    max_len: int = 30
) -> Algebra:
    return build_algebra(
        parsed.quiver, parsed.relations, field, max_len, parsed.name,
        parsed.convention
    )
