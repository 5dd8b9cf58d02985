"""
Dense exact linear algebra on top of sympy's ``DomainMatrix``.

Matrices are always ``DomainMatrix`` instances over the session
field's domain. Column vectors are plain lists of scalars. Empty shapes
(zero rows or zero columns) are common in representation theory and are
handled explicitly here so that callers never have to special-case them.
"""
from sympy.polys.matrices import DomainMatrix

from taurank.exceptions import ShapeMismatchError


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Sequence

    from taurank.linalg.field import Field
    from taurank.types import Scalar

    Vector = list[Scalar]


def zeros(field: 'Field', rows: int, cols: int) -> DomainMatrix:
    return DomainMatrix.zeros((rows, cols), field.domain).to_dense()


def identity(field: 'Field', size: int) -> DomainMatrix:
    return DomainMatrix.eye(size, field.domain).to_dense()


def from_rows(
    field: 'Field',
    rows:  'Sequence[Sequence[Scalar]]',
    cols:  int | None = None
) -> DomainMatrix:
    if cols is None:
        cols = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != cols:
            raise ShapeMismatchError(
                f'row of length {len(row)} in a matrix with {cols} columns'
            )
    return DomainMatrix([list(row) for row in rows], (len(rows), cols),
                        field.domain)


def from_columns(
    field:   'Field',
    columns: 'Sequence[Sequence[Scalar]]',
    rows:    int
) -> DomainMatrix:
    grid = [[column[i] for column in columns] for i in range(rows)]
    return DomainMatrix(grid, (rows, len(columns)), field.domain)


def entries(m: DomainMatrix) -> list[list['Scalar']]:
    rows, cols = m.shape
    if rows == 0:
        return []
    if cols == 0:
        return [[] for _ in range(rows)]
    return m.to_list()


def column(m: DomainMatrix, j: int) -> 'Vector':
    return [row[j] for row in entries(m)]


def columns(m: DomainMatrix) -> list['Vector']:
    grid = entries(m)
    return [[row[j] for row in grid] for j in range(m.shape[1])]


def is_zero(m: DomainMatrix) -> bool:
    return not any(x for row in entries(m) for x in row)


def transpose(m: DomainMatrix) -> DomainMatrix:
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return DomainMatrix.zeros((cols, rows), m.domain).to_dense()
    return m.transpose()


def matmul(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatchError(
            f'cannot multiply {a.shape} by {b.shape}'
        )
    if 0 in a.shape or 0 in b.shape:
        return DomainMatrix.zeros((a.shape[0], b.shape[1]), a.domain).to_dense()
    return a.matmul(b)


def add(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    if a.shape != b.shape:
        raise ShapeMismatchError(f'cannot add {a.shape} and {b.shape}')
    if 0 in a.shape:
        return a
    return a + b


def scale(m: DomainMatrix, c: 'Scalar') -> DomainMatrix:
    grid = [[c * x for x in row] for row in entries(m)]
    return DomainMatrix(grid, m.shape, m.domain)


def linear_combination(
    field:        'Field',
    coefficients: 'Sequence[Scalar]',
    matrices:     'Sequence[DomainMatrix]',
    shape:        tuple[int, int]
) -> DomainMatrix:
    rows, cols = shape
    grid = [[field.zero] * cols for _ in range(rows)]
    for c, m in zip(coefficients, matrices, strict=True):
        if not c:
            continue
        for i, row in enumerate(entries(m)):
            target = grid[i]
            for j, x in enumerate(row):
                if x:
                    target[j] += c * x
    return DomainMatrix(grid, shape, field.domain)


def hstack(
    field:    'Field',
    matrices: 'Sequence[DomainMatrix]',
    rows:     int
) -> DomainMatrix:
    grid: list[list[Scalar]] = [[] for _ in range(rows)]
    for m in matrices:
        if m.shape[0] != rows:
            raise ShapeMismatchError(
                f'cannot stack {m.shape} next to {rows} rows'
            )
        for target, row in zip(grid, entries(m)):
            target.extend(row)
    cols = sum(m.shape[1] for m in matrices)
    return DomainMatrix(grid, (rows, cols), field.domain)


def vstack(
    field:    'Field',
    matrices: 'Sequence[DomainMatrix]',
    cols:     int
) -> DomainMatrix:
    grid: list[list[Scalar]] = []
    for m in matrices:
        if m.shape[1] != cols:
            raise ShapeMismatchError(
                f'cannot stack {m.shape} below {cols} columns'
            )
        grid.extend(entries(m))
    return DomainMatrix(grid, (len(grid), cols), field.domain)


def block_diagonal(
    field:  'Field',
    blocks: 'Sequence[DomainMatrix]'
) -> DomainMatrix:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    grid = [[field.zero] * cols for _ in range(rows)]
    row_offset = col_offset = 0
    for block in blocks:
        for i, row in enumerate(entries(block)):
            grid[row_offset + i][col_offset:col_offset + len(row)] = row
        row_offset += block.shape[0]
        col_offset += block.shape[1]
    return DomainMatrix(grid, (rows, cols), field.domain)


def submatrix(
    m:    DomainMatrix,
    rows: 'Sequence[int]',
    cols: 'Sequence[int]'
) -> DomainMatrix:
    grid = entries(m)
    return DomainMatrix(
        [[grid[i][j] for j in cols] for i in rows],
        (len(rows), len(cols)),
        m.domain
    )


def rref(m: DomainMatrix) -> tuple[list[list['Scalar']], tuple[int, ...]]:
    """
    Reduced row echelon form, returned as the list of nonzero rows
    together with their pivot columns.
    """
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return [], ()
    reduced, pivots = m.rref()
    pivots = tuple(pivots)
    return entries(reduced)[:len(pivots)], pivots


def rank(m: DomainMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: DomainMatrix) -> list['Vector']:
    """
    Basis of the right null space, one vector per non-pivot column.

    The vector for the free column j has a one in position j.
    """
    cols = m.shape[1]
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    one, zero = m.domain.one, m.domain.zero
    basis = []
    for j in range(cols):
        if j in pivot_set:
            continue
        vector = [zero] * cols
        vector[j] = one
        for row, p in zip(reduced, pivots):
            vector[p] = -row[j]
        basis.append(vector)
    return basis


def kernel_matrix(field: 'Field', m: DomainMatrix) -> DomainMatrix:
    """ Kernel basis as the columns of a matrix. """
    return from_columns(field, kernel_basis(m), m.shape[1])


def solve_matrix(
    field: 'Field',
    m:     DomainMatrix,
    b:     DomainMatrix
) -> DomainMatrix | None:
    """
    Returns some ``x`` with ``m * x == b`` or ``None`` when the system
    is inconsistent.
    """
    rows, cols = m.shape
    if b.shape[0] != rows:
        raise ShapeMismatchError(
            f'right hand side {b.shape} does not fit {m.shape}'
        )
    rhs = b.shape[1]
    reduced, pivots = rref(hstack(field, [m, b], rows))
    if any(p >= cols for p in pivots):
        return None
    grid = [[field.zero] * rhs for _ in range(cols)]
    for row, p in zip(reduced, pivots):
        grid[p] = row[cols:]
    return DomainMatrix(grid, (cols, rhs), field.domain)


def solve(
    field: 'Field',
    m:     DomainMatrix,
    b:     'Sequence[Scalar]'
) -> 'Vector | None':
    x = solve_matrix(field, m, from_columns(field, [b], len(b)))
    if x is None:
        return None
    return column(x, 0)


def column_space(field: 'Field', m: DomainMatrix) -> DomainMatrix:
    """ The pivot columns of ``m``, a basis of its image. """
    _, pivots = rref(m)
    return submatrix(m, range(m.shape[0]), pivots)


def row_space(
    field:   'Field',
    vectors: 'Sequence[Sequence[Scalar]]',
    size:    int
) -> tuple[list[list['Scalar']], tuple[int, ...]]:
    """ Reduced echelon basis of the span of ``vectors``. """
    if not vectors:
        return [], ()
    return rref(from_rows(field, vectors, size))


def reduce_vector(
    vector:  'Sequence[Scalar]',
    reduced: 'Sequence[Sequence[Scalar]]',
    pivots:  'Sequence[int]'
) -> 'Vector':
    """
    Normal form of ``vector`` modulo a reduced echelon basis: the
    result vanishes in every pivot position.
    """
    result = list(vector)
    for row, p in zip(reduced, pivots):
        c = result[p]
        if c:
            result = [x - c * y for x, y in zip(result, row)]
    return result


def quotient_coordinates(
    field:    'Field',
    subspace: DomainMatrix
) -> tuple[DomainMatrix, DomainMatrix]:
    """
    Coordinates for ``V / U`` where ``U`` is spanned by the columns of
    ``subspace``.

    Returns ``(q, s)`` with ``q`` the quotient map ``V -> V/U`` (killing
    ``U``) and ``s`` a section of it (``q * s`` is the identity).
    """
    size = subspace.shape[0]
    reduced, pivots = row_space(field, columns(subspace), size)
    pivot_set = set(pivots)
    free = [j for j in range(size) if j not in pivot_set]
    q = [[field.zero] * size for _ in free]
    for k, j in enumerate(free):
        q[k][j] = field.one
        for row, p in zip(reduced, pivots):
            q[k][p] = -row[j]
    s = [[field.zero] * len(free) for _ in range(size)]
    for k, j in enumerate(free):
        s[j][k] = field.one
    return (
        DomainMatrix(q, (len(free), size), field.domain),
        DomainMatrix(s, (size, len(free)), field.domain)
    )


def contains_columns(
    field: 'Field',
    space: DomainMatrix,
    other: DomainMatrix
) -> bool:
    """ Whether the column span of ``other`` lies in that of ``space``. """
    if other.shape[1] == 0:
        return True
    combined = hstack(field, [space, other], space.shape[0])
    return rank(combined) == rank(space)


def intersect_columns(
    field: 'Field',
    left:  DomainMatrix,
    right: DomainMatrix
) -> DomainMatrix:
    """ A basis (as columns) of the intersection of two column spans. """
    size = left.shape[0]
    left = column_space(field, left)
    right = column_space(field, right)
    width = left.shape[1]
    relations = kernel_basis(hstack(field, [left, right], size))
    vectors = [
        entries(matmul(left, from_columns(field, [v[:width]], width)))
        for v in relations
    ]
    flat = [[row[0] for row in vector] for vector in vectors]
    return column_space(field, from_columns(field, flat, size))


def equal(a: DomainMatrix, b: DomainMatrix) -> bool:
    """ Entrywise equality, independent of the internal storage format. """
    return a.shape == b.shape and entries(a) == entries(b)
