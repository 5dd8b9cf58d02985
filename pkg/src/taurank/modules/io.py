"""
Reading and writing ``.mod.json`` module files.

A module file is a JSON object::

    {
        "algebra": "alg_b.qa",
        "dim": [0, 1, 1],
        "arrows": {"a": [[...]], "b": [[1]]}
    }

Matrix entries are integers or rational strings like ``"-1/2"``. Arrows
missing from ``arrows`` act as zero; unknown arrow names are an error.
"""
import json
import logging
from pathlib import Path

from taurank.exceptions import ModuleFileError
from taurank.linalg.matrix import from_rows
from taurank.linalg.matrix import zeros
from taurank.modules.representation import Representation


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.algebra.algebra import Algebra
    from taurank.types import JSONObject
    from taurank.types import JSONObject_ro


logger = logging.getLogger(__name__)


def module_from_json(
    algebra: 'Algebra',
    data:    'JSONObject_ro'
) -> Representation:
    """
    Builds and validates the representation described by ``data``.

    Raises :class:`ModuleFileError` for malformed content and
    :class:`RelationViolationError` if the matrices violate a relation.
    """
    if not isinstance(data, dict):
        raise ModuleFileError('a module file must contain a JSON object')
    dims = data.get('dim')
    if not isinstance(dims, list) \
            or not all(isinstance(d, int) and d >= 0 for d in dims):
        raise ModuleFileError('"dim" must be a list of non-negative ints')
    if len(dims) != algebra.vertex_count:
        raise ModuleFileError(
            f'"dim" has {len(dims)} entries for {algebra.vertex_count} '
            'vertices'
        )
    arrows = data.get('arrows', {})
    if not isinstance(arrows, dict):
        raise ModuleFileError('"arrows" must map arrow names to matrices')
    names = {arrow.name for arrow in algebra.arrows}
    for name in arrows:
        if name not in names:
            raise ModuleFileError(f'unknown arrow in module file: {name}')

    field = algebra.field
    maps = []
    for arrow in algebra.arrows:
        rows, cols = dims[arrow.target], dims[arrow.source]
        grid = arrows.get(arrow.name)
        if grid is None:
            maps.append(zeros(field, rows, cols))
            continue
        if not isinstance(grid, list) or len(grid) != rows:
            raise ModuleFileError(
                f'arrow {arrow.name} needs {rows} rows of {cols} entries'
            )
        try:
            converted = [
                [field.convert(value) for value in row] for row in grid
            ]
            maps.append(from_rows(field, converted, cols))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise ModuleFileError(f'arrow {arrow.name}: {exc}') from exc
    return Representation(algebra, dims, maps)


def load_module(algebra: 'Algebra', path: str | Path) -> Representation:
    try:
        with open(path, encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as exc:
        raise ModuleFileError(f'{path}: not valid JSON ({exc})') from exc
    logger.debug('loaded module file %s', path)
    return module_from_json(algebra, data)


def module_to_json(
    module:        Representation,
    algebra_path:  str | None = None
) -> 'JSONObject':
    data = module.describe()
    if algebra_path is not None:
        data['algebra'] = algebra_path
    return data


def dump_module(
    module:       Representation,
    path:         str | Path,
    algebra_path: str | None = None
) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(module_to_json(module, algebra_path), f, indent=2,
                  sort_keys=True)
        f.write('\n')
