import json
import logging

from taurank.algebra.algebra import algebra_from_parsed
from taurank.algebra.ideal import ideal_from_text
from taurank.algebra.parser import parse_quiver_file
from taurank.exceptions import ShapeMismatchError
from taurank.modules.decomposition import ProjDecomp


from typing import Any
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.algebra.algebra import Algebra
    from taurank.algebra.ideal import Ideal
    from taurank.linalg.field import Field


logger = logging.getLogger(__name__)


def read_text(path: str) -> str:
    with open(path, encoding='utf-8') as f:
        return f.read()


def load_algebra(
    path:    str,
    field:   'Field | None' = None,
    max_len: int = 30
) -> 'Algebra':
    algebra = algebra_from_parsed(
        parse_quiver_file(read_text(path)), field, max_len
    )
    logger.info('loaded %r from %s', algebra, path)
    return algebra


def load_ideal(algebra: 'Algebra', path: str) -> 'Ideal':
    return ideal_from_text(algebra, read_text(path))


def parse_multiplicities(value: str, algebra: 'Algebra') -> ProjDecomp:
    """ ``1,0,2`` as ``P(1) ⊕ P(3)^2``. """
    try:
        multiplicities = tuple(int(m) for m in value.split(','))
    except ValueError:
        raise ShapeMismatchError(
            f'multiplicities must be comma separated integers: {value}'
        ) from None
    if any(m < 0 for m in multiplicities):
        raise ShapeMismatchError(f'negative multiplicity in {value}')
    if len(multiplicities) != algebra.vertex_count:
        raise ShapeMismatchError(
            f'{value} has {len(multiplicities)} entries for '
            f'{algebra.vertex_count} vertices'
        )
    return ProjDecomp(multiplicities)


def dump_json(data: Any) -> str:
    """ Stable output: equal reports give byte-identical text. """
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def format_dims(dims: 'tuple[int, ...] | list[int]') -> str:
    return '(' + ','.join(str(d) for d in dims) + ')'
