"""
The example algebras shipped with the package, so the worked examples
run without any input files.
"""
from importlib import resources

from taurank.algebra.algebra import algebra_from_parsed
from taurank.algebra.parser import parse_quiver_file


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.algebra.algebra import Algebra
    from taurank.linalg.field import Field


FIXTURE_FILES = {
    'ALG-A': 'alg_a.qa',
    'ALG-B': 'alg_b.qa',
    'ALG-B0': 'alg_b0.qa',
    'ALG-C': 'alg_c.qa',
    'ALG-K': 'alg_k.qa',
}


def fixture_source(name: str) -> str:
    try:
        filename = FIXTURE_FILES[name]
    except KeyError:
        raise KeyError(f'unknown fixture: {name}') from None
    return resources.files(__name__).joinpath(filename).read_text('utf-8')


def load_fixture(
    name:    str,
    field:   'Field | None' = None,
    max_len: int = 30
) -> 'Algebra':
    return algebra_from_parsed(
        parse_quiver_file(fixture_source(name)), field, max_len
    )
