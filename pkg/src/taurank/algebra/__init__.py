from .algebra import Algebra
from .algebra import build_algebra
from .algebra import multiply
from .algebra import opposite_algebra
from .ideal import Ideal
from .ideal import ideal_from_text
from .ideal import intersect
from .ideal import quotient_algebra
from .ideal import QuotientMap
from .ideal import radical
from .parser import parse_quiver_file
from .quiver import Arrow
from .quiver import Path
from .quiver import Quiver
from .quiver import RelationPoly

__all__ = (
    'Algebra',
    'Arrow',
    'Ideal',
    'Path',
    'Quiver',
    'QuotientMap',
    'RelationPoly',
    'build_algebra',
    'ideal_from_text',
    'intersect',
    'multiply',
    'opposite_algebra',
    'parse_quiver_file',
    'quotient_algebra',
    'radical',
)
