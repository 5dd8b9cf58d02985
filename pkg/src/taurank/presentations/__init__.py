from taurank.modules.decomposition import ProjDecomp
from .certificates import dimension_bound
from .certificates import shrunk_subspace
from .certificates import ShrunkSubspace
from .complex import direct_sum_complex
from .complex import direct_sum_of_complexes
from .complex import min_presentation
from .complex import TwoComplex
from .generic_rank import generic_rank
from .generic_rank import GenericRank
from .generic_rank import symbolic_rank
from .reduction import reduce_presentation
from .reduction import ReducedComplex
from .scan import additivity_scan
from .scan import RankScanReport

__all__ = (
    'GenericRank',
    'ProjDecomp',
    'RankScanReport',
    'ReducedComplex',
    'ShrunkSubspace',
    'TwoComplex',
    'additivity_scan',
    'dimension_bound',
    'direct_sum_complex',
    'direct_sum_of_complexes',
    'generic_rank',
    'min_presentation',
    'reduce_presentation',
    'shrunk_subspace',
    'symbolic_rank',
)
