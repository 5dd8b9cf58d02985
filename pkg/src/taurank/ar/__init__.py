from .hierarchy import hierarchy_report
from .hierarchy import HierarchyReport
from .invariants import ar_formula_check
from .invariants import ar_formula_check_dual
from .invariants import e_invariant
from .invariants import is_rigid
from .invariants import is_tau_rigid
from .invariants import self_ext_dim
from .invariants import stable_hom_dim_inj
from .invariants import stable_hom_dim_proj
from .nakayama import nakayama_complex
from .reduction import reduce_and_compare
from .reduction import ReductionReport
from .reduction import search_reduction
from .reduction import transport
from .regularity import is_tau_regular
from .regularity import power_scan
from .translate import tau
from .translate import tau_minus
from .verdict import Outcome
from .verdict import Verdict

__all__ = (
    'HierarchyReport',
    'Outcome',
    'ReductionReport',
    'Verdict',
    'ar_formula_check',
    'ar_formula_check_dual',
    'e_invariant',
    'hierarchy_report',
    'is_rigid',
    'is_tau_regular',
    'is_tau_rigid',
    'nakayama_complex',
    'power_scan',
    'reduce_and_compare',
    'search_reduction',
    'self_ext_dim',
    'stable_hom_dim_inj',
    'stable_hom_dim_proj',
    'tau',
    'tau_minus',
    'transport',
)
