"""Existence and counting of complex vector bundles on CP^m from Chern classes.

Decides, by exact arbitrary-precision arithmetic, whether integers
(c_1, ..., c_n) occur as the Chern classes of a rank-n topological bundle
on a complex projective space, and how many isomorphism classes share
them.  The integrality conditions are evaluated through symmetric-function
identities (Newton power sums, Stirling expansion of binomial
coefficients of the Chern roots); a floating-point root-finding oracle
cross-checks the exact path.
"""

from .chern import (
    ChernPolynomial,
    ChernVector,
    dual,
    elementary_symmetric,
    from_line_bundles,
    total_chern,
    twist_by_line,
    whitney_sum,
)
from .enumeration import (
    CORANK_ONE,
    LINE_BUNDLE,
    STABLE_RANGE,
    UNSUPPORTED,
    BundleCount,
    SchwarzenbergerReport,
    check_schwarzenberger,
    count_bundles,
    exists_rank_n_on_cp_n_plus_1,
    reduce_stable,
)
from .kernels import backend_name
from .oracle import NumericRoots, binomial_sum_numeric, compare_exact_numeric, find_roots
from .symfun import PowerSums, binomial_sum, newton_power_sums, stirling_first

__version__ = "0.1.0"

__all__ = [
    "BundleCount",
    "ChernPolynomial",
    "ChernVector",
    "NumericRoots",
    "PowerSums",
    "SchwarzenbergerReport",
    "backend_name",
    "binomial_sum",
    "binomial_sum_numeric",
    "check_schwarzenberger",
    "compare_exact_numeric",
    "count_bundles",
    "dual",
    "elementary_symmetric",
    "exists_rank_n_on_cp_n_plus_1",
    "find_roots",
    "from_line_bundles",
    "newton_power_sums",
    "reduce_stable",
    "stirling_first",
    "total_chern",
    "twist_by_line",
    "whitney_sum",
    "CORANK_ONE",
    "LINE_BUNDLE",
    "STABLE_RANGE",
    "UNSUPPORTED",
]
