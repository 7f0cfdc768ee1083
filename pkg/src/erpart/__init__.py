"""Classify, enumerate and count e-relaxed r-complete partitions.

An (e, r)-partition of m is a partition whose r-cover (all sums
``a_0 l_0 + ... + a_n l_n`` with ``0 <= a_i <= r``) leaves no run of
``e + 1`` consecutive integers of ``[0, r*m]`` uncovered.  With ``e = 0`` and
``r = 2`` the minimal ones solve Bachet's weights problem: ``40 = 1+3+9+27``.
"""

from .count_all import (
    CountTable,
    a_index,
    build_table,
    count_all,
    count_all_via_series,
    count_with_parts_dp,
    phi_series,
)
from .count_min import (
    D_series,
    Dstar_series,
    F_series,
    G_series,
    R_series,
    R_series_base,
    R_series_closed,
    R_series_recursive,
    count_minimal,
    validity_order,
)
from .enumeration import (
    EnumConfig,
    count_minimal_brute,
    enumerate_all,
    integer_partitions,
    r_n_brute,
)
from .errors import (
    ErpartError,
    LimitExceeded,
    NonpositivePart,
    NotErPartition,
    OracleSizeExceeded,
    OrderExceeded,
    UnsupportedLevel,
)
from .partition_core import (
    CoverReport,
    MuVector,
    Params,
    Partition,
    canonical_minimal,
    cover_gap,
    is_er_partition,
    min_parts,
    mu_inverse,
    mu_transform,
    r_cover,
    satisfies_inequalities,
)
from .series import Series

__version__ = "0.1.0"

__all__ = [
    "CountTable",
    "CoverReport",
    "D_series",
    "Dstar_series",
    "EnumConfig",
    "ErpartError",
    "F_series",
    "G_series",
    "LimitExceeded",
    "MuVector",
    "NonpositivePart",
    "NotErPartition",
    "OracleSizeExceeded",
    "OrderExceeded",
    "Params",
    "Partition",
    "R_series",
    "R_series_base",
    "R_series_closed",
    "R_series_recursive",
    "Series",
    "UnsupportedLevel",
    "a_index",
    "build_table",
    "canonical_minimal",
    "count_all",
    "count_all_via_series",
    "count_minimal",
    "count_minimal_brute",
    "count_with_parts_dp",
    "cover_gap",
    "enumerate_all",
    "integer_partitions",
    "is_er_partition",
    "min_parts",
    "mu_inverse",
    "mu_transform",
    "phi_series",
    "r_cover",
    "r_n_brute",
    "satisfies_inequalities",
    "validity_order",
]
