"""Odd/even intersection structure of set families over GF(2).

Constructions with few odd-intersecting pairs, exact odd-pair counts,
independent-layer peeling, bound evaluation in exact arithmetic, exhaustive
minimum searches, and Fourier-side concentration checks.
"""

from __future__ import annotations

from .bounds import (
    BOUND_NAMES,
    BoundReport,
    check_bound,
    eventown_density_bounds,
    eventown_lower_bound,
    eventown_window_ok,
    oddtown_asymptotic_mo,
    oddtown_large_s_main_term,
    oddtown_lower_bound,
    oddtown_peeling_bound,
    turan_bound,
    y_size_bound,
)
from .constructions import (
    build_as_extended,
    build_as_family,
    build_eventown_blocks,
    build_eventown_mixed,
    build_full_even_family,
    build_oneill_oddtown,
    build_product_family,
    full_even_edge_count,
)
from .decomposition import (
    NeighborhoodDiagnostic,
    PeelingTrace,
    greedy_peeling,
    maximum_independent_indices,
    maximum_independent_subfamily,
    neighborhood_diagnostic,
)
from .exact import isqrt_bracket, nth_root_floor, pow2_bracket, pow2_ceil
from .family import (
    OddPairGraph,
    SetFamily,
    bipartite_edge_count,
    build_odd_pair_graph,
    format_family,
    induced_subgraph_edge_count,
    op_count,
    parse_family,
    read_family,
    write_family,
)
from .gf2 import (
    Gf2Subspace,
    SetVector,
    inner_product,
    orthogonal_complement,
    set_parity,
    span,
    subspace_intersection,
    subspace_sum,
)
from .report import Report, csv_header, emit_report, parse_report
from .search import (
    SearchResult,
    max_eventown_size,
    max_oddtown_size,
    min_op_exhaustive,
    min_op_with_canonical_pruning,
    resolve_budget,
)
from .spectral import (
    DensityFloor,
    FourierDiagnostic,
    character_value,
    concentration_check,
    density_floor,
    fourier_spectrum,
    indicator_fourier_coefficient,
)

__version__ = "0.1.0"

__all__ = [
    "BOUND_NAMES",
    "BoundReport",
    "DensityFloor",
    "FourierDiagnostic",
    "Gf2Subspace",
    "NeighborhoodDiagnostic",
    "OddPairGraph",
    "PeelingTrace",
    "Report",
    "SearchResult",
    "SetFamily",
    "SetVector",
    "bipartite_edge_count",
    "build_as_extended",
    "build_as_family",
    "build_eventown_blocks",
    "build_eventown_mixed",
    "build_full_even_family",
    "build_odd_pair_graph",
    "build_oneill_oddtown",
    "build_product_family",
    "character_value",
    "check_bound",
    "concentration_check",
    "csv_header",
    "density_floor",
    "emit_report",
    "eventown_density_bounds",
    "eventown_lower_bound",
    "eventown_window_ok",
    "format_family",
    "fourier_spectrum",
    "full_even_edge_count",
    "greedy_peeling",
    "indicator_fourier_coefficient",
    "induced_subgraph_edge_count",
    "inner_product",
    "isqrt_bracket",
    "max_eventown_size",
    "max_oddtown_size",
    "maximum_independent_indices",
    "maximum_independent_subfamily",
    "min_op_exhaustive",
    "min_op_with_canonical_pruning",
    "neighborhood_diagnostic",
    "nth_root_floor",
    "oddtown_asymptotic_mo",
    "oddtown_large_s_main_term",
    "oddtown_lower_bound",
    "oddtown_peeling_bound",
    "op_count",
    "orthogonal_complement",
    "parse_family",
    "parse_report",
    "pow2_bracket",
    "pow2_ceil",
    "read_family",
    "resolve_budget",
    "set_parity",
    "span",
    "subspace_intersection",
    "subspace_sum",
    "turan_bound",
    "write_family",
    "y_size_bound",
]
