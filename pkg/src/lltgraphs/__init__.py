"""Exact arithmetic for horizontal-strip polynomials, the weighted interval
graphs that control them, ribbon and chromatic relatives, and batch
verification of the graph-determines-polynomial property."""

__version__ = "0.1.0"

from .compositions import (
    coarsening_multiset,
    coarsenings,
    compose,
    compositions_of,
    concat,
    format_composition,
    multiset_equal,
    near_concat,
    parse_composition,
)
from .qsymfunc import BasisExpansion, QPoly, SymFunc, eval_basis, ribbon, to_basis
from .strips import (
    HorizontalStrip,
    Row,
    commute_swap,
    commutes,
    cycle,
    dc_triple,
    format_strip,
    hl_strip,
    m_ij,
    n_lambda,
    parse_strip,
    prec,
    rotate,
    strip_compose,
    strip_concat,
    strip_near_concat,
    strip_of_composition,
    total_edge_weight,
    translate,
)
from .llt import gamma_graph, inversions, llt_poly, two_row_schur
from .wgraph import (
    WeightedGraph,
    canonical_form,
    is_isomorphic,
    llt_of_graph,
    pi_graph,
    predict_dc_graphs,
    realize,
)
from .chromatic import (
    VertexWeightedGraph,
    chrom_quasisym,
    extended_chromatic,
    path_graph,
    path_llt_h_expansion,
    path_p_expansion,
    verify_plethysm_bridge,
)
from .structure import (
    NoncommutingPath,
    apply_move,
    apply_moves,
    find_minimal_ncp,
    is_nesting,
    is_strict_pair,
    local_rotate,
    similarity_witness,
    strict_pairs,
    strict_sequences,
)

__all__ = [
    "__version__",
    "BasisExpansion",
    "HorizontalStrip",
    "NoncommutingPath",
    "QPoly",
    "Row",
    "SymFunc",
    "VertexWeightedGraph",
    "WeightedGraph",
    "apply_move",
    "apply_moves",
    "canonical_form",
    "chrom_quasisym",
    "coarsening_multiset",
    "coarsenings",
    "commute_swap",
    "commutes",
    "compose",
    "compositions_of",
    "concat",
    "cycle",
    "dc_triple",
    "eval_basis",
    "extended_chromatic",
    "find_minimal_ncp",
    "format_composition",
    "format_strip",
    "gamma_graph",
    "hl_strip",
    "inversions",
    "is_isomorphic",
    "is_nesting",
    "is_strict_pair",
    "llt_of_graph",
    "llt_poly",
    "local_rotate",
    "m_ij",
    "multiset_equal",
    "n_lambda",
    "near_concat",
    "parse_composition",
    "parse_strip",
    "path_graph",
    "path_llt_h_expansion",
    "path_p_expansion",
    "pi_graph",
    "prec",
    "predict_dc_graphs",
    "realize",
    "ribbon",
    "rotate",
    "similarity_witness",
    "strict_pairs",
    "strict_sequences",
    "strip_compose",
    "strip_concat",
    "strip_near_concat",
    "strip_of_composition",
    "to_basis",
    "total_edge_weight",
    "translate",
    "two_row_schur",
    "verify_plethysm_bridge",
]
