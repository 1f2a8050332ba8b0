"""Interval total colorings of complete multipartite graphs and hypercubes."""

from .bounds import (
    Bound,
    SpanResult,
    chi_tt_balanced_multipartite,
    chi_tt_complete,
    chi_tt_complete_bipartite,
    chi_tt_hypercube,
    span_table,
    theorem9_certificate,
)
from .coloring import (
    EdgeColoring,
    TotalColoring,
    VerificationReport,
    Violation,
    coloring_from_json,
    coloring_to_json,
    palette_of,
    read_coloring,
    verify_interval_edge,
    verify_interval_total,
    verify_total_proper,
    write_coloring,
)
from .constructions import (
    alpha_knn,
    hypercube_total_coloring,
    knn_base_coloring,
    theorem8_coloring,
    theorem10_coloring,
    theorem11_case1_coloring,
    theorem11_case2_coloring,
    theorem11_coloring,
    theorem12_lift,
)
from .errors import InvalidArgument, ResourceExhausted, UnsupportedParameters
from .export import export_dot
from .graph import (
    Graph,
    complete_balanced_multipartite,
    complete_bipartite,
    complete_graph,
    from_edgelist,
    hypercube,
    read_edgelist,
    split_hypercube,
    to_edgelist,
    write_edgelist,
)
from .search import SearchConfig, SearchOutcome, decide_interval_total, max_span, min_span, spectrum

__version__ = "0.1.0"
