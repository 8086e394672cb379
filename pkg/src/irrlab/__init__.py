"""Graph irregularity laboratory.

Exact irregularity and Zagreb-type indices computed directly from graph
structure, exhaustive enumerators for labeled trees and graphs, transcribed
closed-form claims for caterpillar-like families, and a verification engine
that adjudicates every claim against direct computation.
"""

from ._version import __version__
from .backend import BACKEND_NAME, available_backends
from .generators import (
    all_graphs,
    all_labeled_trees,
    caterpillar_from_spine,
    caterpillar_uniform,
    complete_bipartite,
    double_star,
    path,
    prufer_decode,
    prufer_encode,
    star,
)
from .graph import EdgeListParseError, Graph, format_edge_list, parse_edge_list
from .indices import (
    IndexBundle,
    SpectralConvergenceError,
    albertson_irr,
    cs_irregularity,
    compute_bundle,
    max_edges,
    sigma,
    spectral_radius,
    szekeres_wilf,
    total_irregularity,
    total_sigma,
    zagreb_m1,
    zagreb_m2,
)
from .verify import Report, VerifyConfig, extremal_trees, run_all, table1_exact, table1_rows

__all__ = [
    "BACKEND_NAME",
    "EdgeListParseError",
    "Graph",
    "IndexBundle",
    "Report",
    "SpectralConvergenceError",
    "VerifyConfig",
    "__version__",
    "albertson_irr",
    "all_graphs",
    "all_labeled_trees",
    "available_backends",
    "caterpillar_from_spine",
    "caterpillar_uniform",
    "complete_bipartite",
    "compute_bundle",
    "cs_irregularity",
    "double_star",
    "extremal_trees",
    "format_edge_list",
    "max_edges",
    "parse_edge_list",
    "path",
    "prufer_decode",
    "prufer_encode",
    "run_all",
    "sigma",
    "spectral_radius",
    "star",
    "szekeres_wilf",
    "table1_exact",
    "table1_rows",
    "total_irregularity",
    "total_sigma",
    "zagreb_m1",
    "zagreb_m2",
]
