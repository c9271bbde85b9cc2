"""Wiener index bounds for k-connected graphs, checked exactly.

Harary graph construction, BFS distance invariants, vertex connectivity by
max-flow, closed forms and upper bounds in exact rationals, and an
exhaustive search over small labeled graphs that checks the bounds.
"""

__version__ = "0.1.0"

from .connectivity import VertexCut, is_k_connected, local_connectivity, vertex_connectivity
from .errors import (
    DisconnectedGraphError,
    GraphError,
    ParameterError,
    ParseError,
    TheoremViolation,
)
from .formulas import (
    BoundReport,
    HararyClosedForm,
    bound_report,
    compare_mean_distance,
    diameter_bound,
    harary_closed_form,
    mean_distance_bound,
    status_bound,
    verify_closed_forms,
    wiener_bound,
)
from .graph import (
    DistanceRow,
    Graph,
    LayerProfile,
    add_edge,
    bfs_distances,
    complete_graph,
    cycle_graph,
    diameter,
    eccentricity,
    is_connected,
    layer_profile,
    path_graph,
    status,
    statuses,
    wiener,
)
from .harary import HararyCase, HararySpec, harary, harary_spec
