"""Colouring number, col-criticality and double-col-criticality of small graphs."""
from ._backend import BACKEND
from .canon import are_isomorphic, canonical_form, canonical_graph, canonical_order
from .census import (
    CensusConstraints,
    CensusRow,
    census_col4_edge_bound,
    census_dcc5,
    enumerate_connected,
    find_ratio_threshold,
    property_sweep,
)
from .classifier import (
    ClaimViolation,
    CycleSquare,
    GluedBricks,
    NotApplicable,
    PreconditionError,
    check_decomposable_col_critical,
    classify_dcc5,
    join_col_bounds,
    verify_join_double_col_critical,
)
from .criticality import (
    CriticalityReport,
    criticality_report,
    double_col_critical_edges,
    is_col_critical,
    is_col_vertex_critical,
    is_double_col_critical,
)
from .degeneracy import (
    DegeneracyCertificate,
    col_critical_subgraph,
    colouring_number,
    colouring_number_bruteforce,
    colouring_number_subsets,
    degeneracy,
    degeneracy_ordering,
    max_min_degree_witness,
)
from .formats import FormatError, parse_edge_list, parse_graph6, to_edge_list, to_graph6
from .graph import Edge, Graph, GraphError, complete_join, from_edge_list, square
from .guards import GuardError

__version__ = "0.1.0"
