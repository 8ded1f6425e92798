"""Exact flow-polynomial toolkit for small multigraphs.

Integer-coefficient flow and chromatic polynomials via memoized
deletion-contraction, exact real-root analysis through Sturm chains,
mechanical audits of a family of coefficient and root-location claims, and
exhaustive searches over small multigraph families.
"""

from .audits import (
    FAIL,
    INCONCLUSIVE,
    NOT_APPLICABLE,
    PASS,
    AuditRecord,
    AuditReport,
    Classification,
    Invariants,
    XiTable,
    audit_graph,
    audit_le00,
    audit_le1,
    audit_lem30,
    audit_main_theorems,
    audit_wakelin,
    classify,
    compute_invariants,
    is_exceptional,
    nroot,
    nroot_from_formula,
    report_to_dict,
    report_to_json,
    xi_table,
)
from .enumeration import (
    connected_simple_graphs,
    enumerate_multigraphs,
    graph_automorphisms,
    labeled_multigraph_bound,
)
from .flow import (
    ReductionTrace,
    TraceNode,
    build_H_s,
    chromatic_poly,
    count_flows_oracle,
    falling_factorial,
    flow_poly,
    flow_poly_naive,
    flow_poly_traced,
    replay_trace,
    trace_lines,
)
from .multigraph import (
    EdgeCut,
    FaceStructure,
    MultiGraph,
    articulation_points,
    blocks,
    bridges,
    build_dual,
    canonical_code,
    components,
    contract_edge,
    delete_edge,
    edge_cuts,
    format_edge_list,
    format_faces,
    is_3_edge_connected,
    is_chordal,
    is_connected,
    is_nonseparable,
    isomorphic,
    parse_edge_list,
    parse_faces,
    simplify,
    validate_faces,
    vertex_incidence_faces,
)
from .polyalg import (
    ExactDivisionError,
    IntPoly,
    RootProfile,
    SturmChain,
    cauchy_bound,
    exact_divide,
    isolate_root_of_cubic,
    isolate_single_root,
    newton_check,
    poly_from_json,
    poly_gcd,
    poly_to_json,
    root_profile,
    squarefree_decomposition,
    squarefree_part,
    sturm_count,
)
from .search import (
    FILTER_NAMES,
    SearchConfig,
    SearchSummary,
    SweepResult,
    expected_g0_codes,
    run_search,
    run_sweep,
)

__version__ = "0.1.0"
