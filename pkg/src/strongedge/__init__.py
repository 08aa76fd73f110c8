"""Strong edge-coloring of 2-degenerate graphs with a dual palette.

The coloring engine guarantees at most 8*delta - 4 colors (two palette
halves of 4*delta - 2 each); an independent verifier, an exact
branch-and-bound oracle, and seeded generators make every claim
machine-checkable.
"""

from .coloring import (
    BASE,
    PRIMED,
    CountingBoundError,
    DegreeTooHighError,
    EdgeColoring,
    NoColorAvailableError,
    NotBColoredError,
    NotPendantError,
    PaletteColor,
    RunStats,
    color_base_case,
    coloring_from_dict,
    coloring_to_dict,
    coloring_to_json,
    extend_pendant,
    extend_spokes,
    prime_pendant,
    strong_color,
)
from .generators import (
    BadParameterError,
    GenSpec,
    complete_bipartite_2m,
    cycle_graph,
    family_names,
    generate,
    path_graph,
    random_tree,
    random_two_degenerate,
    star_graph,
    triangle_with_leaves,
)
from .graph import (
    DuplicateEdgeError,
    Graph,
    SelfLoopError,
    VertexOutOfRangeError,
    build_graph,
    degeneracy_peel_order,
    edges_within_distance_one,
    format_edge_list,
    is_two_degenerate,
    max_degree,
    parse_edge_list,
    square_of_line_graph,
)
from .oracle import OracleResult, clique_lower_bound, exact_chi_s, greedy_upper_bound
from .reduction import (
    NotTwoDegenerateError,
    PendantRemoval,
    PreconditionError,
    ReductionSchedule,
    SpokeRemoval,
    build_schedule,
    classify_center,
    find_reducible_vertex,
    format_step,
)
from .verify import (
    PartialColoringError,
    Verdict,
    Violation,
    merge_verdicts,
    verify_all,
    verify_bound,
    verify_strong,
    verify_theorem_properties,
)

__all__ = [name for name in dir() if not name.startswith("_")]
