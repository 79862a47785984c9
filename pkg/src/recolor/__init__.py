"""Randomized graph coloring with replayable conflict records.

The package colors edges acyclically (every cycle sees at least three
colors) and vertices star-wise (proper, with no two-colored path on 2k
vertices) using rank-driven local search.  Each run emits a record from
which the exact random choices can be reconstructed, and the counting
side of the package (constrained word counts, characteristic growth
rates) turns those records into palette-size and step-count bounds.
"""
from .acyclic import (
    AcyclicVerdict,
    PartialColoring,
    ReconstructionError,
    RunConfig,
    RunOutcome,
    available_colors,
    decode_cycle,
    encode_cycle,
    find_bicolored_cycle,
    make_run_config,
    reconstruct_inputs,
    run,
    step,
    verify_acyclic,
    verify_partial_acyclic,
)
from .bounds import (
    CharacteristicSolution,
    ConfigurationFamily,
    FrameworkBound,
    InadmissibleDescentSetError,
    acyclic_color_bound,
    acyclic_edge_coloring_family,
    descent_set_for_girth,
    expected_steps_bound,
    expected_steps_t0,
    framework_bound,
    nonrepetitive_coloring_family,
    solve_characteristic,
    star_color_bound,
    star_coloring_family,
)
from .descents import DescentSet, DescentSetError
from .dyck import (
    count_dyck,
    count_dyck_lagrange,
    count_dyck_series,
    count_partial_dyck,
    enumerate_dyck,
    growth_estimate,
    growth_ratio,
)
from .graphs import (
    Graph,
    GraphFormatError,
    GraphStats,
    compute_stats,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    dump_dimacs,
    dump_edge_list,
    generate_graph,
    load_graph,
    path_graph,
    random_graph_max_degree,
)
from .records import (
    CycleConflict,
    DescentVerdict,
    RecordError,
    check_descents,
    descent_lengths,
    expand_entry,
    expand_record,
    is_partial_dyck,
    pad_to_full,
    parse_record_word,
    record_star_view,
    theta,
    theta_inverse,
    to_dyck,
)
from .star import (
    PathConflict,
    StarConfig,
    StarOutcome,
    StarReconstructionError,
    StarVerdict,
    decode_path,
    encode_path,
    find_bicolored_path,
    make_star_config,
    reconstruct_star_inputs,
    retained_pair,
    run_star,
    verify_partial_star,
    verify_star_k,
)

__version__ = "1.0.0"

__all__ = [
    "AcyclicVerdict",
    "CharacteristicSolution",
    "ConfigurationFamily",
    "CycleConflict",
    "DescentSet",
    "DescentSetError",
    "DescentVerdict",
    "FrameworkBound",
    "Graph",
    "GraphFormatError",
    "GraphStats",
    "InadmissibleDescentSetError",
    "PartialColoring",
    "PathConflict",
    "ReconstructionError",
    "RecordError",
    "RunConfig",
    "RunOutcome",
    "StarConfig",
    "StarOutcome",
    "StarReconstructionError",
    "StarVerdict",
    "acyclic_color_bound",
    "acyclic_edge_coloring_family",
    "available_colors",
    "check_descents",
    "complete_bipartite_graph",
    "complete_graph",
    "compute_stats",
    "count_dyck",
    "count_dyck_lagrange",
    "count_dyck_series",
    "count_partial_dyck",
    "cycle_graph",
    "decode_cycle",
    "decode_path",
    "descent_lengths",
    "descent_set_for_girth",
    "dump_dimacs",
    "dump_edge_list",
    "encode_cycle",
    "encode_path",
    "enumerate_dyck",
    "expand_entry",
    "expand_record",
    "expected_steps_bound",
    "expected_steps_t0",
    "find_bicolored_cycle",
    "find_bicolored_path",
    "framework_bound",
    "generate_graph",
    "growth_estimate",
    "growth_ratio",
    "is_partial_dyck",
    "load_graph",
    "make_run_config",
    "make_star_config",
    "nonrepetitive_coloring_family",
    "pad_to_full",
    "parse_record_word",
    "path_graph",
    "random_graph_max_degree",
    "reconstruct_inputs",
    "reconstruct_star_inputs",
    "retained_pair",
    "record_star_view",
    "run",
    "run_star",
    "solve_characteristic",
    "star_color_bound",
    "star_coloring_family",
    "step",
    "theta",
    "theta_inverse",
    "to_dyck",
    "verify_acyclic",
    "verify_partial_acyclic",
    "verify_partial_star",
    "verify_star_k",
]
