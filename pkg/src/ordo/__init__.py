"""Degree-bounded vertex orderings of digraphs."""

from .bounded import (
    solve_d_distance_large,
    solve_k_arc_disjoint_in_arbs,
    solve_lower,
    solve_minmax,
    solve_mixed_per_vertex,
    solve_upper,
    solve_upper_with_precedence,
)
from .digraph import (
    Arc,
    ArcFamilyKind,
    Digraph,
    classify_arc_set,
    degree_profile,
    find_cycle,
    induced_min_outdegree,
    is_acyclic,
    left_arcs,
    topological_order,
)
from .errors import OrdoError
from .families import (
    order_disjoint_dipaths_free_endpoints,
    order_hamiltonian_dipath,
    order_in_arb_out_arb,
    order_in_branching,
    order_k_disjoint_st_dipaths,
    partition_from_order,
)
from .results import ArcPartition, CutSet, DegreeDeficit, Feasible, Infeasible, InducedSet, StuckSet, SumMismatch
from .simultaneous import solve_exact, solve_out_lower_in_upper, solve_out_upper_in_lower

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcFamilyKind",
    "ArcPartition",
    "CutSet",
    "DegreeDeficit",
    "Digraph",
    "Feasible",
    "Infeasible",
    "InducedSet",
    "OrdoError",
    "StuckSet",
    "SumMismatch",
    "classify_arc_set",
    "degree_profile",
    "find_cycle",
    "induced_min_outdegree",
    "is_acyclic",
    "left_arcs",
    "order_disjoint_dipaths_free_endpoints",
    "order_hamiltonian_dipath",
    "order_in_arb_out_arb",
    "order_in_branching",
    "order_k_disjoint_st_dipaths",
    "partition_from_order",
    "solve_d_distance_large",
    "solve_exact",
    "solve_k_arc_disjoint_in_arbs",
    "solve_lower",
    "solve_minmax",
    "solve_mixed_per_vertex",
    "solve_out_lower_in_upper",
    "solve_out_upper_in_lower",
    "solve_upper",
    "solve_upper_with_precedence",
    "topological_order",
]
