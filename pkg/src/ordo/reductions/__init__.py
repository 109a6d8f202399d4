"""Hardness constructions, witness builders and assignment extraction."""

from .base import CnfFormula, GadgetBuilder, GadgetInstance
from .independent_set import (
    gadget_independent_set,
    gadget_independent_set_negweight,
    graph_edges,
    has_independent_set,
    symmetric_digraph,
)
from .nae import (
    assignment_from_matching_nae,
    gadget_nae3sat_matching,
    gadget_nae3sat_perfect_matching,
    is_minimal_feedback_arc_set,
    order_from_feedback_set,
    witness_matching_nae,
    witness_perfect_matching_nae,
)
from .structural import (
    gadget_1distance,
    gadget_distance_lift,
    gadget_hampath_split,
    gadget_matching_to_dipaths,
    gadget_split_arcs,
)
from .xsat import (
    assignment_from_order_3xsat3,
    check_3xsat3_shape,
    gadget_3xsat3,
    satisfies_bounds,
    witness_order_3xsat3,
)

__all__ = [
    "CnfFormula",
    "GadgetBuilder",
    "GadgetInstance",
    "assignment_from_matching_nae",
    "assignment_from_order_3xsat3",
    "check_3xsat3_shape",
    "gadget_1distance",
    "gadget_3xsat3",
    "gadget_distance_lift",
    "gadget_hampath_split",
    "gadget_independent_set",
    "gadget_independent_set_negweight",
    "gadget_matching_to_dipaths",
    "gadget_nae3sat_matching",
    "gadget_nae3sat_perfect_matching",
    "gadget_split_arcs",
    "graph_edges",
    "has_independent_set",
    "is_minimal_feedback_arc_set",
    "order_from_feedback_set",
    "satisfies_bounds",
    "symmetric_digraph",
    "witness_matching_nae",
    "witness_perfect_matching_nae",
    "witness_order_3xsat3",
]
