"""Curve-tree engine: blowups, invariants, contraction and final curves."""

from jsieve.graph.canonical import canonical_key, relabeled
from jsieve.graph.contraction import (
    accelerated_finals,
    contract,
    contractible_vertices,
    final_curves,
    is_contractible,
    realizable,
)
from jsieve.graph.invariants import (
    adjacent_large_labels,
    adjunction_self_int,
    check_invariants,
    connected_components,
)
from jsieve.graph.moves import (
    apply_step,
    blowup_edge,
    blowup_point,
    initial_tree,
    one_step_moves,
    replay,
)

__all__ = [
    "initial_tree",
    "blowup_point",
    "blowup_edge",
    "apply_step",
    "replay",
    "one_step_moves",
    "check_invariants",
    "adjunction_self_int",
    "adjacent_large_labels",
    "connected_components",
    "contract",
    "is_contractible",
    "contractible_vertices",
    "realizable",
    "final_curves",
    "accelerated_finals",
    "canonical_key",
    "relabeled",
]
