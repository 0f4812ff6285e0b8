"""Blowing down (-1)-curves: contraction, realizability and final curves."""

import logging
from typing import Dict, List, Set

from jsieve.exceptions import NotContractibleError, UnrealizableError
from jsieve.graph.canonical import canonical_key
from jsieve.graph.invariants import structure_violations
from jsieve.graph.moves import ORIGIN_KBAR, ORIGIN_SELF_INT, build_tree
from jsieve.models.tree import CurveTree, normalize_edge

logger = logging.getLogger(__name__)

_REALIZABLE_CACHE: Dict[bytes, bool] = {}
_CACHE_LIMIT = 200_000


def contraction_blocker(tree: CurveTree, v: int) -> str:
    """Why ``v`` cannot be contracted, or an empty string if it can."""
    vertex = tree.vertex(v)
    if vertex.is_origin:
        return "the origin is never contracted"
    if vertex.self_int != -1:
        return f"self-intersection is {vertex.self_int}, not -1"
    neighbors = tree.neighbors(v)
    if len(neighbors) == 1:
        (parent,) = neighbors
        if vertex.kbar != tree.kbar(parent) + 1:
            return f"leaf label {vertex.kbar} != parent label {tree.kbar(parent)} + 1"
        return ""
    if len(neighbors) == 2:
        expected = sum(tree.kbar(u) for u in neighbors)
        if vertex.kbar != expected:
            return f"label {vertex.kbar} != sum of neighbor labels {expected}"
        return ""
    return f"degree {len(neighbors)} is neither 1 nor 2"


def is_contractible(tree: CurveTree, v: int) -> bool:
    return not contraction_blocker(tree, v)


def contract(tree: CurveTree, v: int) -> CurveTree:
    """Blow down ``v``, undoing the point or edge blowup that created it."""
    blocker = contraction_blocker(tree, v)
    if blocker:
        raise NotContractibleError(v, blocker)
    neighbors = tree.neighbors(v)
    edges = {e for e in tree.edges if v not in e}
    if len(neighbors) == 2:
        edges.add(normalize_edge(*neighbors))
    vertices = [
        x.model_copy(update={"self_int": x.self_int + 1}) if x.id in neighbors else x
        for x in tree.vertices
        if x.id != v
    ]
    return build_tree(vertices, edges)


def contractible_vertices(tree: CurveTree) -> List[int]:
    return [v for v in tree.ids if is_contractible(tree, v)]


def _is_initial(tree: CurveTree) -> bool:
    if tree.size != 1:
        return False
    (only,) = tree.vertices
    return only.is_origin and only.kbar == ORIGIN_KBAR and only.self_int == ORIGIN_SELF_INT


def realizable(tree: CurveTree) -> bool:
    """True iff contractions reduce ``tree`` to the initial tree.

    Backtracks over contractible vertices, memoized on the canonical key.
    """
    if structure_violations(tree):
        return False
    key = canonical_key(tree)
    cached = _REALIZABLE_CACHE.get(key)
    if cached is not None:
        return cached
    if tree.size == 1:
        result = _is_initial(tree)
    else:
        result = any(realizable(contract(tree, v)) for v in contractible_vertices(tree))
    if len(_REALIZABLE_CACHE) >= _CACHE_LIMIT:
        _REALIZABLE_CACHE.clear()
    _REALIZABLE_CACHE[key] = result
    return result


def accelerated_finals(tree: CurveTree, creation_ordered: bool = False) -> Set[int]:
    """Vertices recognised as final from local label patterns.

    - created after every neighbor (only when ids are in creation order);
    - label >= 2 and no neighbor has a larger label;
    - label 1 with neighbor labels exactly [0] or [0, 1].
    """
    claimed = set()
    for vertex in tree.vertices:
        if vertex.is_origin:
            continue
        neighbors = tree.neighbors(vertex.id)
        labels = sorted(tree.kbar(u) for u in neighbors)
        if creation_ordered and neighbors and all(u < vertex.id for u in neighbors):
            claimed.add(vertex.id)
        elif vertex.kbar >= 2 and all(a <= vertex.kbar for a in labels):
            claimed.add(vertex.id)
        elif vertex.kbar == 1 and labels in ([0], [0, 1]):
            claimed.add(vertex.id)
    return claimed


def final_curves(
    tree: CurveTree, use_accelerators: bool = True, creation_ordered: bool = False
) -> Set[int]:
    """Curves that can be blown up last in some construction of ``tree``.

    A vertex is final iff it is contractible and the contracted tree is still
    realizable; the local label patterns of ``accelerated_finals`` short-cut
    that test where they apply.
    """
    if not realizable(tree):
        raise UnrealizableError("final curves are only defined for realizable trees")
    claimed = accelerated_finals(tree, creation_ordered) if use_accelerators else set()
    finals = set(claimed)
    for v in contractible_vertices(tree):
        if v not in finals and realizable(contract(tree, v)):
            finals.add(v)
    return finals
