"""Curve-type assignments and the structural rules they must satisfy.

Rule ids:

- C1  the origin is type 2
- C2  type 1 has a negative even label
- C3  type 3 has a positive label
- C4  types 1 and 2 form a connected subtree holding the origin and every
      negative label
- C5  no two type-1 curves are adjacent
- C6  a type-3 curve has exactly one type-2 neighbor, no type-1 neighbor,
      and beyond it only a simple chain of type-4 curves
- C7  type-4 curves only occur in such chains
- C8  every final curve is type 1 or type 3
- C9  type-1 curves are leaves
- C10 some curve is type 3
- C11 some curve is type 1 (can be switched off)
"""

import logging
from typing import Dict, Iterable, List, Optional, Set

from jsieve.exceptions import PartialAssignmentError, UnknownVertexError
from jsieve.graph.contraction import final_curves
from jsieve.graph.invariants import connected_components
from jsieve.models.assignment import CurveType, TypeAssignment, Violation
from jsieve.models.tree import CurveTree

logger = logging.getLogger(__name__)

T1 = CurveType.ONTO_INFINITY
T2 = CurveType.POINT_AT_INFINITY
T3 = CurveType.AFFINE_CURVE
T4 = CurveType.AFFINE_POINT


def _require_total(tree: CurveTree, assignment: TypeAssignment) -> None:
    missing = set(tree.ids) - set(assignment.types)
    if missing:
        raise PartialAssignmentError(missing)
    extra = set(assignment.types) - set(tree.ids)
    if extra:
        raise UnknownVertexError(min(extra), "typed vertex is not in the tree")


def _chain_beyond(
    tree: CurveTree, types: Dict[int, CurveType], start: int, anchor: int
) -> List[Violation]:
    """C6 violations on the far side of type-3 vertex ``start``, walking away from ``anchor``."""
    violations = []
    prev, cur = anchor, start
    while True:
        onward = [w for w in tree.neighbors(cur) if w != prev]
        if len(onward) > 1:
            violations.append(
                Violation(
                    rule="C6",
                    vertices=(start, cur),
                    message=f"the far side of type-3 vertex {start} branches at {cur}",
                )
            )
            return violations
        if not onward:
            return violations
        prev, cur = cur, onward[0]
        if types[cur] != T4:
            violations.append(
                Violation(
                    rule="C6",
                    vertices=(start, cur),
                    message=f"vertex {cur} beyond type-3 vertex {start} has type {int(types[cur])}",
                )
            )
            return violations


def _chain_members(tree: CurveTree, start: int, anchor: int) -> Iterable[int]:
    prev, cur = anchor, start
    while True:
        onward = [w for w in tree.neighbors(cur) if w != prev]
        if len(onward) != 1:
            return
        prev, cur = cur, onward[0]
        yield cur


def assignment_violations(
    tree: CurveTree,
    assignment: TypeAssignment,
    finals: Set[int],
    allow_no_type1: bool = False,
) -> List[Violation]:
    """Every rule violation, given precomputed final curves."""
    types = assignment.types
    violations: List[Violation] = []

    def add(rule: str, vertices: Iterable[int], message: str) -> None:
        violations.append(Violation(rule=rule, vertices=tuple(vertices), message=message))

    origin = tree.origin.id
    if types[origin] != T2:
        add("C1", [origin], f"origin is typed {int(types[origin])}, not 2")

    for v in assignment.of_type(T1):
        a = tree.kbar(v)
        if a >= 0 or a % 2:
            add("C2", [v], f"type-1 vertex {v} has label {a}, not negative even")
        if tree.degree(v) != 1:
            add("C9", [v], f"type-1 vertex {v} has degree {tree.degree(v)}, not a leaf")

    for v in assignment.of_type(T3):
        if tree.kbar(v) <= 0:
            add("C3", [v], f"type-3 vertex {v} has non-positive label {tree.kbar(v)}")

    core = [v for v in tree.ids if types[v] in (T1, T2)]
    outside = [v.id for v in tree.vertices if v.kbar < 0 and types[v.id] not in (T1, T2)]
    if outside:
        add("C4", outside, f"negative-label vertices {outside} are not typed 1 or 2")
    if core and len(connected_components(tree, core)) > 1:
        add("C4", core, "type-1 and type-2 vertices do not form a connected subtree")

    for i, j in sorted(tree.edges):
        if types[i] == T1 and types[j] == T1:
            add("C5", [i, j], f"type-1 vertices {i} and {j} are adjacent")

    in_chain: Set[int] = set()
    for v in assignment.of_type(T3):
        nbrs = tree.neighbors(v)
        type2 = [u for u in nbrs if types[u] == T2]
        type1 = [u for u in nbrs if types[u] == T1]
        if type1:
            add("C6", [v, *type1], f"type-3 vertex {v} touches type-1 vertices {type1}")
        if len(type2) != 1:
            add("C6", [v, *type2], f"type-3 vertex {v} has {len(type2)} type-2 neighbors")
            continue
        violations.extend(_chain_beyond(tree, types, v, type2[0]))
        in_chain.update(_chain_members(tree, v, type2[0]))

    for v in assignment.of_type(T4):
        bad = [u for u in tree.neighbors(v) if types[u] in (T1, T2)]
        if bad:
            add("C7", [v, *bad], f"type-4 vertex {v} touches type-1/2 vertices {bad}")
        elif v not in in_chain:
            add("C7", [v], f"type-4 vertex {v} is not on a chain behind a type-3 vertex")

    for v in sorted(finals):
        if types[v] not in (T1, T3):
            add("C8", [v], f"final vertex {v} is typed {int(types[v])}, not 1 or 3")

    if not assignment.of_type(T3):
        add("C10", [], "no type-3 vertex")
    if not allow_no_type1 and not assignment.of_type(T1):
        add("C11", [], "no type-1 vertex")
    return violations


def check_assignment(
    tree: CurveTree,
    assignment: TypeAssignment,
    allow_no_type1: bool = False,
    finals: Optional[Set[int]] = None,
) -> List[Violation]:
    """Validate a total type assignment against C1-C11."""
    _require_total(tree, assignment)
    if finals is None:
        finals = final_curves(tree)
    return assignment_violations(tree, assignment, finals, allow_no_type1)


def _domains(tree: CurveTree, finals: Set[int]) -> Optional[Dict[int, List[CurveType]]]:
    """Types each vertex may take without breaking a single-vertex rule."""
    domains = {}
    for vertex in tree.vertices:
        a = vertex.kbar
        negative_even = a < 0 and a % 2 == 0
        if vertex.is_origin:
            options = [T2]
        elif vertex.id in finals:
            options = [T1] if negative_even else [T3] if a > 0 else []
            if options == [T1] and tree.degree(vertex.id) != 1:
                options = []
        else:
            options = [T2]
            if negative_even and tree.degree(vertex.id) == 1:
                options.insert(0, T1)
            if a > 0:
                options += [T3, T4]
            elif a == 0:
                options.append(T4)
        if not options:
            logger.debug(f"Vertex {vertex.id} (label {a}) admits no type")
            return None
        domains[vertex.id] = options
    return domains


# Pairs of types that may never be adjacent (C5, C6, C7)
_FORBIDDEN_NEIGHBORS = {
    (T1, T1),
    (T1, T3),
    (T1, T4),
    (T2, T4),
}


def _compatible(a: CurveType, b: CurveType) -> bool:
    return (a, b) not in _FORBIDDEN_NEIGHBORS and (b, a) not in _FORBIDDEN_NEIGHBORS


def admissible_assignments(
    tree: CurveTree, allow_no_type1: bool = False
) -> List[TypeAssignment]:
    """All total assignments passing ``check_assignment``, in signature order."""
    finals = final_curves(tree)
    domains = _domains(tree, finals)
    if domains is None:
        return []

    order = list(tree.ids)
    chosen: Dict[int, CurveType] = {}
    results: List[TypeAssignment] = []

    def extend(k: int) -> None:
        if k == len(order):
            candidate = TypeAssignment(types=dict(chosen))
            if not assignment_violations(tree, candidate, finals, allow_no_type1):
                results.append(candidate)
            return
        v = order[k]
        for option in domains[v]:
            if all(_compatible(option, chosen[u]) for u in tree.neighbors(v) if u in chosen):
                chosen[v] = option
                extend(k + 1)
                del chosen[v]

    extend(0)
    results.sort(key=TypeAssignment.signature)
    return results
