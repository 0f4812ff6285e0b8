"""Bounded search for the correction class Delta.

Conditions on ``Delta = sum d_i E_i``:

- D1 ``d_i`` is a positive integer on type-2 curves and zero elsewhere;
- D2 Delta meets every type-2 curve non-positively;
- D3 Delta meets every type-1 curve exactly once;
- D4 on a type-3 curve Delta meets no more than L does;
- SLOPE the ratio ``d_v / L_v`` has no strict local minimum over the
  type-2 curves. Plateaus are allowed and curves with ``L_v = 0`` take no
  part in the comparison.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Set

from jsieve.exceptions import CapExhausted, JsieveError, PreconditionError
from jsieve.lattice import curve_pairings, rr_lower_bound
from jsieve.models.assignment import CurveType, TypeAssignment, Violation
from jsieve.models.divisor import DivisorClass
from jsieve.models.solutions import DeltaSolution
from jsieve.models.tree import CurveTree
from jsieve.solvers.l_solver import audit_L

logger = logging.getLogger(__name__)

SLOPE_RULE = "strict local minimum forbidden; plateaus allowed; L = 0 curves excluded"


def slope_profile(
    assignment: TypeAssignment, L: DivisorClass, Delta: DivisorClass
) -> Dict[int, Optional[Fraction]]:
    """``d_v / L_v`` on every type-2 vertex; ``None`` where ``L_v = 0``."""
    profile = {}
    for v in assignment.of_type(CurveType.POINT_AT_INFINITY):
        a = L.coefficient(v)
        profile[v] = None if a == 0 else Delta.coefficient(v) / a
    return profile


def _is_local_minimum(
    tree: CurveTree, assignment: TypeAssignment, profile: Dict[int, Optional[Fraction]], v: int
) -> bool:
    if profile.get(v) is None:
        return False
    others = [
        profile[u]
        for u in tree.neighbors(v)
        if assignment.type_of(u) == CurveType.POINT_AT_INFINITY and profile[u] is not None
    ]
    return bool(others) and all(profile[v] < r for r in others)


def slope_violations(
    tree: CurveTree, assignment: TypeAssignment, L: DivisorClass, Delta: DivisorClass
) -> List[Violation]:
    profile = slope_profile(assignment, L, Delta)
    return [
        Violation(
            rule="SLOPE", vertices=(v,), message=f"slope {profile[v]} at {v} is a local minimum"
        )
        for v in sorted(profile)
        if _is_local_minimum(tree, assignment, profile, v)
    ]


def audit_delta(
    tree: CurveTree, assignment: TypeAssignment, L: DivisorClass, Delta: DivisorClass
) -> List[Violation]:
    """Re-check D1-D4 and the slope rule for a supplied Delta."""
    violations = []
    type2 = set(assignment.of_type(CurveType.POINT_AT_INFINITY))
    for v in tree.ids:
        d = Delta.coefficient(v)
        if v in type2 and (d.denominator != 1 or d < 1):
            violations.append(
                Violation(rule="D1", vertices=(v,), message=f"coefficient {d} at type-2 vertex {v}")
            )
        elif v not in type2 and d != 0:
            violations.append(
                Violation(rule="D1", vertices=(v,), message=f"non-zero coefficient {d} off type 2")
            )
    for v in Delta.support:
        if v not in tree.by_id:
            violations.append(
                Violation(rule="D1", vertices=(v,), message=f"coefficient on unknown vertex {v}")
            )
    if any(rule.rule == "D1" for rule in violations):
        return violations

    delta_pairings = curve_pairings(tree, Delta)
    l_pairings = curve_pairings(tree, L)
    for v in sorted(type2):
        if delta_pairings[v] > 0:
            violations.append(
                Violation(
                    rule="D2", vertices=(v,), message=f"Delta . E_{v} = {delta_pairings[v]} > 0"
                )
            )
    for v in assignment.of_type(CurveType.ONTO_INFINITY):
        if delta_pairings[v] != 1:
            violations.append(
                Violation(
                    rule="D3",
                    vertices=(v,),
                    message=f"Delta . E_{v} = {delta_pairings[v]}, not 1",
                )
            )
    for v in assignment.of_type(CurveType.AFFINE_CURVE):
        if delta_pairings[v] > l_pairings[v]:
            violations.append(
                Violation(
                    rule="D4",
                    vertices=(v,),
                    message=(
                        f"Delta . E_{v} = {delta_pairings[v]} exceeds L . E_{v} = {l_pairings[v]}"
                    ),
                )
            )
    violations.extend(slope_violations(tree, assignment, L, Delta))
    return violations


class DeltaSearch:
    """Depth-first search over ``1 <= d_v <= cap`` on the type-2 vertices.

    Variables are taken in id order and values ascend, so solutions come out
    in lexicographic order. Every constraint is checked as soon as all the
    coefficients it reads are assigned; D2 is also pruned early with the
    lower bound ``d >= 1`` on unassigned neighbors.

    After ``run`` returns, ``saturated`` tells whether the coefficient cap cut
    off a branch that no constraint had ruled out, so solutions above the cap
    may exist even when none was found.
    """

    def __init__(
        self,
        tree: CurveTree,
        assignment: TypeAssignment,
        L: DivisorClass,
        cap: int = 64,
        result_cap: int = 128,
    ):
        self.tree = tree
        self.assignment = assignment
        self.L = L
        self.cap = cap
        self.result_cap = result_cap
        self.saturated = False
        self.capped: Set[int] = set()
        self.order = assignment.of_type(CurveType.POINT_AT_INFINITY)
        self.position = {v: k for k, v in enumerate(self.order)}
        self.l_pairings = curve_pairings(tree, L)

    def _type2_neighbors(self, v: int) -> List[int]:
        return [u for u in self.tree.neighbors(v) if u in self.position]

    def _upper_bounds(self) -> Optional[Dict[int, int]]:
        """Bounds from D3 and D4, clipped to the cap; ``None`` when some bound is below 1."""
        limits: Dict[int, int] = {}
        for e in self.assignment.of_type(CurveType.ONTO_INFINITY):
            for u in self._type2_neighbors(e):
                limits[u] = 1
        for e in self.assignment.of_type(CurveType.AFFINE_CURVE):
            nbrs = self._type2_neighbors(e)
            limit = int(self.l_pairings[e] - (len(nbrs) - 1))
            for u in nbrs:
                limits[u] = min(limits.get(u, limit), limit)
        if any(b < 1 for b in limits.values()):
            return None
        # only the cap bounds these
        self.capped = {v for v in self.order if limits.get(v, self.cap + 1) > self.cap}
        return {v: min(limits.get(v, self.cap), self.cap) for v in self.order}

    def _checks_at(self) -> Dict[int, List[int]]:
        """Vertices whose constraints become decidable once position k is assigned."""
        due: Dict[int, List[int]] = {k: [] for k in range(-1, len(self.order))}
        for v in self.tree.ids:
            positions = [self.position[u] for u in self._type2_neighbors(v)]
            if v in self.position:
                positions.append(self.position[v])
            due[max(positions, default=-1)].append(v)
        return due

    def _complete_ok(self, v: int, values: Dict[int, int]) -> bool:
        t = self.assignment.type_of(v)
        meet = sum(values[u] for u in self._type2_neighbors(v))
        if t == CurveType.POINT_AT_INFINITY:
            if values[v] * self.tree.self_int(v) + meet > 0:
                return False
            return not self._slope_minimum(v, values)
        if t == CurveType.ONTO_INFINITY:
            return meet == 1
        if t == CurveType.AFFINE_CURVE:
            return meet <= self.l_pairings[v]
        return True

    def _ratio(self, v: int, values: Dict[int, int]) -> Optional[Fraction]:
        a = self.L.coefficient(v)
        return None if a == 0 else Fraction(values[v]) / a

    def _slope_minimum(self, v: int, values: Dict[int, int]) -> bool:
        mine = self._ratio(v, values)
        if mine is None:
            return False
        others = [self._ratio(u, values) for u in self._type2_neighbors(v)]
        others = [r for r in others if r is not None]
        return bool(others) and all(mine < r for r in others)

    def _d2_hopeless(self, v: int, values: Dict[int, int]) -> bool:
        if v not in values:
            return False
        floor = values[v] * self.tree.self_int(v)
        for u in self._type2_neighbors(v):
            floor += values.get(u, 1)
        return floor > 0

    def _solution(self, values: Dict[int, int]) -> DeltaSolution:
        Delta = DivisorClass(coeffs=values)
        violations = audit_delta(self.tree, self.assignment, self.L, Delta)
        if violations:
            raise JsieveError(
                "Delta solution failed its self-audit", "; ".join(map(str, violations))
            )
        rr = rr_lower_bound(self.tree, self.L - Delta)
        return DeltaSolution(
            Delta=Delta,
            slope=slope_profile(self.assignment, self.L, Delta),
            rr_l_minus_delta=int(rr) if rr.denominator == 1 else None,
        )

    def run(self) -> List[DeltaSolution]:
        """Every Delta in the box, in lexicographic order.

        Raises:
            CapExhausted: More than ``result_cap`` solutions exist; the first
                ``result_cap`` are attached.
        """
        self.saturated = False
        bounds = self._upper_bounds()
        if bounds is None:
            return []
        due = self._checks_at()
        values: Dict[int, int] = {}
        if not all(self._complete_ok(v, values) for v in due[-1]):
            return []
        solutions: List[DeltaSolution] = []

        def extend(k: int) -> None:
            if k == len(self.order):
                if len(solutions) == self.result_cap:
                    raise CapExhausted(list(solutions))
                solutions.append(self._solution(dict(values)))
                return
            v = self.order[k]
            for value in range(1, bounds[v] + 1):
                values[v] = value
                at_cap = value == self.cap and v in self.capped
                if self._d2_hopeless(v, values):
                    # larger values only help when the self-intersection is negative
                    if self.tree.self_int(v) >= 0:
                        break
                    self.saturated |= at_cap
                    continue
                if any(self._d2_hopeless(u, values) for u in self._type2_neighbors(v)):
                    break
                if all(self._complete_ok(u, values) for u in due[k]):
                    self.saturated |= at_cap
                    extend(k + 1)
            values.pop(v, None)

        extend(0)
        if self.saturated:
            logger.warning(
                f"Delta search hit the coefficient cap {self.cap}; larger solutions unexplored"
            )
        return solutions


def solve_Delta(
    tree: CurveTree,
    assignment: TypeAssignment,
    L: DivisorClass,
    cap: int = 64,
    result_cap: int = 128,
) -> List[DeltaSolution]:
    """All Deltas for a solved L with coefficients up to ``cap``.

    Raises:
        PreconditionError: ``L`` does not satisfy its own conditions.
        CapExhausted: The result cap was reached.
    """
    violations = audit_L(tree, assignment, L, allow_negative=True)
    if violations:
        raise PreconditionError("L does not satisfy the L-conditions", violations)
    return DeltaSearch(tree, assignment, L, cap, result_cap).run()
