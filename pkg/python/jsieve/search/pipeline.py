"""Candidate filter pipeline for a single tree.

Stages, in order: ``invariants``, ``realizable``, ``finals``, ``typing``,
``determinant``, ``L``, ``delta``, ``score``. A tree or (tree, assignment,
L) triple stops at the first stage it fails; L failures are counted under
``L:<reason>``.
"""

import logging
from collections import Counter
from typing import Dict, List, NamedTuple, Optional

from jsieve.curve_types import admissible_assignments
from jsieve.exceptions import CapExhausted, SolverError
from jsieve.graph.canonical import canonical_key
from jsieve.graph.contraction import final_curves, realizable
from jsieve.graph.invariants import check_invariants
from jsieve.lattice import canonical_class, determinant_labels, integral_rr_bound, pair
from jsieve.models.assignment import CurveType, TypeAssignment
from jsieve.models.config import RunConfig
from jsieve.models.reports import CandidateReport, FilterRecord, RejectedCandidate
from jsieve.models.script import BlowupScript
from jsieve.models.solutions import LSolution
from jsieve.models.tree import CurveTree
from jsieve.solvers.delta_solver import DeltaSearch
from jsieve.solvers.l_solver import solve_L_family

logger = logging.getLogger(__name__)

STAGES = ("invariants", "realizable", "finals", "typing", "determinant", "L", "delta", "score")


class PipelineResult(NamedTuple):
    reports: List[CandidateReport]
    rejections: Dict[str, int]
    rejected: List[RejectedCandidate]


class _Trace:
    """Collects rejections and, in verbose runs, their traces."""

    def __init__(self, key: str, verbose: bool):
        self.key = key
        self.verbose = verbose
        self.counts: Counter = Counter()
        self.rejected: List[RejectedCandidate] = []

    def reject(
        self,
        bucket: str,
        records: List[FilterRecord],
        assignment: Optional[TypeAssignment] = None,
    ) -> None:
        self.counts[bucket] += 1
        logger.debug(f"{self.key[:16]}: rejected at {bucket} ({records[-1].detail})")
        if self.verbose:
            self.rejected.append(
                RejectedCandidate(key=self.key, assignment=assignment, filter_trace=list(records))
            )


def _passed(stage: str, detail: Optional[str] = None) -> FilterRecord:
    return FilterRecord(stage=stage, passed=True, detail=detail)


def _failed(stage: str, detail: str) -> FilterRecord:
    return FilterRecord(stage=stage, passed=False, detail=detail)


def pipeline(
    tree: CurveTree,
    config: Optional[RunConfig] = None,
    script: Optional[BlowupScript] = None,
) -> PipelineResult:
    """Run every filter on ``tree`` and report the candidates that pass.

    Failures are data: nothing is raised for a rejected tree. Reports come
    out in assignment-signature order, then L coefficient order.
    """
    config = config or RunConfig()
    key = canonical_key(tree).hex()
    trace = _Trace(key, config.verbose_trace)
    reports: List[CandidateReport] = []
    records: List[FilterRecord] = []

    violations = check_invariants(tree)
    if violations:
        trace.reject("invariants", [_failed("invariants", "; ".join(map(str, violations)))])
        return PipelineResult(reports, dict(trace.counts), trace.rejected)
    records.append(_passed("invariants"))

    if not realizable(tree):
        trace.reject("realizable", records + [_failed("realizable", "no blowdown to the plane")])
        return PipelineResult(reports, dict(trace.counts), trace.rejected)
    records.append(_passed("realizable"))

    finals = final_curves(tree)
    if not finals:
        trace.reject("finals", records + [_failed("finals", "no final curves")])
        return PipelineResult(reports, dict(trace.counts), trace.rejected)
    records.append(_passed("finals", f"{sorted(finals)}"))

    assignments = admissible_assignments(tree, config.allow_no_type1)
    if not assignments:
        trace.reject("typing", records + [_failed("typing", "no admissible assignment")])
        return PipelineResult(reports, dict(trace.counts), trace.rejected)
    records.append(_passed("typing", f"{len(assignments)} admissible"))

    labels = determinant_labels(tree)
    for assignment in assignments:
        typed = records + [_passed("assignment", str(assignment.signature()))]
        bad = [v for v in assignment.of_type(CurveType.ONTO_INFINITY) if labels[v] >= 0]
        if bad:
            detail = f"type-1 vertices with non-negative labels {[(v, labels[v]) for v in bad]}"
            trace.reject("determinant", typed + [_failed("determinant", detail)], assignment)
            continue
        typed.append(_passed("determinant"))

        try:
            solutions = solve_L_family(
                tree,
                assignment,
                allow_negative=config.allow_negative_l,
                allow_no_type1=config.allow_no_type1,
                kernel_box=config.kernel_box,
            )
        except SolverError as e:
            trace.reject(f"L:{e.reason}", typed + [_failed("L", str(e))], assignment)
            continue

        for solution in solutions:
            report = _finish(tree, assignment, solution, config, typed, trace, key, script)
            if report is not None:
                reports.append(report)
    return PipelineResult(reports, dict(trace.counts), trace.rejected)


def _finish(
    tree: CurveTree,
    assignment: TypeAssignment,
    solution: LSolution,
    config: RunConfig,
    records: List[FilterRecord],
    trace: _Trace,
    key: str,
    script: Optional[BlowupScript],
) -> Optional[CandidateReport]:
    records = records + [_passed("L", f"kernel dimension {solution.kernel_dimension}")]
    L = solution.L
    search = DeltaSearch(tree, assignment, L, config.delta_cap, config.result_cap)
    truncated = False
    try:
        deltas = search.run()
    except CapExhausted as e:
        deltas, truncated = e.partial, True
        logger.warning(f"{key[:16]}: Delta result cap {config.result_cap} reached")
    if not deltas:
        detail = "no Delta in the box"
        if search.saturated:
            detail += f", coefficient cap {config.delta_cap} reached"
        trace.reject("delta", records + [_failed("delta", detail)], assignment)
        return None
    detail = f"{len(deltas)} solutions"
    if truncated:
        detail += ", result cap reached"
    if search.saturated:
        detail += f", coefficient cap {config.delta_cap} reached"
    records.append(_passed("delta", detail))

    rr = integral_rr_bound(tree, L)
    if rr < config.score_threshold:
        trace.reject("score", records + [_failed("score", f"rr bound {rr}")], assignment)
        return None
    records.append(_passed("score", f"rr bound {rr}"))
    return CandidateReport(
        key=key,
        script=script,
        tree=tree,
        assignment=assignment,
        L=solution,
        deltas=deltas,
        rr_bound=rr,
        l_squared=int(pair(tree, L, L)),
        l_dot_k=int(pair(tree, L, canonical_class(tree))),
        delta_truncated=truncated,
        filter_trace=records,
    )
