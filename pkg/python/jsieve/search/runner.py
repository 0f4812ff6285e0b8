"""Full search: enumeration times pipeline, with a run summary."""

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Tuple

from jsieve.exceptions import ResourceLimitError
from jsieve.graph.moves import replay
from jsieve.models.config import RunConfig
from jsieve.models.reports import CandidateReport, RejectedCandidate, RunSummary
from jsieve.models.script import BlowupScript
from jsieve.search.enumerate import Visit, enumerate_trees
from jsieve.search.pipeline import PipelineResult, pipeline
from jsieve.solvers.delta_solver import SLOPE_RULE

logger = logging.getLogger(__name__)


def interpretation(config: RunConfig) -> Dict[str, str]:
    """Rule readings in force for this run, as logged and written into the summary."""
    return {
        "slope": SLOPE_RULE,
        "l_sign": "negative L allowed" if config.allow_negative_l else "L non-negative",
        "type1": "type 1 optional" if config.allow_no_type1 else "at least one type-1 curve",
        "l_condition4": "L meets every type-2 curve trivially",
        "score": f"rr bound >= {config.score_threshold}",
    }


def _run_pipeline(args: Tuple[str, RunConfig]) -> PipelineResult:
    script_text, config = args
    script = BlowupScript.parse(script_text)
    return pipeline(replay(script), config, script)


class SearchResult:
    """Summary, reports and (verbose runs only) rejected candidates of a search."""

    def __init__(
        self,
        summary: RunSummary,
        reports: List[CandidateReport],
        rejected: Optional[List[RejectedCandidate]] = None,
    ):
        self.summary = summary
        self.reports = reports
        self.rejected = rejected or []

    def __iter__(self):
        # unpacks as (summary, reports)
        return iter((self.summary, self.reports))


def search(max_blowups: int, config: Optional[RunConfig] = None) -> SearchResult:
    """Enumerate every tree up to ``max_blowups`` and run the pipeline on each.

    The output does not depend on ``config.workers``: trees are visited in
    canonical-key order per depth and reports are sorted by key. A
    ``max_trees`` abort returns a partial summary with ``complete=False``.
    """
    config = config or RunConfig()
    started = time.perf_counter()
    notes = interpretation(config)
    for name, value in notes.items():
        logger.info(f"Rule reading {name}: {value}")

    per_depth: Counter = Counter()
    rejections: Counter = Counter()
    visits: List[Visit] = []
    complete = True
    depth_reached = 0
    try:
        trees = enumerate_trees(max_blowups, workers=config.workers, max_trees=config.max_trees)
        for visit in trees:
            per_depth[visit.depth] += 1
            depth_reached = visit.depth
            visits.append(visit)
    except ResourceLimitError as e:
        complete = False
        logger.warning(f"Search aborted: {e}")

    jobs = [(visit.script.to_text(), config) for visit in visits]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            results = list(executor.map(_run_pipeline, jobs, chunksize=16))
    else:
        results = [pipeline(v.tree, config, v.script) for v in visits]

    reports: List[CandidateReport] = []
    rejected: List[RejectedCandidate] = []
    for result in results:
        reports.extend(result.reports)
        rejected.extend(result.rejected)
        rejections.update(result.rejections)
    reports.sort(key=lambda r: (r.key, r.assignment.signature()))

    summary = RunSummary(
        max_blowups=max_blowups,
        depth_reached=depth_reached,
        complete=complete,
        per_depth_counts={d: per_depth[d] for d in sorted(per_depth)},
        rejection_counts={k: rejections[k] for k in sorted(rejections)},
        trees_visited=len(visits),
        reports=len(reports),
        interpretation=notes,
        wall_time_seconds=round(time.perf_counter() - started, 3),
    )
    logger.info(f"Visited {summary.trees_visited} trees, {summary.reports} reports")
    return SearchResult(summary, reports, rejected)
