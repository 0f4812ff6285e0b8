"""Pandas DataFrame views of search summaries and reports."""

from typing import List

import pandas as pd
from jsieve.models.reports import CandidateReport, RunSummary


def depth_counts_to_dataframe(summary: RunSummary) -> pd.DataFrame:
    """One row per depth with the number of trees visited there."""
    return pd.DataFrame(
        {
            "depth": list(summary.per_depth_counts),
            "trees": list(summary.per_depth_counts.values()),
        }
    )


def rejections_to_dataframe(summary: RunSummary) -> pd.DataFrame:
    """
    Per-filter rejection histogram.

    Args:
        summary: Run summary from a search

    Returns:
        DataFrame with ``stage``, ``reason`` and ``count`` columns, largest count first
    """
    if not summary.rejection_counts:
        return pd.DataFrame(columns=["stage", "reason", "count"])
    records = []
    for bucket, count in summary.rejection_counts.items():
        stage, _, reason = bucket.partition(":")
        records.append({"stage": stage, "reason": reason or stage, "count": count})
    df = pd.DataFrame(records)
    df["stage"] = df["stage"].astype("category")
    return df.sort_values(["count", "stage"], ascending=[False, True], ignore_index=True)


def reports_to_dataframe(reports: List[CandidateReport]) -> pd.DataFrame:
    """Flat table with one row per report."""
    if not reports:
        return pd.DataFrame()
    records = [
        {
            "key": report.key,
            "vertices": report.tree.size,
            "signature": "".join(str(t) for t in report.assignment.signature()),
            "rr_bound": report.rr_bound,
            "l_squared": report.l_squared,
            "l_dot_k": report.l_dot_k,
            "deltas": len(report.deltas),
            "delta_truncated": report.delta_truncated,
        }
        for report in reports
    ]
    return pd.DataFrame(records)
