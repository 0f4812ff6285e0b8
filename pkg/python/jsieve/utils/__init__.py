"""Utilities for jsieve: configuration, DOT export and pandas summaries."""

from jsieve.utils.config import load_run_config
from jsieve.utils.dot import export_dot, tree_graph
from jsieve.utils.pandas_utils import (
    depth_counts_to_dataframe,
    rejections_to_dataframe,
    reports_to_dataframe,
)

__all__ = [
    "load_run_config",
    "export_dot",
    "tree_graph",
    "depth_counts_to_dataframe",
    "rejections_to_dataframe",
    "reports_to_dataframe",
]
