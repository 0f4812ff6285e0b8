"""Enumeration of blowup trees and the candidate filter pipeline."""

from jsieve.graph.canonical import canonical_key
from jsieve.search.enumerate import Visit, count_by_depth, enumerate_trees
from jsieve.search.pipeline import STAGES, PipelineResult, pipeline
from jsieve.search.runner import SearchResult, interpretation, search

__all__ = [
    "canonical_key",
    "enumerate_trees",
    "count_by_depth",
    "Visit",
    "pipeline",
    "PipelineResult",
    "STAGES",
    "search",
    "SearchResult",
    "interpretation",
]
