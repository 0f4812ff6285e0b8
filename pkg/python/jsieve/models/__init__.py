"""Pydantic models for jsieve trees, classes, assignments and reports."""

from jsieve.models.assignment import CurveType, TypeAssignment, Violation
from jsieve.models.config import RunConfig
from jsieve.models.divisor import DivisorClass
from jsieve.models.reports import CandidateReport, FilterRecord, RejectedCandidate, RunSummary
from jsieve.models.script import BlowupScript, EdgeBlowup, PointBlowup, Step
from jsieve.models.solutions import DeltaSolution, LSolution
from jsieve.models.tree import CurveTree, Vertex, normalize_edge

__all__ = [
    # Graph
    "Vertex",
    "CurveTree",
    "normalize_edge",
    "BlowupScript",
    "PointBlowup",
    "EdgeBlowup",
    "Step",
    # Lattice
    "DivisorClass",
    # Typing
    "CurveType",
    "TypeAssignment",
    "Violation",
    # Solvers
    "LSolution",
    "DeltaSolution",
    # Search
    "CandidateReport",
    "FilterRecord",
    "RejectedCandidate",
    "RunSummary",
    "RunConfig",
]
