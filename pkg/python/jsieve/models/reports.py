"""Candidate reports and run summaries emitted by the search."""

from typing import Dict, List, Optional

from jsieve.models.assignment import TypeAssignment
from jsieve.models.script import BlowupScript
from jsieve.models.solutions import DeltaSolution, LSolution
from jsieve.models.tree import CurveTree
from pydantic import BaseModel, ConfigDict, Field


class FilterRecord(BaseModel):
    """Outcome of one pipeline stage."""

    model_config = ConfigDict(frozen=True)

    stage: str
    passed: bool
    detail: Optional[str] = None


class CandidateReport(BaseModel):
    """A tree with a typing, L, Delta list and score that passed every filter."""

    model_config = ConfigDict(frozen=True)

    key: str = Field(..., description="Hex canonical key of the tree")
    script: Optional[BlowupScript] = Field(None, description="Witness script replaying to the tree")
    tree: CurveTree
    assignment: TypeAssignment
    L: LSolution
    deltas: List[DeltaSolution]
    rr_bound: int
    l_squared: int
    l_dot_k: int
    delta_truncated: bool = False
    filter_trace: List[FilterRecord] = Field(default_factory=list)

    def to_json_line(self) -> str:
        return self.model_dump_json(by_alias=True)


class RejectedCandidate(BaseModel):
    """First failing stage of one tree or (tree, assignment) pair; kept in verbose runs."""

    key: str
    assignment: Optional[TypeAssignment] = None
    filter_trace: List[FilterRecord]


class RunSummary(BaseModel):
    """Aggregate counts for a search run."""

    max_blowups: int
    depth_reached: int
    complete: bool = True
    per_depth_counts: Dict[int, int] = Field(default_factory=dict)
    rejection_counts: Dict[str, int] = Field(default_factory=dict)
    trees_visited: int = 0
    reports: int = 0
    interpretation: Dict[str, str] = Field(default_factory=dict)
    wall_time_seconds: Optional[float] = Field(
        None, description="Wall time; the only nondeterministic field"
    )
