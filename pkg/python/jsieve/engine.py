"""jsieve - main engine class."""

import logging
from typing import Dict, List, Optional, Union

from jsieve.curve_types import admissible_assignments, check_assignment
from jsieve.exceptions import CapExhausted
from jsieve.graph.contraction import final_curves, realizable
from jsieve.graph.invariants import check_invariants
from jsieve.graph.moves import replay
from jsieve.lattice import determinant_labels, integral_rr_bound
from jsieve.models.assignment import TypeAssignment, Violation
from jsieve.models.config import RunConfig
from jsieve.models.divisor import DivisorClass
from jsieve.models.script import BlowupScript
from jsieve.models.solutions import DeltaSolution, LSolution
from jsieve.models.tree import CurveTree
from jsieve.search.pipeline import PipelineResult, pipeline
from jsieve.search.runner import SearchResult, search
from jsieve.solvers.delta_solver import DeltaSearch, audit_delta
from jsieve.solvers.l_solver import audit_L, solve_L_family
from jsieve.utils.config import load_run_config
from pydantic import BaseModel, ConfigDict, Field

logger = logging.getLogger(__name__)

# Rule ids checked by each audit layer, in report order
AUDIT_RULES: Dict[str, List[str]] = {
    "tree": ["origin", "tree", "gcd", "negative-connected", "zero-adjacency", "realizable"],
    "types": [f"C{k}" for k in range(1, 12)],
    "L": ["L1", "L2", "L3", "L4", "LINT", "LNEG"],
    "Delta": ["D1", "D2", "D3", "D4", "SLOPE"],
}


class Solved(BaseModel):
    """One L solution with its Delta solutions and score."""

    model_config = ConfigDict(frozen=True)

    L: LSolution
    rr_bound: int
    deltas: List[DeltaSolution] = Field(default_factory=list)
    delta_truncated: bool = False


class SieveEngine:
    """Entry point bundling a ``RunConfig`` with every tree operation.

    ## Basic Usage

    ```python
    from jsieve import SieveEngine

    engine = SieveEngine()
    tree = engine.replay("P 0\\nP 0\\nP 2\\nE 2 3")
    print(engine.finals(tree))
    print(engine.det_labels(tree))

    summary, reports = engine.search(4)
    print(summary.per_depth_counts)
    ```

    ## Configuration

    ``SieveEngine(config)`` takes a ``RunConfig``; ``SieveEngine.from_env()``
    builds one from ``JSIEVE_*`` environment variables, an optional dotenv
    config file and keyword overrides (see ``jsieve.utils.config``).

    ## Errors

    Malformed input raises ``InputError`` subclasses. Solver failures raise
    ``SolverError`` subclasses whose ``reason`` is a stable code. Rule checks
    (``check``, ``audit``) return ``Violation`` lists instead of raising.
    """

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or RunConfig()

    @classmethod
    def from_env(cls, config_file: Optional[str] = None, **overrides) -> "SieveEngine":
        return cls(load_run_config(config_file, overrides))

    def replay(self, script: Union[str, BlowupScript]) -> CurveTree:
        """Build the tree of a script, given as text or parsed."""
        if isinstance(script, str):
            script = BlowupScript.parse(script)
        return replay(script)

    def check(self, tree: CurveTree) -> List[Violation]:
        """Label invariants plus realizability."""
        violations = check_invariants(tree)
        if not violations and not realizable(tree):
            violations.append(
                Violation(rule="realizable", message="the tree does not blow down to the plane")
            )
        return violations

    def finals(self, tree: CurveTree) -> List[int]:
        return sorted(final_curves(tree))

    def det_labels(self, tree: CurveTree) -> Dict[int, int]:
        return determinant_labels(tree)

    def assignments(self, tree: CurveTree) -> List[TypeAssignment]:
        return admissible_assignments(tree, self.config.allow_no_type1)

    def audit(
        self,
        tree: CurveTree,
        assignment: Optional[TypeAssignment] = None,
        L: Optional[DivisorClass] = None,
        Delta: Optional[DivisorClass] = None,
    ) -> Dict[str, List[Violation]]:
        """Violations per supplied layer.

        Layers after the first failing one are still audited when they can
        be; the types layer needs a realizable tree for its final curves.
        """
        layers = {"tree": self.check(tree)}
        if assignment is None:
            return layers
        finals = final_curves(tree) if not layers["tree"] else set()
        layers["types"] = check_assignment(tree, assignment, self.config.allow_no_type1, finals)
        if L is None:
            return layers
        layers["L"] = audit_L(tree, assignment, L, self.config.allow_negative_l)
        if Delta is None:
            return layers
        layers["Delta"] = audit_delta(tree, assignment, L, Delta)
        return layers

    def solve(self, tree: CurveTree, assignment: TypeAssignment) -> List[Solved]:
        """Solve L, then every Delta for it.

        An underdetermined L system yields one entry per coset representative
        inside the configured kernel box.
        """
        config = self.config
        solutions = solve_L_family(
            tree,
            assignment,
            allow_negative=config.allow_negative_l,
            allow_no_type1=config.allow_no_type1,
            kernel_box=config.kernel_box,
        )
        solved = []
        for solution in solutions:
            truncated = False
            try:
                deltas = DeltaSearch(
                    tree, assignment, solution.L, config.delta_cap, config.result_cap
                ).run()
            except CapExhausted as e:
                deltas, truncated = e.partial, True
            solved.append(
                Solved(
                    L=solution,
                    rr_bound=integral_rr_bound(tree, solution.L),
                    deltas=deltas,
                    delta_truncated=truncated,
                )
            )
        return solved

    def pipeline(self, tree: CurveTree, script: Optional[BlowupScript] = None) -> PipelineResult:
        return pipeline(tree, self.config, script)

    def search(self, max_blowups: Optional[int] = None) -> SearchResult:
        depth = self.config.max_blowups if max_blowups is None else max_blowups
        logger.info(f"Searching to depth {depth} with {self.config.workers} worker(s)")
        return search(depth, self.config)
