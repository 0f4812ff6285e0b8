"""Unit tests for the SieveEngine facade."""

from fractions import Fraction

import pytest
from jsieve import SieveEngine
from jsieve.engine import AUDIT_RULES
from jsieve.exceptions import JsieveError, ScriptError
from jsieve.models import DivisorClass, RunConfig


@pytest.fixture
def engine():
    return SieveEngine()


@pytest.fixture
def relaxed():
    return SieveEngine(RunConfig(allow_no_type1=True))


class TestEngine:
    """Test the single-tree operations."""

    def test_replay_text_or_script(self, engine, golden_script_text, golden_tree):
        """Test replay accepts script text."""
        assert engine.replay(golden_script_text).model_dump() == golden_tree.model_dump()

    def test_replay_error(self, engine):
        """Test malformed scripts raise."""
        with pytest.raises(ScriptError):
            engine.replay("Q 1")

    def test_check_adds_realizability(self, engine, make_tree):
        """Test a tree with clean labels that does not blow down is reported."""
        tree = make_tree([(0, -2, 0)])

        assert [v.rule for v in engine.check(tree)] == ["realizable"]

    def test_finals_and_labels(self, engine, chain_tree):
        """Test finals come sorted and labels keyed by id."""
        assert engine.finals(chain_tree) == [3]
        assert engine.det_labels(chain_tree)[3] == -2

    def test_assignments_follow_config(self, engine, relaxed, chain_tree, chain_assignment):
        """Test the type-1 switch reaches enumeration."""
        assert engine.assignments(chain_tree) == []
        assert relaxed.assignments(chain_tree) == [chain_assignment]

    def test_from_env(self, tmp_path):
        """Test keyword overrides reach the configuration."""
        path = tmp_path / "run.env"
        path.write_text("JSIEVE_DELTA_CAP=5\n")

        engine = SieveEngine.from_env(str(path), kernel_box=1)

        assert engine.config.delta_cap == 5
        assert engine.config.kernel_box == 1


class TestAudit:
    """Test layered audits."""

    def test_layers(self, relaxed, chain_tree, chain_assignment):
        """Test each supplied layer is audited."""
        Delta = DivisorClass(coeffs={0: 1, 1: 1, 2: 1})

        layers = relaxed.audit(chain_tree, chain_assignment, DivisorClass.zero(), Delta)

        assert list(layers) == ["tree", "types", "L", "Delta"]
        assert layers["tree"] == layers["types"] == layers["L"] == []
        assert {v.rule for v in layers["Delta"]} == {"D2", "D4"}

    def test_tree_only(self, engine, golden_tree):
        """Test only the tree layer without an assignment."""
        assert engine.audit(golden_tree) == {"tree": []}

    def test_rule_tables(self):
        """Test every layer lists its rule ids."""
        assert AUDIT_RULES["types"][-1] == "C11"
        assert "SLOPE" in AUDIT_RULES["Delta"]


class TestSolve:
    """Test solving and searching through the engine."""

    def test_chain(self, relaxed, chain_tree, chain_assignment):
        """Test the chain solves to the zero class with no Delta."""
        (solved,) = relaxed.solve(chain_tree, chain_assignment)

        assert solved.L.L == DivisorClass.zero()
        assert solved.rr_bound == 1
        assert solved.deltas == []
        assert not solved.delta_truncated

    def test_fractional_bound_raises(self, relaxed, chain_tree, chain_assignment, mocker):
        """Test a fractional Riemann-Roch bound is not truncated into the result."""
        mocker.patch("jsieve.lattice.rr_lower_bound", return_value=Fraction(5, 2))

        with pytest.raises(JsieveError, match="not an integer"):
            relaxed.solve(chain_tree, chain_assignment)

    def test_pipeline(self, relaxed, chain_tree):
        """Test the pipeline uses the engine configuration."""
        assert relaxed.pipeline(chain_tree).rejections == {"delta": 1}

    def test_search_depth(self):
        """Test the configured depth is the default."""
        summary, _ = SieveEngine(RunConfig(max_blowups=1)).search()

        assert summary.trees_visited == 2
