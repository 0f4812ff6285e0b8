"""Unit tests for the search runner."""

import json

from jsieve.models import RunConfig
from jsieve.search import interpretation, search


class TestSearch:
    """Test full runs on shallow depths."""

    def test_depth_two(self):
        """Test the counts of a depth-2 run."""
        summary, reports = search(2)

        assert reports == []
        assert summary.complete
        assert summary.depth_reached == 2
        assert summary.trees_visited == 5
        assert summary.per_depth_counts == {0: 1, 1: 1, 2: 3}
        assert summary.rejection_counts == {"finals": 1, "typing": 4}

    def test_rejections_sum_to_trees(self):
        """Test every tree ends in a report or at least one rejection."""
        summary, reports = search(4)

        assert summary.rejection_counts["finals"] == 1
        assert sum(summary.rejection_counts.values()) + len(reports) >= summary.trees_visited

    def test_tree_limit(self):
        """Test a tree limit yields a partial summary."""
        result = search(3, RunConfig(max_trees=2))

        assert not result.summary.complete
        assert result.summary.trees_visited == 2
        assert result.summary.per_depth_counts == {0: 1, 1: 1}

    def test_verbose_rejections(self):
        """Test verbose runs keep one rejected entry per counted rejection."""
        result = search(2, RunConfig(verbose_trace=True))

        assert len(result.rejected) == 5
        assert result.rejected[0].filter_trace[-1].stage == "finals"

    def test_summary_serializes(self):
        """Test the summary dumps to JSON with the wall time set."""
        summary, _ = search(1)

        data = json.loads(summary.model_dump_json())
        assert data["wall_time_seconds"] >= 0
        assert data["per_depth_counts"] == {"0": 1, "1": 1}


class TestInterpretation:
    """Test the recorded rule readings."""

    def test_defaults(self):
        """Test the default readings."""
        notes = interpretation(RunConfig())

        assert notes["l_sign"] == "L non-negative"
        assert notes["type1"] == "at least one type-1 curve"
        assert notes["score"] == "rr bound >= 2"

    def test_relaxed(self):
        """Test relaxed flags change the readings."""
        notes = interpretation(RunConfig(allow_negative_l=True, allow_no_type1=True))

        assert notes["l_sign"] == "negative L allowed"
        assert notes["type1"] == "type 1 optional"
