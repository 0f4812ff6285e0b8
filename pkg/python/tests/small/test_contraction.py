"""Unit tests for contraction, realizability and final curves."""

import pytest
from hypothesis import given, settings
from jsieve.exceptions import NotContractibleError, UnrealizableError
from jsieve.graph import (
    accelerated_finals,
    blowup_edge,
    blowup_point,
    canonical_key,
    contract,
    contractible_vertices,
    final_curves,
    initial_tree,
    is_contractible,
    realizable,
    replay,
)
from jsieve.graph.contraction import contraction_blocker
from jsieve.models import BlowupScript
from tests.strategies import blowup_scripts


class TestContract:
    """Test blowing down."""

    def test_undoes_point_blowup(self, chain_tree):
        """Test contracting the new leaf restores the tree."""
        blown = blowup_point(chain_tree, 1)

        assert contract(blown, blown.next_id - 1).model_dump() == chain_tree.model_dump()

    def test_undoes_edge_blowup(self, chain_tree):
        """Test contracting the new middle vertex restores the edge."""
        blown = blowup_edge(chain_tree, 1, 2)

        assert contract(blown, blown.next_id - 1).model_dump() == chain_tree.model_dump()

    def test_origin_never_contracted(self):
        """Test the origin is not contractible."""
        with pytest.raises(NotContractibleError) as exc_info:
            contract(initial_tree(), 0)

        assert exc_info.value.exit_code == 2

    def test_wrong_self_intersection(self, chain_tree):
        """Test only (-1)-curves contract."""
        assert not is_contractible(chain_tree, 1)
        assert "self-intersection" in contraction_blocker(chain_tree, 1)

    def test_high_degree_blocked(self, make_tree):
        """Test a (-1)-curve of degree 4 is not contractible."""
        tree = make_tree(
            [(0, -2, 0), (1, -1, -1), (2, 0, -1), (3, 0, -1), (4, 0, -1)],
            [(0, 1), (1, 2), (1, 3), (1, 4)],
        )

        assert "degree 4" in contraction_blocker(tree, 1)

    @given(blowup_scripts(min_length=1, max_length=10))
    @settings(max_examples=60, deadline=None)
    def test_last_blowup_always_contractible(self, script):
        """Test the most recent curve can always be blown down to the previous tree."""
        tree = replay(script)
        previous = replay(BlowupScript.model_construct(steps=script.steps[:-1]))

        assert canonical_key(contract(tree, tree.next_id - 1)) == canonical_key(previous)


class TestRealizable:
    """Test reverse-blowdown certification."""

    def test_initial_tree(self):
        """Test the plane itself is realizable."""
        assert realizable(initial_tree())

    def test_golden(self, golden_tree):
        """Test the shipped tree is realizable."""
        assert realizable(golden_tree)

    def test_bad_labels(self, make_tree):
        """Test a tree with wrong labels is not realizable."""
        assert not realizable(make_tree([(0, -2, 0), (1, -4, -1)], [(0, 1)]))

    def test_wrong_self_intersection(self, make_tree):
        """Test a single origin with the wrong self-intersection is not realizable."""
        assert not realizable(make_tree([(0, -2, 0)]))

    @given(blowup_scripts(max_length=10))
    @settings(max_examples=60, deadline=None)
    def test_replayed_trees_are_realizable(self, script):
        """Test every engine-produced tree is realizable."""
        assert realizable(replay(script))


class TestFinalCurves:
    """Test final-curve detection."""

    def test_golden(self, golden_tree):
        """Test the interior (-2)-curve and the four 1-leaves are final."""
        assert final_curves(golden_tree) == {5, 7, 8, 9, 10}
        assert final_curves(golden_tree, use_accelerators=False) == {5, 7, 8, 9, 10}

    def test_initial_tree_has_none(self):
        """Test the plane has no final curve."""
        assert final_curves(initial_tree()) == set()

    def test_chain(self, chain_tree):
        """Test only the last leaf of the chain is final."""
        assert final_curves(chain_tree) == {3}
        assert contractible_vertices(chain_tree) == [3]

    def test_accelerators(self, golden_tree):
        """Test label patterns claim the 1-leaves, and creation order also claims vertex 5."""
        assert accelerated_finals(golden_tree) == {7, 8, 9, 10}
        assert accelerated_finals(golden_tree, creation_ordered=True) == {5, 7, 8, 9, 10}

    def test_unrealizable_raises(self, make_tree):
        """Test final curves need a realizable tree."""
        with pytest.raises(UnrealizableError):
            final_curves(make_tree([(0, -2, 0), (1, -4, -1)], [(0, 1)]))

    @given(blowup_scripts(max_length=9))
    @settings(max_examples=60, deadline=None)
    def test_accelerators_are_sound(self, script):
        """Test accelerated claims agree with the backtracking definition."""
        tree = replay(script)
        exact = final_curves(tree, use_accelerators=False)

        assert accelerated_finals(tree, creation_ordered=True) <= exact
        assert final_curves(tree) == exact
