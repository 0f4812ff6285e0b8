"""Unit tests for curve-type rules and assignment enumeration."""

from itertools import product

import pytest
from hypothesis import given, settings
from jsieve.curve_types import admissible_assignments, assignment_violations, check_assignment
from jsieve.exceptions import PartialAssignmentError, UnknownVertexError
from jsieve.graph import final_curves, replay
from jsieve.models import CurveType, TypeAssignment
from tests.strategies import blowup_scripts


def rules(violations):
    return {v.rule for v in violations}


def brute_force(tree, allow_no_type1):
    finals = final_curves(tree)
    found = []
    for combo in product(list(CurveType), repeat=tree.size):
        candidate = TypeAssignment(types=dict(zip(tree.ids, combo)))
        if not assignment_violations(tree, candidate, finals, allow_no_type1):
            found.append(candidate)
    return sorted(found, key=TypeAssignment.signature)


class TestCheckAssignment:
    """Test individual rules."""

    def test_chain_valid_without_type1(self, chain_tree, chain_assignment):
        """Test the chain typing only misses a type-1 curve."""
        assert rules(check_assignment(chain_tree, chain_assignment)) == {"C11"}
        assert check_assignment(chain_tree, chain_assignment, allow_no_type1=True) == []

    def test_chain_type4_misplaced(self, chain_tree, make_types):
        """Test a type-4 curve between type 2 and type 3 breaks the chain rules."""
        violations = check_assignment(chain_tree, make_types({0: 2, 1: 2, 2: 4, 3: 3}))

        assert rules(violations) == {"C6", "C7", "C11"}

    def test_golden_type1_not_leaf(self, golden_tree, make_types):
        """Test typing the interior (-2)-curve as type 1 fails only the leaf rule."""
        types = {v: 2 for v in golden_tree.ids}
        types.update({5: 1, 7: 3, 8: 3, 9: 3, 10: 3})

        violations = check_assignment(golden_tree, make_types(types))
        assert rules(violations) == {"C9"}
        assert violations[0].vertices == (5,)

    def test_origin_must_be_type2(self, chain_tree, make_types):
        """Test the origin rule."""
        violations = check_assignment(
            chain_tree, make_types({0: 3, 1: 2, 2: 2, 3: 3}), allow_no_type1=True
        )

        assert "C1" in rules(violations)

    def test_type1_label_parity(self, chain_tree, make_types):
        """Test type 1 needs a negative even label."""
        violations = check_assignment(chain_tree, make_types({0: 2, 1: 1, 2: 2, 3: 3}))

        assert "C2" in rules(violations)
        assert "C11" not in rules(violations)

    def test_type3_needs_positive_label(self, chain_tree, make_types):
        """Test type 3 on a zero label and a missing type 3."""
        violations = check_assignment(
            chain_tree, make_types({0: 2, 1: 2, 2: 3, 3: 2}), allow_no_type1=True
        )

        assert {"C3", "C8"} <= rules(violations)

    def test_negative_labels_in_core(self, chain_tree, make_types):
        """Test negative labels outside types 1 and 2 are reported."""
        violations = check_assignment(
            chain_tree, make_types({0: 2, 1: 4, 2: 4, 3: 3}), allow_no_type1=True
        )

        assert "C4" in rules(violations)

    def test_adjacent_type1(self, make_tree, make_types):
        """Test two adjacent type-1 curves are reported."""
        tree = make_tree([(0, -2, 0), (1, -2, -1), (2, -4, -1)], [(0, 1), (1, 2)])

        violations = check_assignment(tree, make_types({0: 2, 1: 1, 2: 1}), finals=set())
        assert "C5" in rules(violations)
        assert "C10" in rules(violations)

    def test_partial_assignment(self, chain_tree, make_types):
        """Test every vertex needs a type."""
        with pytest.raises(PartialAssignmentError):
            check_assignment(chain_tree, make_types({0: 2}))

    def test_extra_vertex(self, chain_tree, make_types):
        """Test typing a vertex outside the tree is an input error."""
        with pytest.raises(UnknownVertexError):
            check_assignment(chain_tree, make_types({0: 2, 1: 2, 2: 2, 3: 3, 8: 2}))


class TestAdmissibleAssignments:
    """Test enumeration against the rules."""

    def test_chain(self, chain_tree, chain_assignment):
        """Test the chain has one typing, and only once type 1 is optional."""
        assert admissible_assignments(chain_tree) == []
        assert admissible_assignments(chain_tree, allow_no_type1=True) == [chain_assignment]

    def test_chain_brute_force(self, chain_tree):
        """Test enumeration matches trying all 256 typings."""
        for relaxed in (False, True):
            assert admissible_assignments(chain_tree, relaxed) == brute_force(chain_tree, relaxed)

    def test_golden_has_none(self, golden_tree):
        """Test the interior final (-2)-curve rules out every typing."""
        assert admissible_assignments(golden_tree) == []
        assert admissible_assignments(golden_tree, allow_no_type1=True) == []

    @given(blowup_scripts(max_length=4))
    @settings(max_examples=25, deadline=None)
    def test_matches_brute_force(self, script):
        """Test the pruned search returns exactly the valid typings."""
        tree = replay(script)

        for relaxed in (False, True):
            assert admissible_assignments(tree, relaxed) == brute_force(tree, relaxed)
