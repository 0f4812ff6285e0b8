"""Unit tests for the L solver."""

from fractions import Fraction

import pytest
from jsieve.exceptions import (
    Condition2Failed,
    NegativeCoefficient,
    NonIntegral,
    PreconditionError,
    SingularNoSolution,
    Underdetermined,
)
from jsieve.models import DivisorClass
from jsieve.solvers import (
    audit_L,
    fixed_coefficients,
    solve_L,
    solve_L_family,
    solve_type2_coefficients,
)


@pytest.fixture
def no_typing_check(mocker):
    """Skip typing rules so hand-built trees reach the linear algebra."""
    return mocker.patch("jsieve.solvers.l_solver.check_assignment", return_value=[])


def rules(violations):
    return {v.rule for v in violations}


def type2_with_leaf(make_tree, self_int, leaf_kbar=-2, leaf_self=-2):
    return make_tree([(0, -2, self_int), (1, leaf_kbar, leaf_self)], [(0, 1)])


class TestType2System:
    """Test the linear system on type-2 curves."""

    def test_fixed_coefficients(self, make_tree, make_types):
        """Test type 1 gets minus half its label and types 3, 4 get zero."""
        tree = make_tree(
            [(0, -2, 0), (1, -4, -1), (2, 1, -1), (3, 0, -1)], [(0, 1), (0, 2), (2, 3)]
        )
        types = make_types({0: 2, 1: 1, 2: 3, 3: 4})

        assert fixed_coefficients(tree, types) == {1: 2, 2: 0, 3: 0}

    def test_nonsingular(self, make_tree, make_types):
        """Test a regular system is solved exactly."""
        tree = type2_with_leaf(make_tree, -1)

        assert solve_type2_coefficients(tree, make_types({0: 2, 1: 1})) == {0: Fraction(1)}

    def test_inconsistent(self, make_tree, make_types):
        """Test a singular inconsistent system."""
        tree = type2_with_leaf(make_tree, 0)

        with pytest.raises(SingularNoSolution) as exc_info:
            solve_type2_coefficients(tree, make_types({0: 2, 1: 1}))

        assert exc_info.value.reason == "SingularNoSolution"

    def test_underdetermined(self, make_tree, make_types):
        """Test a singular consistent system reports its kernel."""
        tree = make_tree([(0, -2, 0), (1, 1, -1)], [(0, 1)])

        with pytest.raises(Underdetermined) as exc_info:
            solve_type2_coefficients(tree, make_types({0: 2, 1: 3}))

        assert exc_info.value.particular == {0: 0}
        assert exc_info.value.kernel == [{0: 1}]


@pytest.mark.usefixtures("no_typing_check")
class TestSolveL:
    """Test reason codes of the full L solve."""

    def test_condition2(self, make_tree, make_types):
        """Test a solution missing a type-1 curve."""
        tree = type2_with_leaf(make_tree, -1)

        with pytest.raises(Condition2Failed) as exc_info:
            solve_L(tree, make_types({0: 2, 1: 1}))

        assert exc_info.value.vertices == [1]

    def test_non_integral(self, make_tree, make_types):
        """Test a half-integral solution is rejected."""
        tree = type2_with_leaf(make_tree, -2)

        with pytest.raises(NonIntegral):
            solve_L(tree, make_types({0: 2, 1: 1}))

    def test_negative(self, make_tree, make_types):
        """Test negative coefficients are rejected unless allowed."""
        tree = type2_with_leaf(make_tree, 1, leaf_self=2)
        types = make_types({0: 2, 1: 1})

        with pytest.raises(NegativeCoefficient):
            solve_L(tree, types)

        solution = solve_L(tree, types, allow_negative=True)
        assert solution.L.coeffs == {0: -1, 1: 1}
        assert solution.pairings == {0: 0, 1: 1}


class TestSolveLChain:
    """Test L on a real tree."""

    def test_chain_zero_class(self, chain_tree, chain_assignment):
        """Test the chain typing forces L = 0."""
        solution = solve_L(chain_tree, chain_assignment, allow_no_type1=True)

        assert solution.L == DivisorClass.zero()
        assert solution.kernel_dimension == 0

    def test_precondition(self, chain_tree, chain_assignment):
        """Test an inadmissible assignment is refused with its violations."""
        with pytest.raises(PreconditionError) as exc_info:
            solve_L(chain_tree, chain_assignment)

        assert rules(exc_info.value.violations) == {"C11"}
        assert exc_info.value.exit_code == 1


@pytest.mark.usefixtures("no_typing_check")
class TestSolveLFamily:
    """Test expansion of underdetermined systems."""

    def test_box(self, make_tree, make_types):
        """Test kernel multiples in the box that keep L non-negative."""
        tree = make_tree([(0, -2, 0), (1, 1, -1)], [(0, 1)])

        family = solve_L_family(tree, make_types({0: 2, 1: 3}), kernel_box=2)

        assert [s.L.coefficient(0) for s in family] == [0, 1, 2]
        assert all(s.kernel_dimension == 1 for s in family)

    def test_box_with_negatives(self, make_tree, make_types):
        """Test allowing negative coefficients widens the family."""
        tree = make_tree([(0, -2, 0), (1, 1, -1)], [(0, 1)])

        family = solve_L_family(tree, make_types({0: 2, 1: 3}), allow_negative=True, kernel_box=1)

        assert sorted(s.L.coefficient(0) for s in family) == [-1, 0, 1]

    def test_empty_box_reraises(self, make_tree, make_types):
        """Test the kernel error surfaces when every representative has a negative coefficient."""
        tree = make_tree(
            [(0, -2, 1), (1, -1, 1), (2, -2, 2), (3, -2, 1)], [(0, 1), (0, 2), (1, 3)]
        )

        with pytest.raises(Underdetermined) as exc_info:
            solve_L_family(tree, make_types({0: 2, 1: 2, 2: 1, 3: 1}), kernel_box=2)

        assert len(exc_info.value.kernel) == 1

    def test_unique_solution_passthrough(self, make_tree, make_types):
        """Test a regular system yields a single solution."""
        tree = type2_with_leaf(make_tree, 1, leaf_self=2)

        family = solve_L_family(tree, make_types({0: 2, 1: 1}), allow_negative=True)

        assert len(family) == 1


class TestAuditL:
    """Test the L audit."""

    def test_clean(self, chain_tree, chain_assignment):
        """Test the zero class passes on the chain."""
        assert audit_L(chain_tree, chain_assignment, DivisorClass.zero()) == []

    def test_type3_coefficient(self, chain_tree, chain_assignment):
        """Test a coefficient on a type-3 curve."""
        violations = audit_L(chain_tree, chain_assignment, DivisorClass.curve(3))

        assert rules(violations) == {"L3", "L4"}

    def test_sign_and_integrality(self, chain_tree, chain_assignment):
        """Test negative and fractional coefficients."""
        negative = DivisorClass(coeffs={0: -1})
        fractional = DivisorClass(coeffs={0: Fraction(1, 2)})

        assert rules(audit_L(chain_tree, chain_assignment, negative)) == {"L4", "LNEG"}
        assert rules(audit_L(chain_tree, chain_assignment, negative, allow_negative=True)) == {"L4"}
        assert rules(audit_L(chain_tree, chain_assignment, fractional)) == {"L4", "LINT"}

    def test_type1_rules(self, make_tree, make_types):
        """Test type-1 coefficient and pairing."""
        tree = type2_with_leaf(make_tree, -1)

        violations = audit_L(tree, make_types({0: 2, 1: 1}), DivisorClass(coeffs={0: 1, 1: 2}))
        assert rules(violations) == {"L1", "L2", "L4"}
