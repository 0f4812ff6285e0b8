"""Exact solver for the class L of the pullback of a generic line.

Conditions on ``L = sum a_i E_i``:

- L1 on a type-1 curve the coefficient is minus half its label;
- L2 L meets every type-1 curve exactly once;
- L3 coefficients vanish on type-3 and type-4 curves;
- L4 L meets every type-2 curve trivially.

L1 and L3 fix every coefficient off the type-2 curves, and L4 is a square
linear system for the rest.
"""

import itertools
import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Sequence

import sympy
from jsieve.curve_types import check_assignment
from jsieve.exceptions import (
    Condition2Failed,
    JsieveError,
    NegativeCoefficient,
    NonIntegral,
    PreconditionError,
    SingularNoSolution,
    SolverError,
    Underdetermined,
)
from jsieve.lattice import curve_pairings, determinant
from jsieve.models.assignment import CurveType, TypeAssignment, Violation
from jsieve.models.divisor import DivisorClass
from jsieve.models.solutions import LSolution
from jsieve.models.tree import CurveTree

logger = logging.getLogger(__name__)


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def fixed_coefficients(tree: CurveTree, assignment: TypeAssignment) -> Dict[int, Fraction]:
    """Coefficients pinned by L1 and L3."""
    fixed = {}
    for v in assignment.of_type(CurveType.ONTO_INFINITY):
        fixed[v] = Fraction(-tree.kbar(v), 2)
    for v in assignment.of_type(CurveType.AFFINE_CURVE) + assignment.of_type(
        CurveType.AFFINE_POINT
    ):
        fixed[v] = Fraction(0)
    return fixed


def type2_system(tree: CurveTree, assignment: TypeAssignment):
    """The L4 system ``A x = b`` over the type-2 vertices, in id order."""
    unknowns = assignment.of_type(CurveType.POINT_AT_INFINITY)
    fixed = fixed_coefficients(tree, assignment)
    index = {v: k for k, v in enumerate(unknowns)}
    n = len(unknowns)
    A = sympy.zeros(n, n)
    b = sympy.zeros(n, 1)
    for v in unknowns:
        A[index[v], index[v]] = tree.self_int(v)
        for w in tree.neighbors(v):
            if w in index:
                A[index[v], index[w]] = 1
            else:
                b[index[v], 0] -= sympy.Rational(fixed[w].numerator, fixed[w].denominator)
    return A, b, unknowns


def _primitive(vector: Sequence[Fraction]) -> List[Fraction]:
    """Scale a rational kernel vector to a primitive integer vector."""
    scale = lcm(*(x.denominator for x in vector))
    ints = [int(x * scale) for x in vector]
    divisor = gcd(*ints) or 1
    return [Fraction(x // divisor) for x in ints]


def solve_type2_coefficients(
    tree: CurveTree, assignment: TypeAssignment
) -> Dict[int, Fraction]:
    """Solve L4 for the type-2 coefficients.

    Nonsingular systems are solved fraction-free (Bareiss determinant and
    adjugate). Singular ones raise ``SingularNoSolution`` when inconsistent
    and ``Underdetermined`` (with a particular solution and an integral
    kernel basis) otherwise.
    """
    A, b, unknowns = type2_system(tree, assignment)
    if not unknowns:
        return {}
    det = determinant(A)
    if det != 0:
        x = A.adjugate(method="bareiss") * b
        return {v: _to_fraction(x[k, 0]) / det for k, v in enumerate(unknowns)}

    try:
        solution, params = A.gauss_jordan_solve(b)
    except ValueError:
        raise SingularNoSolution("the type-2 system is inconsistent") from None
    particular = solution.subs({p: 0 for p in params})
    kernel = [
        dict(zip(unknowns, _primitive([_to_fraction(x) for x in vector])))
        for vector in A.nullspace()
    ]
    raise Underdetermined(
        particular={v: _to_fraction(particular[k, 0]) for k, v in enumerate(unknowns)},
        kernel=kernel,
    )


def audit_L(
    tree: CurveTree,
    assignment: TypeAssignment,
    L: DivisorClass,
    allow_negative: bool = False,
) -> List[Violation]:
    """Re-check L1-L4, integrality (``LINT``) and sign (``LNEG``)."""
    violations = []
    pairings = curve_pairings(tree, L)
    for v in assignment.of_type(CurveType.ONTO_INFINITY):
        if L.coefficient(v) != Fraction(-tree.kbar(v), 2):
            violations.append(
                Violation(rule="L1", vertices=(v,), message=f"coefficient at {v} != -kbar/2")
            )
        if pairings[v] != 1:
            violations.append(
                Violation(rule="L2", vertices=(v,), message=f"L . E_{v} = {pairings[v]}, not 1")
            )
    for v in assignment.of_type(CurveType.AFFINE_CURVE) + assignment.of_type(
        CurveType.AFFINE_POINT
    ):
        if L.coefficient(v) != 0:
            violations.append(
                Violation(rule="L3", vertices=(v,), message=f"coefficient at {v} is not zero")
            )
    for v in assignment.of_type(CurveType.POINT_AT_INFINITY):
        if pairings[v] != 0:
            violations.append(
                Violation(rule="L4", vertices=(v,), message=f"L . E_{v} = {pairings[v]}, not 0")
            )
    fractional = sorted(v for v, c in L.coeffs.items() if c.denominator != 1)
    if fractional:
        violations.append(
            Violation(rule="LINT", vertices=tuple(fractional), message="non-integral coefficients")
        )
    negative = sorted(v for v, c in L.coeffs.items() if c < 0)
    if negative and not allow_negative:
        violations.append(
            Violation(rule="LNEG", vertices=tuple(negative), message="negative coefficients")
        )
    return violations


def finish_L(
    tree: CurveTree,
    assignment: TypeAssignment,
    coeffs: Dict[int, Fraction],
    allow_negative: bool = False,
    kernel_dimension: int = 0,
) -> LSolution:
    """Check integrality, L2 and sign of a solved class and wrap it."""
    L = DivisorClass(coeffs=coeffs)
    if not L.is_integral:
        raise NonIntegral(f"coefficients {L.model_dump()['coeffs']}")
    pairings = curve_pairings(tree, L)
    off = [v for v in assignment.of_type(CurveType.ONTO_INFINITY) if pairings[v] != 1]
    if off:
        raise Condition2Failed(off)
    if not allow_negative and any(c < 0 for c in L.coeffs.values()):
        raise NegativeCoefficient(
            f"negative at {sorted(v for v, c in L.coeffs.items() if c < 0)}"
        )
    violations = audit_L(tree, assignment, L, allow_negative)
    if violations:
        raise JsieveError("L solution failed its self-audit", "; ".join(map(str, violations)))
    return LSolution(L=L, pairings=pairings, kernel_dimension=kernel_dimension)


def solve_L(
    tree: CurveTree,
    assignment: TypeAssignment,
    allow_negative: bool = False,
    allow_no_type1: bool = False,
) -> LSolution:
    """The unique class L for a validated assignment.

    Raises:
        PreconditionError: The assignment breaks a typing rule.
        SolverError: One of the stable reason codes.
    """
    violations = check_assignment(tree, assignment, allow_no_type1)
    if violations:
        raise PreconditionError("Assignment is not admissible", violations)
    coeffs = fixed_coefficients(tree, assignment)
    coeffs.update(solve_type2_coefficients(tree, assignment))
    return finish_L(tree, assignment, coeffs, allow_negative)


def solve_L_family(
    tree: CurveTree,
    assignment: TypeAssignment,
    allow_negative: bool = False,
    allow_no_type1: bool = False,
    kernel_box: int = 2,
) -> List[LSolution]:
    """Like ``solve_L``, but expands an underdetermined system into coset representatives.

    Representatives ``x0 + sum c_k k_k`` with integer ``|c_k| <= kernel_box``
    that pass integrality, L2 and the sign rule are returned, deduplicated,
    in coefficient order. If none pass, the ``Underdetermined`` error is
    re-raised.
    """
    try:
        return [solve_L(tree, assignment, allow_negative, allow_no_type1)]
    except Underdetermined as e:
        underdetermined = e

    fixed = fixed_coefficients(tree, assignment)
    kernel = underdetermined.kernel
    logger.info(f"L system has a {len(kernel)}-dimensional kernel; scanning box {kernel_box}")
    found: Dict[tuple, LSolution] = {}
    for multipliers in itertools.product(range(-kernel_box, kernel_box + 1), repeat=len(kernel)):
        coeffs = dict(fixed)
        for v, x0 in underdetermined.particular.items():
            coeffs[v] = x0 + sum(c * k[v] for c, k in zip(multipliers, kernel))
        try:
            solution = finish_L(tree, assignment, coeffs, allow_negative, len(kernel))
        except SolverError:
            continue
        found[tuple(sorted(solution.L.coeffs.items()))] = solution
    if not found:
        raise underdetermined
    return [found[k] for k in sorted(found)]
