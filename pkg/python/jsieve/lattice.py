"""Intersection form on the curve basis, canonical classes and determinant labels.

All arithmetic is exact: coefficients are ``Fraction``s and determinants are
computed with sympy's fraction-free Bareiss elimination over the integers.
"""

from fractions import Fraction
from typing import Dict, List, Tuple

import sympy
from jsieve.exceptions import JsieveError, NonIntegralError, UnknownVertexError
from jsieve.models.divisor import DivisorClass
from jsieve.models.tree import CurveTree


def _check_support(tree: CurveTree, divisor: DivisorClass) -> None:
    for v in divisor.support:
        if v not in tree.by_id:
            raise UnknownVertexError(v, "divisor coefficient on a vertex outside the tree")


def pair(tree: CurveTree, d1: DivisorClass, d2: DivisorClass) -> Fraction:
    """Intersection number ``d1 . d2`` under the tree's form."""
    _check_support(tree, d1)
    _check_support(tree, d2)
    total = Fraction(0)
    for u, c in d1.coeffs.items():
        total += c * pair_with_curve(tree, d2, u)
    return total


def pair_with_curve(tree: CurveTree, divisor: DivisorClass, v: int) -> Fraction:
    """``divisor . E_v`` (no support check)."""
    value = divisor.coefficient(v) * tree.self_int(v)
    for w in tree.neighbors(v):
        value += divisor.coefficient(w)
    return value


def curve_pairings(tree: CurveTree, divisor: DivisorClass) -> Dict[int, Fraction]:
    """``divisor . E_v`` for every vertex."""
    _check_support(tree, divisor)
    return {v: pair_with_curve(tree, divisor, v) for v in tree.ids}


def intersection_matrix(tree: CurveTree) -> Tuple[sympy.Matrix, List[int]]:
    """Dense intersection matrix and the vertex order of its rows."""
    order = list(tree.ids)
    index = {v: k for k, v in enumerate(order)}
    n = len(order)
    rows = [[0] * n for _ in range(n)]
    for v in order:
        rows[index[v]][index[v]] = tree.self_int(v)
    for i, j in tree.edges:
        rows[index[i]][index[j]] = rows[index[j]][index[i]] = 1
    return sympy.Matrix(rows), order


def kbar_class(tree: CurveTree) -> DivisorClass:
    """Augmented canonical class ``K + sum E_i = sum kbar_i E_i``."""
    return DivisorClass(coeffs={v.id: v.kbar for v in tree.vertices})


def canonical_class(tree: CurveTree) -> DivisorClass:
    """Canonical class ``K = sum (kbar_i - 1) E_i``."""
    return DivisorClass(coeffs={v.id: v.kbar - 1 for v in tree.vertices})


def determinant(matrix: sympy.Matrix) -> int:
    """Exact integer determinant; the empty matrix has determinant 1."""
    if matrix.rows == 0:
        return 1
    return int(matrix.det(method="bareiss"))


def determinant_label(tree: CurveTree, v: int) -> int:
    """Determinant of the anti-intersection matrix with ``v``'s row and column removed.

    Unchanged by any further blowup, and negative on every curve mapping
    onto the line at infinity.
    """
    tree.vertex(v)
    matrix, order = intersection_matrix(tree)
    k = order.index(v)
    minor = -matrix
    minor.row_del(k)
    minor.col_del(k)
    return determinant(minor)


def determinant_labels(tree: CurveTree) -> Dict[int, int]:
    return {v: determinant_label(tree, v) for v in tree.ids}


def rr_lower_bound(tree: CurveTree, L: DivisorClass) -> Fraction:
    """Riemann-Roch lower bound ``(L.L - L.K) / 2 + 1`` on ``h^0(L)``."""
    if not L.is_integral:
        raise NonIntegralError(detail="the Riemann-Roch bound needs an integral class")
    return (pair(tree, L, L) - pair(tree, L, canonical_class(tree))) / 2 + 1


def integral_rr_bound(tree: CurveTree, L: DivisorClass) -> int:
    """``rr_lower_bound`` as an ``int``.

    Raises:
        JsieveError: The bound came out fractional, so the tree's labels and
            self-intersections disagree.
    """
    rr = rr_lower_bound(tree, L)
    if rr.denominator != 1:
        raise JsieveError(
            "Riemann-Roch bound is not an integer", f"{rr} for L = {L.model_dump()['coeffs']}"
        )
    return int(rr)
