"""Label invariants of blowup trees and self-intersection recovery."""

from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Set

import networkx as nx
from jsieve.models.assignment import Violation
from jsieve.models.tree import CurveTree


def connected_components(tree: CurveTree, members: Iterable[int]) -> List[Set[int]]:
    """Connected components of the subgraph induced on ``members``, ordered by smallest id."""
    induced = tree.graph.subgraph(members)
    return sorted(nx.connected_components(induced), key=min)


def structure_violations(tree: CurveTree) -> List[Violation]:
    """Shape rules: a single origin, and the curves form a tree."""
    violations = []
    origins = [v.id for v in tree.vertices if v.is_origin]
    if len(origins) != 1:
        violations.append(
            Violation(
                rule="origin",
                vertices=tuple(origins),
                message=f"expected exactly one origin vertex, found {len(origins)}",
            )
        )
    if tree.size == 0 or not nx.is_tree(tree.graph):
        violations.append(
            Violation(
                rule="tree",
                message=f"{tree.size} vertices and {len(tree.edges)} edges do not form a tree",
            )
        )
    return violations


def check_invariants(tree: CurveTree) -> List[Violation]:
    """Report every violated label invariant.

    Rules: ``gcd`` (adjacent labels coprime), ``negative-connected`` (the
    negative-label vertices induce a connected subgraph), and
    ``zero-adjacency`` (a zero label only touches labels -1 and 1). Shape
    problems are reported under ``origin`` and ``tree``.
    """
    violations = structure_violations(tree)

    for i, j in sorted(tree.edges):
        a, b = tree.kbar(i), tree.kbar(j)
        if gcd(a, b) != 1:
            violations.append(
                Violation(
                    rule="gcd",
                    vertices=(i, j),
                    message=f"gcd({a}, {b}) = {gcd(a, b)} across edge ({i}, {j})",
                )
            )

    negative = [v.id for v in tree.vertices if v.kbar < 0]
    components = connected_components(tree, negative)
    if len(components) > 1:
        violations.append(
            Violation(
                rule="negative-connected",
                vertices=tuple(sorted(negative)),
                message=f"negative-label vertices split into {len(components)} components",
            )
        )

    for vertex in tree.vertices:
        if vertex.kbar != 0:
            continue
        bad = [u for u in tree.neighbors(vertex.id) if tree.kbar(u) not in (-1, 1)]
        if bad:
            violations.append(
                Violation(
                    rule="zero-adjacency",
                    vertices=(vertex.id, *bad),
                    message=f"zero-label vertex {vertex.id} is adjacent to labels "
                    f"{[tree.kbar(u) for u in bad]}",
                )
            )
    return violations


def adjunction_self_int(tree: CurveTree, v: int) -> Optional[Fraction]:
    """Self-intersection recovered from labels via adjunction.

    ``kbar_v * E_v^2 + sum(kbar_u for u adjacent) = -2 + deg(v)``. Returns
    ``None`` when ``kbar_v = 0``, where the labels do not determine it.
    """
    a = tree.kbar(v)
    if a == 0:
        return None
    neighbors = tree.neighbors(v)
    return Fraction(-2 + len(neighbors) - sum(tree.kbar(u) for u in neighbors), a)


def adjacent_large_labels(tree: CurveTree) -> List[Violation]:
    """Adjacent vertices sharing a label >= 2 (impossible on legal trees)."""
    return [
        Violation(rule="local-max", vertices=(i, j), message=f"equal labels {tree.kbar(i)} >= 2")
        for i, j in sorted(tree.edges)
        if tree.kbar(i) == tree.kbar(j) >= 2
    ]
