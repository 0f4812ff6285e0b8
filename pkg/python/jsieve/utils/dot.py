"""Graphviz DOT export of curve trees."""

from typing import Optional

from graphviz import Graph
from jsieve.models.assignment import TypeAssignment
from jsieve.models.divisor import DivisorClass, format_rational
from jsieve.models.tree import CurveTree


def tree_graph(
    tree: CurveTree,
    assignment: Optional[TypeAssignment] = None,
    L: Optional[DivisorClass] = None,
    Delta: Optional[DivisorClass] = None,
    name: str = "curves",
) -> Graph:
    """Build an undirected ``graphviz.Graph`` of ``tree``.

    Vertices are labeled ``id: kbar/self_int/type`` (type ``-`` when no
    assignment is given); L and Delta coefficients go in ``xlabel``. The
    origin is drawn as a double circle.
    """
    dot = Graph(name=name, node_attr={"shape": "circle"})
    for vertex in tree.vertices:
        curve_type = "-"
        if assignment is not None and vertex.id in assignment.types:
            curve_type = str(int(assignment.type_of(vertex.id)))
        attrs = {}
        extra = []
        if L is not None:
            extra.append(f"L={format_rational(L.coefficient(vertex.id))}")
        if Delta is not None:
            extra.append(f"D={format_rational(Delta.coefficient(vertex.id))}")
        if extra:
            attrs["xlabel"] = " ".join(extra)
        if vertex.is_origin:
            attrs["shape"] = "doublecircle"
        dot.node(
            str(vertex.id), f"{vertex.id}: {vertex.kbar}/{vertex.self_int}/{curve_type}", **attrs
        )
    for i, j in sorted(tree.edges):
        dot.edge(str(i), str(j))
    return dot


def export_dot(
    tree: CurveTree,
    assignment: Optional[TypeAssignment] = None,
    L: Optional[DivisorClass] = None,
    Delta: Optional[DivisorClass] = None,
    name: str = "curves",
) -> str:
    """DOT source of :func:`tree_graph`."""
    return tree_graph(tree, assignment, L, Delta, name).source
