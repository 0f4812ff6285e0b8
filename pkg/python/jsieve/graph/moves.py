"""The two blowup moves and script replay."""

import logging
from typing import Iterable, Tuple

from jsieve.exceptions import JsieveError, NotAnEdgeError, ScriptError
from jsieve.models.script import BlowupScript, EdgeBlowup, PointBlowup, Step
from jsieve.models.tree import CurveTree, Edge, Vertex, normalize_edge

logger = logging.getLogger(__name__)

ORIGIN_KBAR = -2
ORIGIN_SELF_INT = 1


def build_tree(vertices: Iterable[Vertex], edges: Iterable[Edge]) -> CurveTree:
    """Assemble a tree from already-valid parts without re-validating."""
    return CurveTree.model_construct(
        vertices=tuple(sorted(vertices, key=lambda v: v.id)), edges=frozenset(edges)
    )


def initial_tree() -> CurveTree:
    """The line at infinity on the projective plane."""
    origin = Vertex(id=0, kbar=ORIGIN_KBAR, self_int=ORIGIN_SELF_INT, is_origin=True)
    return build_tree([origin], [])


def _decremented(vertex: Vertex) -> Vertex:
    return vertex.model_copy(update={"self_int": vertex.self_int - 1})


def blowup_point(tree: CurveTree, v: int) -> CurveTree:
    """Blow up a general point on curve ``v``.

    The new curve is a leaf on ``v`` labeled ``kbar(v) + 1``; the strict
    transform of ``v`` loses one from its self-intersection.
    """
    parent = tree.vertex(v)
    new = Vertex(id=tree.next_id, kbar=parent.kbar + 1, self_int=-1)
    vertices = [_decremented(x) if x.id == v else x for x in tree.vertices]
    vertices.append(new)
    return build_tree(vertices, tree.edges | {(v, new.id)})


def blowup_edge(tree: CurveTree, i: int, j: int) -> CurveTree:
    """Blow up the intersection point of adjacent curves ``i`` and ``j``."""
    vi, vj = tree.vertex(i), tree.vertex(j)
    edge = normalize_edge(i, j)
    if edge not in tree.edges:
        raise NotAnEdgeError(i, j)
    new = Vertex(id=tree.next_id, kbar=vi.kbar + vj.kbar, self_int=-1)
    vertices = [_decremented(x) if x.id in edge else x for x in tree.vertices]
    vertices.append(new)
    # new ids exceed every existing id, so (x, new.id) is already normalized
    edges = (tree.edges - {edge}) | {(i, new.id), (j, new.id)}
    return build_tree(vertices, edges)


def apply_step(tree: CurveTree, step: Step) -> CurveTree:
    if isinstance(step, PointBlowup):
        return blowup_point(tree, step.vertex)
    if isinstance(step, EdgeBlowup):
        return blowup_edge(tree, step.i, step.j)
    raise ScriptError(f"unknown step {step!r}")


def replay(script: BlowupScript) -> CurveTree:
    """Fold the script's steps over the initial tree."""
    tree = initial_tree()
    for number, step in enumerate(script.steps, start=1):
        try:
            tree = apply_step(tree, step)
        except ScriptError:
            raise
        except JsieveError as e:
            raise ScriptError(f"step {number} ({step.to_text()}) failed", None, e.message) from e
    logger.debug(f"Replayed {len(script)} steps into a tree with {tree.size} vertices")
    return tree


def one_step_moves(tree: CurveTree) -> Tuple[Step, ...]:
    """Every legal next step: a point blowup per vertex, an edge blowup per edge."""
    points = tuple(PointBlowup(vertex=v) for v in tree.ids)
    edges = tuple(EdgeBlowup(i=i, j=j) for i, j in sorted(tree.edges))
    return points + edges
