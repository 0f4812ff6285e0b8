"""Test configuration and shared fixtures for small (unit) tests."""

from importlib.resources import files

import pytest
from jsieve.graph.moves import replay
from jsieve.models import BlowupScript, CurveTree, CurveType, TypeAssignment, Vertex


@pytest.fixture
def golden_script_text() -> str:
    """The shipped eleven-curve script."""
    return (files("jsieve") / "data" / "eleven_curves.blowups").read_text()


@pytest.fixture
def golden_tree(golden_script_text) -> CurveTree:
    """Chain 6-1-0-2-5-4-3 with labels 0,-1,-2,-1,-2,-1,0 and 1-leaves 7, 8 on 6 and 9, 10 on 3."""
    return replay(BlowupScript.parse(golden_script_text))


@pytest.fixture
def chain_tree() -> CurveTree:
    """P 0, P 1, P 2: a chain with labels -2, -1, 0, 1."""
    return replay(BlowupScript.parse("P 0\nP 1\nP 2\n"))


@pytest.fixture
def chain_assignment() -> TypeAssignment:
    """The only typing of ``chain_tree`` once type 1 is optional."""
    return TypeAssignment(
        types={
            0: CurveType.POINT_AT_INFINITY,
            1: CurveType.POINT_AT_INFINITY,
            2: CurveType.POINT_AT_INFINITY,
            3: CurveType.AFFINE_CURVE,
        }
    )


@pytest.fixture
def make_tree():
    """Build a tree from ``(id, kbar, self_int)`` triples; id 0 is the origin."""

    def _make(vertices, edges=()):
        return CurveTree(
            vertices=[
                Vertex(id=vid, kbar=kbar, self_int=self_int, is_origin=vid == 0)
                for vid, kbar, self_int in vertices
            ],
            edges=[list(e) for e in edges],
        )

    return _make


@pytest.fixture
def make_types():
    """Build a TypeAssignment from ``{id: int}``."""

    def _make(types):
        return TypeAssignment(types={v: CurveType(t) for v, t in types.items()})

    return _make
