"""Curve tree models: vertices labeled by K-bar label and self-intersection."""

from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
from jsieve.exceptions import InputError, UnknownVertexError
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_serializer,
    field_validator,
    model_validator,
)

Edge = Tuple[int, int]


def normalize_edge(i: int, j: int) -> Edge:
    """Return the unordered pair ``{i, j}`` as a sorted tuple."""
    return (i, j) if i < j else (j, i)


class Vertex(BaseModel):
    """One exceptional curve (or the strict transform of the line at infinity)."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    id: int = Field(..., ge=0, description="Creation-ordered vertex id")
    kbar: int = Field(..., description="Coefficient in the augmented canonical class")
    self_int: int = Field(..., description="Self-intersection number")
    is_origin: bool = Field(False, alias="origin", description="Strict transform of infinity")


class CurveTree(BaseModel):
    """Labeled tree of curves at infinity.

    Vertices are kept sorted by id and edges as sorted pairs. The model only
    checks referential integrity; tree shape and label rules are reported by
    ``jsieve.graph.invariants.check_invariants``.
    """

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[Vertex, ...]
    edges: FrozenSet[Edge] = Field(default_factory=frozenset)

    @field_validator("vertices")
    def sort_vertices(cls, v):  # pylint: disable=no-self-argument
        """Order vertices by id and reject duplicate ids."""
        ordered = tuple(sorted(v, key=lambda vertex: vertex.id))
        ids = [vertex.id for vertex in ordered]
        if len(set(ids)) != len(ids):
            raise ValueError("Duplicate vertex ids")
        return ordered

    @field_validator("edges", mode="before")
    def normalize_edges(cls, v):  # pylint: disable=no-self-argument
        """Accept ``[[i, j], ...]`` in any orientation."""
        normalized = set()
        for pair in v:
            i, j = pair
            if i == j:
                raise ValueError(f"Self-loop at vertex {i}")
            normalized.add(normalize_edge(int(i), int(j)))
        return frozenset(normalized)

    @model_validator(mode="after")
    def check_edge_endpoints(self):
        """Every edge endpoint must be a vertex."""
        known = {vertex.id for vertex in self.vertices}
        for i, j in self.edges:
            if i not in known or j not in known:
                raise ValueError(f"Edge ({i}, {j}) references an unknown vertex")
        return self

    @field_serializer("edges")
    def serialize_edges(self, edges: FrozenSet[Edge]) -> List[List[int]]:
        return [list(edge) for edge in sorted(edges)]

    # Lookups

    @cached_property
    def by_id(self) -> Dict[int, Vertex]:
        return {vertex.id: vertex for vertex in self.vertices}

    @cached_property
    def graph(self) -> nx.Graph:
        """Undirected graph view; nodes carry ``kbar`` and ``self_int`` attributes.

        Treat it as read-only, it is shared by every caller.
        """
        G = nx.Graph()
        G.add_nodes_from(
            (vertex.id, {"kbar": vertex.kbar, "self_int": vertex.self_int})
            for vertex in self.vertices
        )
        G.add_edges_from(sorted(self.edges))
        return G

    @cached_property
    def adjacency(self) -> Dict[int, Tuple[int, ...]]:
        """Sorted neighbor ids per vertex id."""
        return {vid: tuple(sorted(self.graph.neighbors(vid))) for vid in self.graph.nodes}

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(vertex.id for vertex in self.vertices)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def next_id(self) -> int:
        return max(self.ids) + 1 if self.vertices else 0

    @cached_property
    def origin(self) -> Vertex:
        """The unique origin vertex."""
        origins = [vertex for vertex in self.vertices if vertex.is_origin]
        if len(origins) != 1:
            raise InputError("Tree must have exactly one origin vertex", f"found {len(origins)}")
        return origins[0]

    def vertex(self, vid: int) -> Vertex:
        try:
            return self.by_id[vid]
        except KeyError:
            raise UnknownVertexError(vid) from None

    def neighbors(self, vid: int) -> Tuple[int, ...]:
        try:
            return self.adjacency[vid]
        except KeyError:
            raise UnknownVertexError(vid) from None

    def degree(self, vid: int) -> int:
        return len(self.neighbors(vid))

    def has_edge(self, i: int, j: int) -> bool:
        return normalize_edge(i, j) in self.edges

    def kbar(self, vid: int) -> int:
        return self.vertex(vid).kbar

    def self_int(self, vid: int) -> int:
        return self.vertex(vid).self_int

    # Serialization

    def to_json(self, indent: Optional[int] = None) -> str:
        return self.model_dump_json(by_alias=True, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "CurveTree":
        """Parse the tree JSON format, converting validation failures to input errors."""
        try:
            return cls.model_validate_json(text)
        except ValidationError as e:
            raise InputError("Invalid tree JSON", str(e)) from None
