"""Rooted canonical form of curve trees (AHU encoding rooted at the origin)."""

from typing import Dict, List, Mapping

import networkx as nx
from jsieve.models.tree import CurveTree, Vertex, normalize_edge


def _encode(tree: CurveTree, root: int) -> str:
    G = tree.graph
    children: Dict[int, List[str]] = {v: [] for v in G.nodes}
    parent = nx.dfs_predecessors(G, source=root)
    codes: Dict[int, str] = {}
    for v in nx.dfs_postorder_nodes(G, source=root):
        vertex = G.nodes[v]
        codes[v] = f"({vertex['kbar']},{vertex['self_int']}{''.join(sorted(children[v]))})"
        if v in parent:
            children[parent[v]].append(codes[v])
    return codes[root]


def canonical_key(tree: CurveTree) -> bytes:
    """Isomorphism-invariant key.

    Each vertex is encoded as ``(kbar, self_int, sorted child codes)`` with the
    origin as root; two trees share a key iff a label- and root-preserving
    isomorphism exists between them.
    """
    return _encode(tree, tree.origin.id).encode("ascii")


def relabeled(tree: CurveTree, mapping: Mapping[int, int]) -> CurveTree:
    """Copy of ``tree`` with vertex ids renamed by ``mapping`` (a bijection)."""
    vertices = [
        Vertex(id=mapping[v.id], kbar=v.kbar, self_int=v.self_int, is_origin=v.is_origin)
        for v in tree.vertices
    ]
    edges = {normalize_edge(mapping[i], mapping[j]) for i, j in tree.edges}
    return CurveTree.model_construct(
        vertices=tuple(sorted(vertices, key=lambda v: v.id)), edges=frozenset(edges)
    )
