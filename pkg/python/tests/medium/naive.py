"""Independent enumerator: every move on every tree, deduplicated by pairwise isomorphism."""

from collections import defaultdict
from typing import Dict, List

import networkx as nx
from jsieve.graph.moves import apply_step, initial_tree, one_step_moves
from jsieve.models import CurveTree


def to_networkx(tree: CurveTree) -> nx.Graph:
    """Labeled networkx copy of a curve tree."""
    graph = nx.Graph()
    for vertex in tree.vertices:
        graph.add_node(vertex.id, labels=(vertex.kbar, vertex.self_int, vertex.is_origin))
    graph.add_edges_from(tree.edges)
    return graph


def _bucket(graph: nx.Graph) -> tuple:
    return tuple(sorted((data["labels"], graph.degree(v)) for v, data in graph.nodes(data=True)))


def _same(a: nx.Graph, b: nx.Graph) -> bool:
    return nx.is_isomorphic(a, b, node_match=lambda x, y: x["labels"] == y["labels"])


def naive_counts(max_blowups: int) -> Dict[int, int]:
    """Isomorphism classes per exact depth, found without canonical keys."""
    level: List[CurveTree] = [initial_tree()]
    counts = {0: 1}
    for depth in range(1, max_blowups + 1):
        buckets: Dict[tuple, List[nx.Graph]] = defaultdict(list)
        following: List[CurveTree] = []
        for tree in level:
            for step in one_step_moves(tree):
                child = apply_step(tree, step)
                graph = to_networkx(child)
                seen = buckets[_bucket(graph)]
                if not any(_same(graph, other) for other in seen):
                    seen.append(graph)
                    following.append(child)
        counts[depth] = len(following)
        level = following
    return counts
