"""Isomorph-free enumeration of blowup trees by extension of canonical representatives."""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Tuple

from jsieve.exceptions import ResourceLimitError
from jsieve.graph.canonical import canonical_key
from jsieve.graph.moves import apply_step, initial_tree, one_step_moves, replay
from jsieve.models.script import BlowupScript
from jsieve.models.tree import CurveTree

logger = logging.getLogger(__name__)


class Visit(NamedTuple):
    """One isomorphism class with its witness script."""

    depth: int
    key: bytes
    script: BlowupScript
    tree: CurveTree


def _children(script_text: str) -> List[Tuple[bytes, str]]:
    """(key, script text) for every one-step blowup of the witness tree."""
    script = BlowupScript.parse(script_text)
    tree = replay(script)
    found = []
    for step in one_step_moves(tree):
        child = apply_step(tree, step)
        found.append((canonical_key(child), script.then(step).to_text()))
    return found


def _merge(batches, level: Dict[bytes, str]) -> None:
    # the smallest script text wins, whatever the batch order
    for batch in batches:
        for key, text in batch:
            if key not in level or text < level[key]:
                level[key] = text


def _chunks(items: List[str], count: int) -> List[List[str]]:
    size = max(1, -(-len(items) // count))
    return [items[k : k + size] for k in range(0, len(items), size)]


def _expand_chunk(texts: List[str]) -> List[Tuple[bytes, str]]:
    out = []
    for text in texts:
        out.extend(_children(text))
    return out


def enumerate_trees(
    max_blowups: int,
    visitor: Optional[Callable[[Visit], None]] = None,
    workers: int = 1,
    max_trees: Optional[int] = None,
) -> Iterator[Visit]:
    """Yield every realizable tree with at most ``max_blowups`` blowups, once per isomorphism class.

    Trees come depth by depth, sorted by canonical key within a depth. The
    frontier of each depth is split across ``workers`` processes; the result
    does not depend on the split.

    Args:
        max_blowups: Deepest level to visit.
        visitor: Called with each visit before it is yielded.
        workers: Worker processes for frontier expansion.
        max_trees: Raise ``ResourceLimitError`` once this many trees were visited.
    """
    if max_blowups < 0:
        raise ValueError("max_blowups must be non-negative")
    start = initial_tree()
    level: Dict[bytes, str] = {canonical_key(start): ""}
    visited = 0
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for depth in range(max_blowups + 1):
            for key in sorted(level):
                if max_trees is not None and visited >= max_trees:
                    raise ResourceLimitError(
                        f"Tree limit {max_trees} reached", f"stopped at depth {depth}"
                    )
                script = BlowupScript.parse(level[key])
                visit = Visit(depth=depth, key=key, script=script, tree=replay(script))
                visited += 1
                if visitor is not None:
                    visitor(visit)
                yield visit
            logger.info(f"Depth {depth}: {len(level)} trees")
            if depth == max_blowups:
                break
            frontier = [level[key] for key in sorted(level)]
            following: Dict[bytes, str] = {}
            if executor is None:
                _merge(map(_children, frontier), following)
            else:
                _merge(executor.map(_expand_chunk, _chunks(frontier, workers)), following)
            level = following
    finally:
        if executor is not None:
            executor.shutdown()


def count_by_depth(max_blowups: int, workers: int = 1) -> Dict[int, int]:
    """Number of isomorphism classes at each exact depth."""
    counts = {depth: 0 for depth in range(max_blowups + 1)}
    for visit in enumerate_trees(max_blowups, workers=workers):
        counts[visit.depth] += 1
    return counts
