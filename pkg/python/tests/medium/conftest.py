"""Configuration and fixtures for medium-sized corpus and oracle tests."""

import random
from typing import Dict, List

import pytest
from jsieve.search import Visit, enumerate_trees

SEED = 20240617


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator so fixed-size corpora are reproducible."""
    return random.Random(SEED)


@pytest.fixture(scope="session")
def visits_by_depth() -> Dict[int, List[Visit]]:
    """Every isomorphism class up to five blowups, grouped by depth."""
    grouped: Dict[int, List[Visit]] = {}
    for visit in enumerate_trees(5):
        grouped.setdefault(visit.depth, []).append(visit)
    return grouped
