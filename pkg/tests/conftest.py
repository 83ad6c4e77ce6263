import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from seghyp.search import generate_intersecting, generate_random


@pytest.fixture(scope="session")
def random_batches():
    """200 seeded random instances per r in {3,4,5} (shared across acceptance checks)."""
    out = {}
    for r, box in ((3, 5), (4, 6), (5, 6)):
        out[r] = [generate_random(r, 5, box, seed=s) for s in range(200)]
    return out


@pytest.fixture(scope="session")
def intersecting_batches():
    """200 seeded intersecting instances per r in {3,4,5}."""
    out = {}
    for r, box in ((3, 5), (4, 6), (5, 6)):
        out[r] = [generate_intersecting(r, 5, box, seed=s) for s in range(200)]
    return out


@pytest.fixture(scope="session")
def oracle_instances():
    """100 seeded instances small enough for exhaustive oracles: |V| <= 12, |E| <= 8."""
    specs = []
    for s in range(34):
        specs.append((2, 5, 3, s))
    for s in range(33):
        specs.append((3, 4, 3, 100 + s))
    for s in range(33):
        specs.append((4, 3, 3, 200 + s))
    out = []
    for r, edges, box, seed in specs:
        H = generate_random(r, edges, box, seed=seed)
        assert len(H.vertex_index) <= 12 and len(H.edges) <= 8
        out.append(H)
    return out
