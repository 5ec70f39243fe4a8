import sys
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

import pytest
from hypothesis import strategies as st

from domsat import (
    complete_graph,
    cycle_graph,
    from_edges,
    path_graph,
    star_graph,
)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return from_edges(n, edges)


@pytest.fixture(scope="session")
def pool():
    """The named pattern pool used across the property batteries."""
    return {
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "K1,3": star_graph(3),
    }
