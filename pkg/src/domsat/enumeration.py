"""Isomorphism-free enumeration of small graphs by edge count.

Graphs on n vertices are generated level by level: the classes with m
edges are the canonical forms of every one-edge extension of the classes
with m-1 edges, deduplicated.  Levels are cached per n and streamed in a
deterministic order, so repeated sweeps are cheap.

The independent anti-hallucination oracle lives in oracle.py and shares
no code with this path.
"""

from __future__ import annotations

import threading
from typing import Iterator

from .canon import canonical_form
from .graph6 import graph6_encode
from .graphs import Graph, empty_graph

MAX_ENUM_VERTICES = 10

_levels: dict[int, list[list[Graph]]] = {}
_levels_lock = threading.Lock()


def _extend_levels(n: int, m: int) -> list[list[Graph]]:
    with _levels_lock:
        levels = _levels.setdefault(n, [[empty_graph(n)]])
        while len(levels) <= m:
            seen: set[Graph] = set()
            nxt: list[Graph] = []
            for parent in levels[-1]:
                for e in parent.non_edges():
                    child = canonical_form(parent.add_edge(*e))
                    if child not in seen:
                        seen.add(child)
                        nxt.append(child)
            nxt.sort(key=graph6_encode)
            levels.append(nxt)
    return levels


def enumerate_graphs(n: int, m: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of n-vertex
    m-edge graphs, in a fixed deterministic order."""
    if not 1 <= n <= MAX_ENUM_VERTICES:
        raise ValueError(f"enumeration supports 1..{MAX_ENUM_VERTICES} vertices")
    if not 0 <= m <= n * (n - 1) // 2:
        raise ValueError(f"edge count {m} outside 0..{n * (n - 1) // 2}")
    yield from _extend_levels(n, m)[m]


def class_count(n: int, m: int) -> int:
    return len(_extend_levels(n, m)[m])


def all_classes(n: int) -> Iterator[Graph]:
    """Every isomorphism class on exactly n vertices, by edge count."""
    for m in range(n * (n - 1) // 2 + 1):
        yield from enumerate_graphs(n, m)


def enumerate_trees(n: int) -> list[Graph]:
    """Tree isomorphism classes on n vertices."""
    from .graphs import is_connected

    if n == 1:
        return [empty_graph(1)]
    return [g for g in enumerate_graphs(n, n - 1) if is_connected(g)]
