"""Backtracking subgraph-embedding search.

An embedding maps pattern vertices injectively into a host so that every
pattern edge lands on a host edge (non-induced semantics: extra host
edges among image vertices are fine).  This kernel powers every
saturation predicate: existence, existence through a prescribed host
edge, and exact copy counting.
"""

from __future__ import annotations

from functools import lru_cache

from .canon import automorphism_order
from .graphs import Graph, _bits


@lru_cache(maxsize=1024)
def _pattern_order(pattern: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Search order and earlier-neighbor masks for a pattern.

    Vertices are ordered component by component, highest degree first,
    then by how many already-ordered neighbors they have; isolated
    vertices go last.  Returns (order, back_masks) where back_masks[i]
    is the bitmask of order[0..i-1] entries adjacent to order[i].
    """
    degs = pattern.degrees()
    order: list[int] = []
    placed = 0
    while len(order) < pattern.n:
        remaining = [v for v in range(pattern.n) if not placed >> v & 1]
        # most constrained next: maximize (placed neighbors, degree)
        best = max(
            remaining,
            key=lambda v: ((pattern.rows[v] & placed).bit_count(), degs[v], -v),
        )
        order.append(best)
        placed |= 1 << best
    back = []
    seen = 0
    for v in order:
        back.append(pattern.rows[v] & seen)
        seen |= 1 << v
    return tuple(order), tuple(back)


def is_valid_embedding(pattern: Graph, host: Graph, mapping: tuple[int, ...]) -> bool:
    """Check the embedding invariants: injective and edge-preserving."""
    if len(mapping) != pattern.n:
        return False
    if len(set(mapping)) != pattern.n:
        return False
    if any(not 0 <= x < host.n for x in mapping):
        return False
    return all(host.has_edge(mapping[a], mapping[b]) for a, b in pattern.edges())


def _extend(
    pattern: Graph,
    host: Graph,
    order: tuple[int, ...],
    back: tuple[int, ...],
    image: list[int],
    pos: dict[int, int],
    used: int,
    depth: int,
    deg_ok: tuple[int, ...],
) -> tuple[int, ...] | None:
    if depth == len(order):
        out = [0] * pattern.n
        for i, pv in enumerate(order):
            out[pv] = image[i]
        return tuple(out)
    pv = order[depth]
    mask = deg_ok[pv] & ~used
    for i in _bits(back[depth]):
        mask &= host.rows[image[pos[i]]]
        if not mask:
            return None
    for hv in _bits(mask):
        image[depth] = hv
        found = _extend(pattern, host, order, back, image, pos, used | 1 << hv, depth + 1, deg_ok)
        if found is not None:
            return found
    return None


def _deg_masks(pattern: Graph, host: Graph) -> tuple[int, ...]:
    """deg_ok[pv] = host vertices with degree >= deg(pv)."""
    hdegs = host.degrees()
    out = []
    for pv in range(pattern.n):
        need = pattern.degree(pv)
        acc = 0
        for hv, d in enumerate(hdegs):
            if d >= need:
                acc |= 1 << hv
        out.append(acc)
    return tuple(out)


def embedding_exists(pattern: Graph, host: Graph) -> tuple[int, ...] | None:
    """First embedding of pattern into host, or None.

    The returned tuple maps pattern vertex i to host vertex tuple[i].
    """
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return None
    order, back = _pattern_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    deg_ok = _deg_masks(pattern, host)
    if any(not m for m in deg_ok):
        return None
    return _extend(pattern, host, order, back, [0] * pattern.n, pos, 0, 0, deg_ok)


@lru_cache(maxsize=1024)
def _anchored_orders(pattern: Graph, a: int, b: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Search order starting with the fixed pattern vertices a then b."""
    degs = pattern.degrees()
    order = [a, b]
    placed = (1 << a) | (1 << b)
    while len(order) < pattern.n:
        remaining = [v for v in range(pattern.n) if not placed >> v & 1]
        best = max(
            remaining,
            key=lambda v: ((pattern.rows[v] & placed).bit_count(), degs[v], -v),
        )
        order.append(best)
        placed |= 1 << best
    back = []
    seen = 0
    for v in order:
        back.append(pattern.rows[v] & seen)
        seen |= 1 << v
    return tuple(order), tuple(back)


def copy_through_edge(
    pattern: Graph, host: Graph, e: tuple[int, int]
) -> tuple[int, ...] | None:
    """Embedding of pattern whose image edge set contains host edge e.

    Every pattern edge is anchored onto e in both orientations before the
    search extends, so existence is decided without enumerating copies.
    Raises ValueError when e is not an edge of host.
    """
    u, v = e
    if not host.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of the host")
    if pattern.n > host.n:
        return None
    deg_ok = _deg_masks(pattern, host)
    for a, b in pattern.edges():
        for pa, pb, hu, hv in ((a, b, u, v), (a, b, v, u)):
            if pattern.degree(pa) > host.degree(hu) or pattern.degree(pb) > host.degree(hv):
                continue
            order, back = _anchored_orders(pattern, pa, pb)
            pos = {x: i for i, x in enumerate(order)}
            image = [0] * pattern.n
            image[0], image[1] = hu, hv
            found = _extend(
                pattern, host, order, back, image, pos,
                (1 << hu) | (1 << hv), 2, deg_ok,
            )
            if found is not None:
                return found
    return None


def _count_all(pattern: Graph, host: Graph) -> int:
    order, back = _pattern_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    deg_ok = _deg_masks(pattern, host)
    if any(not m for m in deg_ok):
        return 0
    image = [0] * pattern.n
    total = 0
    n_p = pattern.n

    def rec(depth: int, used: int) -> None:
        nonlocal total
        if depth == n_p:
            total += 1
            return
        pv = order[depth]
        mask = deg_ok[pv] & ~used
        for i in _bits(back[depth]):
            mask &= host.rows[image[pos[i]]]
            if not mask:
                return
        for hv in _bits(mask):
            image[depth] = hv
            rec(depth + 1, used | 1 << hv)

    rec(0, 0)
    return total


def count_embeddings(pattern: Graph, host: Graph) -> int:
    """Number of injective edge-preserving maps pattern -> host."""
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return 0
    return _count_all(pattern, host)


def count_copies(pattern: Graph, host: Graph) -> int:
    """Number of distinct subgraphs of host isomorphic to pattern.

    Computed as embeddings / |Aut(pattern)|, which identifies copies by
    their vertex-and-edge image; for patterns without isolated vertices
    this coincides with counting distinct edge sets.
    """
    emb = count_embeddings(pattern, host)
    if emb == 0:
        return 0
    aut = automorphism_order(pattern)
    copies, rem = divmod(emb, aut)
    if rem:
        raise AssertionError("embedding count not divisible by automorphism order")
    return copies
