"""Small immutable simple graphs stored as bitmask adjacency rows.

Vertices are 0..n-1 with n <= 64, so each adjacency row fits in one
machine word and neighborhood algebra is plain integer bit twiddling.
Every other module builds on the Graph type defined here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

# Vertex connectivity is decided by exhaustive cut enumeration up to this
# order and by unit-capacity max-flow above it; tests cross-check the two
# on the overlap.
_BRUTE_CONNECTIVITY_LIMIT = 16


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    rows[v] is the neighbor bitmask of v.  The relation is symmetric with
    an empty diagonal; both are enforced at construction time.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise ValueError("adjacency row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u in range(self.n):
            for v in _bits(self.rows[u]):
                if not self.rows[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency at ({u}, {v})")

    # -- basic queries ---------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def min_degree(self) -> int:
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees())

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)
            for v in _bits(row):
                out.append((u, v))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        """All non-adjacent pairs (u, v), u < v, lexicographic order."""
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.rows[u] >> v & 1:
                    out.append((u, v))
        return out

    # -- derived graphs --------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("cannot add a self-loop")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply the vertex relabeling v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabeling is not a permutation of 0..n-1")
        rows = [0] * self.n
        for v in range(self.n):
            pv = perm[v]
            acc = 0
            for w in _bits(self.rows[v]):
                acc |= 1 << perm[w]
            rows[pv] = acc
        return Graph(self.n, tuple(rows))

    def subgraph(self, mask: int) -> "Graph":
        """Induced subgraph on the vertices of mask, compactly relabeled.

        Kept vertices keep their relative order.
        """
        verts = list(_bits(mask & self.vertex_mask))
        if not verts:
            raise ValueError("subgraph on an empty vertex set")
        index = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            acc = 0
            for w in _bits(self.rows[v] & mask):
                acc |= 1 << index[w]
            rows.append(acc)
        return Graph(len(verts), tuple(rows))

    def complement(self) -> "Graph":
        full = self.vertex_mask
        rows = tuple((full & ~self.rows[v]) & ~(1 << v) for v in range(self.n))
        return Graph(self.n, rows)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- constructors ---------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("self-loop in edge list")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: vertex 0 is the center."""
    if leaves < 1:
        raise ValueError("a star needs at least one leaf")
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side labeled 0..a-1."""
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    n = sum(sizes)
    edges = []
    offsets = []
    start = 0
    for s in sizes:
        offsets.append((start, start + s))
        start += s
    for i, (a0, a1) in enumerate(offsets):
        for b0, b1 in offsets[i + 1:]:
            edges.extend((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return from_edges(n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every cross edge.

    g keeps labels 0..g.n-1, h is shifted to g.n..g.n+h.n-1.
    """
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"join would have {n} > {MAX_VERTICES} vertices")
    hmask = ((1 << h.n) - 1) << g.n
    gmask = (1 << g.n) - 1
    rows = [g.rows[v] | hmask for v in range(g.n)]
    rows += [(h.rows[v] << g.n) | gmask for v in range(h.n)]
    return Graph(n, tuple(rows))


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    if not parts:
        raise ValueError("disjoint union of nothing")
    n = sum(p.n for p in parts)
    if n > MAX_VERTICES:
        raise ValueError(f"union would have {n} > {MAX_VERTICES} vertices")
    rows: list[int] = []
    shift = 0
    for p in parts:
        rows.extend(r << shift for r in p.rows)
        shift += p.n
    return Graph(n, tuple(rows))


# -- connectivity ----------------------------------------------------------


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by lowest vertex."""
    remaining = g.vertex_mask
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nbrs = 0
            for v in _bits(frontier):
                nbrs |= g.rows[v]
            frontier = nbrs & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def component_graphs(g: Graph) -> list[Graph]:
    return [g.subgraph(mask) for mask in components(g)]


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_acyclic(g: Graph) -> bool:
    return g.edge_count == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.edge_count == g.n - 1


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Edges whose removal increases the component count (DFS lowpoints)."""
    n = g.n
    disc = [0] * n
    low = [0] * n
    out = []
    timer = 1
    for root in range(n):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int, Iterator[int]]] = [
            (root, -1, _bits(g.rows[root]))
        ]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w]:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, _bits(g.rows[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if parent >= 0:
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] > disc[parent]:
                        out.append((min(parent, v), max(parent, v)))
    return sorted(out)


def _component_count_within(g: Graph, alive: int) -> int:
    count = 0
    remaining = alive
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nbrs = 0
            for v in _bits(frontier):
                nbrs |= g.rows[v]
            frontier = nbrs & alive & ~comp
            comp |= frontier
        count += 1
        remaining &= ~comp
    return count


def _k_connected_brute(g: Graph, k: int) -> bool:
    full = g.vertex_mask
    for size in range(k):
        for cut in combinations(range(g.n), size):
            mask = 0
            for v in cut:
                mask |= 1 << v
            if _component_count_within(g, full & ~mask) >= 2:
                return False
    return True


def _vertex_flow_at_least(g: Graph, s: int, t: int, k: int) -> bool:
    """At least k internally vertex-disjoint s-t paths (split-vertex flow)."""
    # Node encoding: 2v = in-copy, 2v+1 = out-copy; s and t are not split.
    n = g.n
    cap: dict[tuple[int, int], int] = {}

    def arc(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    for v in range(n):
        if v not in (s, t):
            arc(2 * v, 2 * v + 1, 1)
    big = n + 1
    for u in range(n):
        for v in _bits(g.rows[u]):
            tail = 2 * u + 1 if u not in (s, t) else 2 * u
            head = 2 * v if v not in (s, t) else 2 * v
            arc(tail, head, big)

    adj: dict[int, list[int]] = {}
    for (a, b) in cap:
        adj.setdefault(a, []).append(b)

    source, sink = 2 * s, 2 * t
    flow = 0
    while flow < k:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            cur = queue.pop(0)
            for nxt in adj.get(cur, ()):
                if nxt not in parent and cap[(cur, nxt)] > 0:
                    parent[nxt] = cur
                    queue.append(nxt)
        if sink not in parent:
            return False
        cur = sink
        while cur != source:
            prv = parent[cur]
            cap[(prv, cur)] -= 1
            cap[(cur, prv)] += 1
            cur = prv
        flow += 1
    return True


def _k_connected_flow(g: Graph, k: int) -> bool:
    nonadj = g.non_edges()
    if not nonadj:
        return True  # complete graph, no cuts at all
    return all(_vertex_flow_at_least(g, u, v, k) for u, v in nonadj)


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff g has more than k vertices and no vertex cut of size < k.

    K_n has no vertex cut, so it is (n-1)-connected and not n-connected;
    every graph is 0-connected.
    """
    if k < 0:
        raise ValueError("connectivity order must be non-negative")
    if k == 0:
        return True
    if g.n <= k:
        return False
    if g.n <= _BRUTE_CONNECTIVITY_LIMIT:
        return _k_connected_brute(g, k)
    return _k_connected_flow(g, k)


def _k_edge_connected_brute(g: Graph, k: int) -> bool:
    # min over proper vertex subsets of the edge boundary
    full = g.vertex_mask
    for side in range(1, full, 2):  # fix vertex 0 on the S side
        comp = full & ~side
        if not comp:
            continue
        boundary = sum((g.rows[v] & comp).bit_count() for v in _bits(side))
        if boundary < k:
            return False
    return True


def _edge_flow_at_least(g: Graph, s: int, t: int, k: int) -> bool:
    cap: dict[tuple[int, int], int] = {}
    for u in range(g.n):
        for v in _bits(g.rows[u]):
            cap[(u, v)] = 1
    adj: dict[int, list[int]] = {}
    for (a, b) in cap:
        adj.setdefault(a, []).append(b)
    flow = 0
    while flow < k:
        parent = {s: s}
        queue = [s]
        while queue and t not in parent:
            cur = queue.pop(0)
            for nxt in adj.get(cur, ()):
                if nxt not in parent and cap[(cur, nxt)] > 0:
                    parent[nxt] = cur
                    queue.append(nxt)
        if t not in parent:
            return False
        cur = t
        while cur != s:
            prv = parent[cur]
            cap[(prv, cur)] -= 1
            cap[(cur, prv)] += 1  # symmetric arcs exist for undirected edges
            cur = prv
        flow += 1
    return True


def is_k_edge_connected(g: Graph, k: int) -> bool:
    """True iff no edge cut of size < k disconnects g.

    A single vertex cannot be disconnected by edge removal, so K_1 passes
    for every k; a disconnected graph fails for every k >= 1.
    """
    if k < 0:
        raise ValueError("connectivity order must be non-negative")
    if k == 0:
        return True
    if g.n == 1:
        return True
    if g.n <= _BRUTE_CONNECTIVITY_LIMIT:
        return _k_edge_connected_brute(g, k)
    if not is_connected(g):
        return False
    return all(_edge_flow_at_least(g, 0, v, k) for v in range(1, g.n))


# -- structural summary ----------------------------------------------------


@dataclass(frozen=True)
class StructuralSummary:
    """One-shot record of the structural queries the theory layer needs."""

    min_degree: int
    degree_sequence: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    bridges: tuple[tuple[int, int], ...]
    acyclic: bool


def structural_queries(g: Graph) -> StructuralSummary:
    comps = tuple(tuple(_bits(mask)) for mask in components(g))
    return StructuralSummary(
        min_degree=g.min_degree(),
        degree_sequence=tuple(sorted(g.degrees(), reverse=True)),
        components=comps,
        bridges=tuple(bridges(g)),
        acyclic=is_acyclic(g),
    )
