"""Canonical labeling and automorphism counting.

canonical_form uses individualization-refinement: refine an ordered
partition to equitability, branch on the first non-singleton cell, and
keep the lexicographically least adjacency encoding over all leaves.
Automorphisms discovered when two leaves collide prune sibling branches
(orbit pruning restricted to generators fixing the individualized
prefix), which keeps highly symmetric graphs from exploding.

automorphism_order is computed by a separate stabilizer chain: |Aut| is
the product over v of the orbit size of v under the subgroup fixing
0..v-1 pointwise, each membership decided by a color-pruned backtracking
search.
"""

from __future__ import annotations

from functools import lru_cache

from .graph6 import graph6_encode
from .graphs import Graph, _bits


def _refine(rows: tuple[int, ...], cells: list[int]) -> list[int]:
    """Coarsest equitable ordered partition refining cells."""
    cells = list(cells)
    queue = list(cells)
    while queue:
        splitter = queue.pop()
        new_cells: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:  # singleton
                new_cells.append(cell)
                continue
            groups: dict[int, int] = {}
            for v in _bits(cell):
                key = (rows[v] & splitter).bit_count()
                groups[key] = groups.get(key, 0) | (1 << v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                for key in sorted(groups):
                    part = groups[key]
                    new_cells.append(part)
                    queue.append(part)
        cells = new_cells
    return cells


def _encode(rows: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    """Adjacency rows after placing vertex order[i] at position i."""
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    out = []
    for v in order:
        acc = 0
        for w in _bits(rows[v]):
            acc |= 1 << pos[w]
        out.append(acc)
    return tuple(out)


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    """Union-find roots of the vertex orbits under the group gens generate."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                parent[a] = b
    return [find(v) for v in range(n)]


def _canonical_order(g: Graph) -> list[int]:
    rows = g.rows
    n = g.n
    best_enc: tuple[int, ...] | None = None
    best_order: list[int] | None = None
    autos: list[tuple[int, ...]] = []

    def descend(cells: list[int], fixed: tuple[int, ...]) -> None:
        nonlocal best_enc, best_order
        cells = _refine(rows, cells)
        target = next((c for c in cells if c & (c - 1)), 0)
        if not target:
            order = [c.bit_length() - 1 for c in cells]
            enc = _encode(rows, order)
            if best_enc is None or enc < best_enc:
                best_enc, best_order = enc, order
            elif enc == best_enc:
                perm = [0] * n
                for i in range(n):
                    perm[best_order[i]] = order[i]
                autos.append(tuple(perm))
            return
        idx = cells.index(target)
        rest = cells[idx + 1:]
        head = cells[:idx]
        tried: list[int] = []
        for v in _bits(target):
            if tried and autos:
                gens = [p for p in autos if all(p[x] == x for x in fixed)]
                if gens:
                    roots = _orbit_roots(n, gens)
                    if any(roots[v] == roots[u] for u in tried):
                        continue
            tried.append(v)
            descend(head + [1 << v, target & ~(1 << v)] + rest, fixed + (v,))

    descend([g.vertex_mask], ())
    assert best_order is not None
    return best_order


def canonical_relabeling(g: Graph) -> tuple[int, ...]:
    """Permutation old -> new realizing the canonical form."""
    order = _canonical_order(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return tuple(perm)


def canonical_form(g: Graph) -> Graph:
    """Canonical representative of g's isomorphism class.

    Isomorphic inputs map to identical outputs, the output is a
    relabeling of the input, and the map is idempotent.
    """
    return g.relabel(canonical_relabeling(g))


def canonical_graph6(g: Graph) -> str:
    return graph6_encode(canonical_form(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=4096)
def _color_classes(g: Graph) -> tuple[int, ...]:
    cells = _refine(g.rows, [g.vertex_mask])
    color = [0] * g.n
    for i, cell in enumerate(cells):
        for v in _bits(cell):
            color[v] = i
    return tuple(color)


def _extends_to_automorphism(g: Graph, forced: dict[int, int]) -> bool:
    """Is there an automorphism of g extending the partial map forced?"""
    n = g.n
    rows = g.rows
    color = _color_classes(g)

    image = [-1] * n
    used = 0
    for a, b in forced.items():
        if color[a] != color[b] or used >> b & 1:
            return False
        image[a] = b
        used |= 1 << b

    def consistent(v: int, w: int) -> bool:
        # w must relate to every already-placed image exactly as v does
        for u in range(n):
            t = image[u]
            if t == -1 or u == v:
                continue
            if (rows[v] >> u & 1) != (rows[w] >> t & 1):
                return False
        return True

    for a in forced:
        if not consistent(a, image[a]):
            return False

    todo = [v for v in range(n) if image[v] == -1]

    def rec(i: int, used: int) -> bool:
        if i == len(todo):
            return True
        v = todo[i]
        for w in range(n):
            if used >> w & 1 or color[w] != color[v]:
                continue
            if consistent(v, w):
                image[v] = w
                if rec(i + 1, used | 1 << w):
                    return True
                image[v] = -1
        return False

    return rec(0, used)


@lru_cache(maxsize=4096)
def automorphism_order(g: Graph) -> int:
    """|Aut(g)| via the orbit-stabilizer chain over vertices 0, 1, ..."""
    order = 1
    fixed: dict[int, int] = {}
    for v in range(g.n):
        orbit = 0
        for u in range(g.n):
            probe = dict(fixed)
            probe[v] = u
            if _extends_to_automorphism(g, probe):
                orbit += 1
        order *= orbit
        fixed[v] = v
    return order
