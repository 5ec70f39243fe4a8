"""Exact minimum-edge search over isomorphism classes.

min_edges sweeps edge counts upward from a sound degree floor and tests
every class at each level, so the returned value is certified by
exhaustion below it.  dom-sat hosts are required to have at least one
edge (the domination theory's blanket assumption, without which the
empty graph passes vacuously); the classical saturation variants admit
the empty graph, e.g. every graph is weakly K_2-saturated.

Pruning only ever applies necessary degree conditions; the level sweep
itself is never truncated, and a pruning-off mode exists so soundness
can be checked by comparison.
"""

from __future__ import annotations

import json
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .canon import canonical_form
from .enumeration import enumerate_graphs, enumerate_trees
from .graph6 import graph6_decode, graph6_encode
from .graphs import Graph, component_graphs
from .predicates import (
    PREDICATES,
    lemma_tree_witness,
    run_predicate,
    tree_witness_ok,
)

DEFAULT_MAX_N = 9

SEARCH_PREDICATES = ("saturated", "semi-saturated", "dom-sat", "weakly-saturated")


class SearchCapError(ValueError):
    """Requested order above the configured search cap."""


@dataclass(frozen=True)
class SearchResult:
    pattern: str
    n: int
    predicate: str
    min_edges: int
    witnesses: tuple[str, ...]
    graphs_examined: int
    elapsed: float = field(default=0.0, compare=False)

    def to_json_dict(self, include_elapsed: bool = False) -> dict:
        out = {
            "schema": "domsat/1",
            "pattern": self.pattern,
            "n": self.n,
            "predicate": self.predicate,
            "min_edges": self.min_edges,
            "witnesses": list(self.witnesses),
            "graphs_examined": self.graphs_examined,
        }
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "SearchResult":
        return cls(
            pattern=data["pattern"],
            n=int(data["n"]),
            predicate=data["predicate"],
            min_edges=int(data["min_edges"]),
            witnesses=tuple(data["witnesses"]),
            graphs_examined=int(data["graphs_examined"]),
            elapsed=float(data.get("elapsed", 0.0)),
        )


@dataclass(frozen=True)
class DensityProfile:
    pattern: str
    predicate: str
    rows: tuple[tuple[int, int, Fraction], ...]

    def densities(self) -> list[Fraction]:
        return [row[2] for row in self.rows]

    def gap_to(self, target: Fraction) -> Fraction:
        return target - self.rows[-1][2]

    def trend(self) -> dict:
        ms = [row[1] for row in self.rows]
        ds = self.densities()
        return {
            "min_edges_non_decreasing": all(a <= b for a, b in zip(ms, ms[1:])),
            "density_non_decreasing": all(a <= b for a, b in zip(ds, ds[1:])),
            "first_density": ds[0],
            "last_density": ds[-1],
        }

    def to_json_dict(self) -> dict:
        trend = self.trend()
        return {
            "schema": "domsat/1",
            "pattern": self.pattern,
            "predicate": self.predicate,
            "rows": [
                {"n": n, "min_edges": m, "density": {"num": d.numerator, "den": d.denominator}}
                for n, m, d in self.rows
            ],
            "trend": {
                "min_edges_non_decreasing": trend["min_edges_non_decreasing"],
                "density_non_decreasing": trend["density_non_decreasing"],
                "first_density": {
                    "num": trend["first_density"].numerator,
                    "den": trend["first_density"].denominator,
                },
                "last_density": {
                    "num": trend["last_density"].numerator,
                    "den": trend["last_density"].denominator,
                },
            },
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DensityProfile":
        rows = tuple(
            (row["n"], row["min_edges"], Fraction(row["density"]["num"], row["density"]["den"]))
            for row in data["rows"]
        )
        return cls(data["pattern"], data["predicate"], rows)


# -- pattern-derived degree floors ------------------------------------------


@dataclass(frozen=True)
class _PatternInfo:
    delta: int          # min degree over all pattern vertices
    delta_pos: int      # min degree over non-isolated pattern vertices
    has_k2_component: bool


def _pattern_info(pattern: Graph) -> _PatternInfo:
    degs = pattern.degrees()
    pos = [d for d in degs if d > 0]
    has_k2 = any(c.n == 2 and c.edge_count == 1 for c in component_graphs(pattern))
    return _PatternInfo(min(degs), min(pos), has_k2)


def _sweep_start(n: int, info: _PatternInfo, predicate: str) -> int:
    semi_floor = (n * max(info.delta - 1, 0) + 1) // 2
    floors = [0]
    if predicate in ("saturated", "semi-saturated", "dom-sat"):
        floors.append(semi_floor)
    if predicate == "dom-sat":
        floors.append(1)  # the blanket at-least-one-edge assumption
        if not info.has_k2_component:
            # at most one isolated vertex; the rest sit on pattern-edge images
            floors.append(((n - 1) * info.delta_pos + 1) // 2)
    return max(floors)


def _passes_floor(g: Graph, info: _PatternInfo, predicate: str) -> bool:
    if predicate == "weakly-saturated":
        return True
    degs = g.degrees()
    isolated = sum(1 for d in degs if d == 0)
    if not info.has_k2_component and isolated > 1:
        return False
    if min(degs) < info.delta - 1:
        return False
    if predicate == "dom-sat":
        if any(0 < d < info.delta_pos for d in degs):
            return False
    return True


# -- result cache ------------------------------------------------------------


class SearchCache:
    """Append-only JSON-lines store of search results.

    Hits are re-verified (every witness must decode, have the recorded
    size, and pass the predicate) before they are trusted; unparseable
    or foreign lines are skipped.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._entries: dict[tuple[str, int, str], dict] | None = None
        self._lock = threading.Lock()

    def _load(self) -> dict[tuple[str, int, str], dict]:
        if self._entries is None:
            self._entries = {}
            if self.path.exists():
                for line in self.path.read_text().splitlines():
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        data = json.loads(line)
                    except json.JSONDecodeError:
                        continue
                    if data.get("schema") != "domsat/1":
                        continue
                    key = (data["pattern"], int(data["n"]), data["predicate"])
                    self._entries[key] = data
        return self._entries

    def lookup(self, key: tuple[str, int, str]) -> dict | None:
        with self._lock:
            return self._load().get(key)

    def store(self, data: dict) -> None:
        key = (data["pattern"], int(data["n"]), data["predicate"])
        with self._lock:
            self._load()[key] = data
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a") as fh:
                fh.write(json.dumps(data, sort_keys=True) + "\n")


def _verify_cached(data: dict, pattern: Graph, predicate: str) -> SearchResult | None:
    try:
        result = SearchResult.from_json_dict(data)
        if result.min_edges < 0 or not result.witnesses:
            return None
        for g6 in result.witnesses:
            g = graph6_decode(g6)
            if g.n != result.n or g.edge_count != result.min_edges:
                return None
            if not run_predicate(predicate, g, pattern).verdict:
                return None
        return result
    except (ValueError, KeyError):
        return None


# -- the search itself -------------------------------------------------------


def _normalize_predicate(name: str) -> str:
    key = name.replace("_", "-")
    if key not in SEARCH_PREDICATES:
        raise ValueError(
            f"search predicate must be one of {SEARCH_PREDICATES}, got {name!r}"
        )
    return key


def min_edges(
    pattern: Graph,
    n: int,
    predicate: str,
    *,
    threads: int = 1,
    cache: SearchCache | str | Path | None = None,
    prune: bool = True,
    max_n: int = DEFAULT_MAX_N,
) -> SearchResult:
    """Least edge count of an n-vertex graph satisfying the predicate.

    Exhaustive over isomorphism classes with at least one edge, level by
    level; witnesses are every passing class at the minimum, as sorted
    canonical graph6 strings.  Deterministic for any thread count.
    """
    predicate = _normalize_predicate(predicate)
    if pattern.edge_count == 0:
        raise ValueError("pattern must have at least one edge")
    if n < pattern.n:
        raise ValueError("host order below pattern order")
    if n > max_n:
        raise SearchCapError(f"order {n} above the search cap {max_n}")

    pattern_g6 = graph6_encode(canonical_form(pattern))
    key = (pattern_g6, n, predicate)
    store: SearchCache | None
    if cache is None:
        store = None
    elif isinstance(cache, SearchCache):
        store = cache
    else:
        store = SearchCache(cache)
    if store is not None:
        hit = store.lookup(key)
        if hit is not None:
            verified = _verify_cached(hit, pattern, predicate)
            if verified is not None:
                return verified

    info = _pattern_info(pattern)
    pred_fn = PREDICATES[predicate]
    started = time.perf_counter()
    examined = 0
    base = 1 if predicate == "dom-sat" else 0
    start = max(base, _sweep_start(n, info, predicate)) if prune else base
    top = n * (n - 1) // 2

    def passes(g: Graph) -> bool:
        return pred_fn(g, pattern).verdict

    for m in range(start, top + 1):
        classes = list(enumerate_graphs(n, m))
        examined += len(classes)
        candidates = (
            [g for g in classes if _passes_floor(g, info, predicate)]
            if prune
            else classes
        )
        if not candidates:
            continue
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                verdicts = list(pool.map(passes, candidates))
        else:
            verdicts = [passes(g) for g in candidates]
        winners = [g for g, ok in zip(candidates, verdicts) if ok]
        if winners:
            result = SearchResult(
                pattern=pattern_g6,
                n=n,
                predicate=predicate,
                min_edges=m,
                witnesses=tuple(sorted(graph6_encode(g) for g in winners)),
                graphs_examined=examined,
                elapsed=time.perf_counter() - started,
            )
            if store is not None:
                store.store(result.to_json_dict(include_elapsed=True))
            return result
    raise RuntimeError(
        "no graph passed at any edge count; this predicate should always "
        "be satisfiable"
    )


def density_profile(
    pattern: Graph,
    n_max: int,
    predicate: str = "dom-sat",
    *,
    threads: int = 1,
    cache: SearchCache | str | Path | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> DensityProfile:
    """min_edges rows for every order from the pattern's up to n_max."""
    predicate = _normalize_predicate(predicate)
    rows = []
    for n in range(pattern.n, n_max + 1):
        res = min_edges(
            pattern, n, predicate, threads=threads, cache=cache, max_n=max_n
        )
        rows.append((n, res.min_edges, Fraction(res.min_edges, n)))
    pattern_g6 = graph6_encode(canonical_form(pattern))
    return DensityProfile(pattern_g6, predicate, tuple(rows))


# -- tree lemma battery -------------------------------------------------------


@dataclass(frozen=True)
class LemmaSuiteReport:
    j: int
    trees_checked: int
    stars: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_lemma_suite(j: int) -> LemmaSuiteReport:
    """Run the tree-witness lemma over every tree with 3 <= t < 3j vertices.

    Every non-star tree must yield a pair that re-verifies by exhaustive
    path search; stars are counted separately.
    """
    if j < 2:
        raise ValueError("need j >= 2")
    checked = 0
    stars = 0
    failures = []
    for order in range(3, 3 * j):
        for tree in enumerate_trees(order):
            checked += 1
            try:
                witness = lemma_tree_witness(tree, j)
            except (ValueError, RuntimeError) as exc:
                failures.append(f"{graph6_encode(tree)}: {exc}")
                continue
            if witness == "star":
                stars += 1
                continue
            u, v = witness
            if not tree_witness_ok(tree, j, u, v):
                failures.append(f"{graph6_encode(tree)}: pair {witness} failed recheck")
    return LemmaSuiteReport(j, checked, stars, tuple(failures))
