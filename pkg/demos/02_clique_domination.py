#!/usr/bin/env python3
"""The clique story: witness family, edge formula, and exact minimums.

Builds the clique-join-near-matching witness for several orders, checks
its edge count against the closed formula, runs the exact search at desk
scale, and prints the density profile next to the limiting value r - 3/2.
Also shows that the witness family is only asymptotically extremal: at
n = 4 the unique minimum graph is K_4 minus an edge, not the witness.

Usage: python demos/02_clique_domination.py
"""

from domsat import (
    are_isomorphic,
    complete_graph,
    density_profile,
    dom_turan,
    dsat_clique_density,
    dsat_clique_upper_edges,
    graph6_decode,
    graph6_encode,
    is_dom_sat,
    min_edges,
    sat_clique,
)

print("== the witness family and its edge count ==")
for r in (3, 4, 5):
    for n in (r, r + 3, r + 8):
        g = dom_turan(n, r)
        formula = dsat_clique_upper_edges(n, r)
        ok = is_dom_sat(g, complete_graph(r)).verdict
        assert g.edge_count == formula and ok
        print(f"r={r} n={n:>2}: {g.edge_count:>3} edges (formula {formula:>3}), dom-sat: {ok}")

print()
print("== exact minimums for K_3, with the saturation number beside ==")
k3 = complete_graph(3)
for n in range(3, 8):
    ds = min_edges(k3, n, "dom-sat")
    st = min_edges(k3, n, "saturated")
    assert st.min_edges == sat_clique(n, 3)
    print(
        f"n={n}: dom-sat minimum {ds.min_edges} "
        f"(witnesses {', '.join(ds.witnesses)}), saturated minimum {st.min_edges}"
    )

print()
print("== density profile against the limit 3/2 ==")
prof = density_profile(k3, 8)
target = dsat_clique_density(3)
for n, m, d in prof.rows:
    upper = dom_turan(n, 3).edge_count
    print(f"n={n}: minimum {m:>2}, density {str(d):>5}, witness-family edges {upper:>2}")
print(f"gap to {target} at n=8: {prof.gap_to(target)}")

print()
print("== the witness family is not extremal at every order ==")
exact = min_edges(k3, 4, "dom-sat")
w = graph6_decode(exact.witnesses[0])
d43 = dom_turan(4, 3)
print(f"n=4: unique minimum graph is {exact.witnesses[0]} with {exact.min_edges} edges")
print(f"     K_4 minus an edge? {are_isomorphic(w, complete_graph(4).remove_edge(0, 1))}")
print(f"     witness-family graph {graph6_encode(d43)} has {d43.edge_count} edges")
