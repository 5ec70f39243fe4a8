#!/usr/bin/env python3
"""Tour of the six saturation predicates and their certificates.

Walks a handful of named graphs through free / saturated /
semi-saturated / dominated / dom-sat / weakly-saturated and shows that
every verdict ships a certificate that replays.

Usage: python demos/01_predicates_and_certificates.py
"""

from domsat import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph6_encode,
    recheck_certificate,
    run_predicate,
    star_graph,
    turan,
)

K3 = complete_graph(3)


def show(title, host, pattern, predicate):
    rep = run_predicate(predicate, host, pattern)
    verdict = "yes" if rep.verdict else "no"
    line = f"{title:<34} {predicate:<16} -> {verdict}"
    if rep.certificate_kind not in ("none", "closure-order"):
        line += f"   [{rep.certificate_kind}: {rep.certificate}]"
    print(line)
    assert recheck_certificate(rep, host, pattern), "certificate failed to replay"


print("== freeness and saturation, pattern K_3 ==")
show("C_4", cycle_graph(4), K3, "free")
show("K_4", complete_graph(4), K3, "free")
show("Turan graph T(6,2) = K_{3,3}", turan(6, 2), K3, "saturated")
show("star K_{1,4}", star_graph(4), K3, "saturated")

print()
print("== semi-saturation: every added edge must land in a new copy ==")
show("K_5 (vacuously)", complete_graph(5), complete_graph(4), "semi-saturated")
show("star K_{1,4}", star_graph(4), K3, "semi-saturated")
# joining two triangles cannot close a 6-cycle through the new edge
show("2 K_3 against C_6", disjoint_union([K3, K3]), cycle_graph(6), "semi-saturated")

print()
print("== domination: every existing edge must sit in a copy ==")
show("K_4 minus an edge", complete_graph(4).remove_edge(0, 1), K3, "dominated")
show("C_4 (triangle-free)", cycle_graph(4), K3, "dominated")
show("C_5", cycle_graph(5), K3, "dom-sat")
show("K_4 minus an edge", complete_graph(4).remove_edge(0, 1), K3, "dom-sat")

print()
print("== weak saturation: greedy closure to the complete graph ==")
show("star K_{1,4}", star_graph(4), K3, "weakly-saturated")
show("empty graph on 4", empty_graph(4), K3, "weakly-saturated")

print()
order = run_predicate("weakly-saturated", star_graph(4), K3).certificate
print(f"closure order for K_(1,4) against K_3: {order}")
print(f"(graph6 of the star: {graph6_encode(star_graph(4))})")
