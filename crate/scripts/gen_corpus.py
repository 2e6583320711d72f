#!/usr/bin/env python3
"""Regenerate the graph6 corpora under crates/core/tests/data.

All graphs on 1..7 vertices come from the networkx graph atlas; connected
graphs on 8 vertices are produced by one-vertex extension of every 7-vertex
graph, deduplicated by nauty canonical certificates (pynauty).
"""
import sys
from pathlib import Path

import networkx as nx
import pynauty

OUT = Path(__file__).resolve().parent.parent / "crates" / "core" / "tests" / "data"


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def certificate(g):
    n = g.number_of_nodes()
    adj = {v: [w for w in g.neighbors(v)] for v in g.nodes()}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def main():
    atlas = [g for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= 7]
    all_small = [g6(g) for g in atlas]
    connected_small = [g6(g) for g in atlas if nx.is_connected(g)]

    seen = {}
    for g in atlas:
        if g.number_of_nodes() != 7:
            continue
        for mask in range(1, 1 << 7):
            h = g.copy()
            h.add_node(7)
            h.add_edges_from((7, v) for v in range(7) if mask >> v & 1)
            if not nx.is_connected(h):
                continue
            cert = certificate(h)
            if cert not in seen:
                seen[cert] = g6(h)
    connected_eight = sorted(seen.values())

    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "all_n1_7.g6").write_text("\n".join(all_small) + "\n")
    (OUT / "connected_n1_7.g6").write_text("\n".join(connected_small) + "\n")
    (OUT / "connected_n8.g6").write_text("\n".join(connected_eight) + "\n")
    print(len(all_small), len(connected_small), len(connected_eight), file=sys.stderr)


if __name__ == "__main__":
    main()
