"""Writes the graph6 fixtures used by the integration tests.

connected_le7.g6  all connected graphs on 1..7 vertices (networkx atlas)
all_le8.g6        all graphs on 1..8 vertices; n = 8 is grown from the
                  atlas by adding one vertex in every way and keeping one
                  graph per isomorphism class
"""

import sys
from collections import defaultdict
from itertools import combinations
from pathlib import Path

import networkx as nx


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def grow(graphs, n):
    buckets = defaultdict(list)
    for base in graphs:
        for r in range(n):
            for nbrs in combinations(range(n - 1), r):
                h = base.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, v) for v in nbrs)
                degs = tuple(sorted(d for _, d in h.degree()))
                key = (degs, nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                if not any(nx.is_isomorphic(h, o) for o in buckets[key]):
                    buckets[key].append(h)
    return [h for bucket in buckets.values() for h in bucket]


def main(out):
    out = Path(out)
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 1]
    connected = [g for g in atlas if nx.is_connected(g)]
    assert len(connected) == 996, len(connected)
    (out / "connected_le7.g6").write_text("".join(g6(g) + "\n" for g in connected))

    seven = [g for g in atlas if g.number_of_nodes() == 7]
    eight = grow(seven, 8)
    assert len(eight) == 12346, len(eight)
    eight.sort(key=lambda g: (g.number_of_edges(), g6(g)))
    lines = [g6(g) for g in atlas] + [g6(g) for g in eight]
    (out / "all_le8.g6").write_text("".join(s + "\n" for s in lines))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/validation/fixtures")
