#!/usr/bin/env python3
"""Regenerates the reference graph6 files under tests/data with networkx.

networkx is used as an encoder and graph source that shares no code with the
C++ library; the files are checked in so the test suite has no Python
dependency.
"""
import pathlib
import random

import networkx as nx

OUT = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def atlas_connected():
    by_order = {}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 3 <= n <= 7 and nx.is_connected(g):
            by_order.setdefault(n, []).append(g)
    for n, graphs in by_order.items():
        with open(OUT / f"atlas_connected{n}.g6", "w") as f:
            for g in graphs:
                f.write(g6(g) + "\n")
    # decode fixture: graph6 plus the edge list networkx holds for it
    with open(OUT / "atlas_connected5_edges.txt", "w") as f:
        for g in by_order[5]:
            edges = " ".join(f"{u}-{v}" for u, v in sorted(tuple(sorted(e)) for e in g.edges()))
            f.write(f"{g6(g)}\t{edges}\n")


def invariant(g):
    """Isomorphism invariant that separates most regular graphs (WL hashing
    does not): per-vertex distance profiles and triangle counts."""
    tri = nx.triangles(g)
    profiles = []
    for v, dist in nx.all_pairs_shortest_path_length(g):
        counts = [0] * len(g)
        for d in dist.values():
            counts[d] += 1
        profiles.append((tri[v], tuple(counts)))
    return tuple(sorted(profiles))


def cubic12(target=85, seed=20241014):
    """Connected cubic graphs on 12 vertices by rejection sampling until all
    85 isomorphism classes (the published count) have been seen."""
    rng = random.Random(seed)
    found = []
    hashes = {}
    while len(found) < target:
        g = nx.random_regular_graph(3, 12, seed=rng.randrange(1 << 30))
        if not nx.is_connected(g):
            continue
        h = invariant(g)
        bucket = hashes.setdefault(h, [])
        if any(nx.is_isomorphic(g, other) for other in bucket):
            continue
        bucket.append(g)
        found.append(g)
    codes = sorted(g6(nx.convert_node_labels_to_integers(g)) for g in found)
    with open(OUT / "cubic12_connected.g6", "w") as f:
        f.write(">>graph6<<" + codes[0] + "\n")
        for c in codes[1:]:
            f.write(c + "\n")


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    atlas_connected()
    cubic12()
