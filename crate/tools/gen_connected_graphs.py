#!/usr/bin/env python3
"""Write every connected graph on 1..N vertices (one graph6 line each, up to
isomorphism) to stdout.

n <= 7 comes straight from the networkx graph atlas. n = 8 is produced by
extending every 7-vertex atlas graph with one new vertex and removing
isomorphic duplicates (WL-hash buckets, then VF2).
"""
import sys
from collections import defaultdict
from itertools import combinations

import networkx as nx

EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def atlas_by_order():
    by_n = defaultdict(list)
    for g in nx.graph_atlas_g():
        by_n[g.number_of_nodes()].append(g)
    return by_n


def extend(graphs, n):
    buckets = defaultdict(list)
    out = []
    for base in graphs:
        for r in range(1, n):
            for nbrs in combinations(range(n - 1), r):
                g = base.copy()
                g.add_node(n - 1)
                g.add_edges_from((n - 1, u) for u in nbrs)
                if not nx.is_connected(g):
                    continue
                key = (tuple(sorted(d for _, d in g.degree())), g.number_of_edges(),
                       nx.weisfeiler_lehman_graph_hash(g, iterations=3))
                if any(nx.is_isomorphic(g, h) for h in buckets[key]):
                    continue
                buckets[key].append(g)
                out.append(g)
    return out


def main():
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    by_n = atlas_by_order()
    for n in range(1, top + 1):
        if n <= 7:
            graphs = [g for g in by_n[n] if nx.is_connected(g)]
        elif n == 8:
            graphs = extend(by_n[7], 8)
        else:
            raise SystemExit("only n <= 8 supported")
        assert len(graphs) == EXPECTED[n], (n, len(graphs))
        for g in graphs:
            sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode())
        print(f"n={n}: {len(graphs)}", file=sys.stderr)


if __name__ == "__main__":
    main()
