"""Write every connected graph on 8 vertices, up to isomorphism, as graph6.

Graphs on 7 vertices come from the networkx graph atlas; each connected one is
extended by a vertex joined to a nonempty subset, then deduplicated with
Weisfeiler-Lehman hash buckets and exact isomorphism tests.
"""

import argparse
import itertools
import sys

import networkx as nx

EXPECTED = 11117


def connected_on(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and nx.is_connected(g)]


def extend(graphs, n):
    buckets = {}
    for base in graphs:
        for size in range(1, n):
            for nbrs in itertools.combinations(range(n - 1), size):
                g = base.copy()
                g.add_node(n - 1)
                g.add_edges_from((v, n - 1) for v in nbrs)
                key = (g.number_of_edges(), nx.weisfeiler_lehman_graph_hash(g, iterations=3))
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(g, h) for h in bucket):
                    bucket.append(g)
    return [g for bucket in buckets.values() for g in bucket]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("output", nargs="?", default="-")
    args = parser.parse_args()

    graphs = extend(connected_on(7), 8)
    if len(graphs) != EXPECTED:
        sys.exit(f"expected {EXPECTED} graphs, got {len(graphs)}")
    lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs)
    out = sys.stdout if args.output == "-" else open(args.output, "w")
    out.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
