"""Independent census of all connected graphs of order 7 or 8.

Order 7 comes from the networkx graph atlas. Order 8 is read from a graph6
file (one graph per line); the script checks it has 11117 pairwise
non-isomorphic connected graphs before using it. Prints how many classes
have each partition dimension and the graph6 strings of those at n-2 and
n-1, computed by plain enumeration of set partitions.

    python3 full_census.py 7
    python3 full_census.py 8 catalog8.g6
"""
import json
import sys

import networkx as nx

from large_twin_census import is_locating, set_partitions


def partition_dimension(g):
    dist = dict(nx.all_pairs_shortest_path_length(g))
    nodes = sorted(g.nodes)
    for k in range(1, len(nodes) + 1):
        for parts in set_partitions(nodes, k):
            if is_locating(dist, parts):
                return k
    raise AssertionError("singletons always locate")


def order7():
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7 and nx.is_connected(g)]


def order8(path):
    graphs = []
    with open(path) as f:
        for line in f:
            line = line.strip()
            if line:
                graphs.append(nx.from_graph6_bytes(line.encode()))
    assert len(graphs) == 11117, len(graphs)
    buckets = {}
    for g in graphs:
        assert g.number_of_nodes() == 8 and nx.is_connected(g)
        buckets.setdefault(nx.weisfeiler_lehman_graph_hash(g, iterations=4), []).append(g)
    for bucket in buckets.values():
        for i in range(len(bucket)):
            for j in range(i + 1, len(bucket)):
                assert not nx.is_isomorphic(bucket[i], bucket[j])
    return graphs


def main():
    n = int(sys.argv[1])
    graphs = order7() if n == 7 else order8(sys.argv[2])
    counts = {}
    top = {n - 2: [], n - 1: []}
    for g in graphs:
        b = partition_dimension(g)
        counts[b] = counts.get(b, 0) + 1
        if b in top:
            top[b].append(nx.to_graph6_bytes(g, header=False).decode().strip())
    print(json.dumps({"n": n, "graphs": len(graphs), "by_partition_dimension": dict(sorted(counts.items())),
                      "at_n_minus_2": sorted(top[n - 2]), "at_n_minus_1": sorted(top[n - 1])}))


if __name__ == "__main__":
    main()
