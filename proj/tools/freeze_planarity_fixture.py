"""Regenerate tests/data/planarity.txt with networkx as the reference planarity test."""
import random
import sys

import networkx as nx


def graphs(rng):
    for _ in range(400):
        n = rng.randint(5, 12)
        m_max = n * (n - 1) // 2
        m = rng.randint(n - 1, min(m_max, 3 * n - 6 + 3))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        yield n, rng.sample(pairs, m)
    yield 10, list(nx.petersen_graph().edges())
    yield 5, list(nx.complete_graph(5).edges())
    yield 6, list(nx.complete_bipartite_graph(3, 3).edges())


def main(path):
    rng = random.Random(20250101)
    with open(path, "w") as out:
        for n, edges in graphs(rng):
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            planar, _ = nx.check_planarity(g)
            out.write(f"{n} {len(edges)} {int(planar)}\n")
            for u, v in sorted(tuple(sorted(e)) for e in edges):
                out.write(f"{u} {v}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/planarity.txt")
