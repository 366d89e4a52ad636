import random

from edgeelim.corpus import all_labeled_graphs, random_multigraphs
from edgeelim.graphcore import Graph

K1 = Graph.from_edges(1)
K2 = Graph.from_edges(2, [(0, 1)])
K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
LOOP = Graph.from_edges(1, [(0, 0)])
DOUBLE = Graph.from_edges(2, [(0, 1), (0, 1)])
EMPTY = Graph(())


def small_corpus():
    """All labeled simple graphs on 0..4 vertices plus seeded multigraphs."""
    graphs = [g for n in range(5) for g in all_labeled_graphs(n)]
    return graphs + random_multigraphs(25, seed=11, max_vertices=4, max_edges=6)


def relabel(g: Graph, perm) -> Graph:
    m = dict(zip(g.vertices, perm))
    return Graph(tuple(m[u] for u in g.vertices), tuple((m[a], m[b]) for a, b in g.edges))


def shuffled(g: Graph, rng) -> Graph:
    """Same graph with permuted labels and edge order."""
    perm = list(g.vertices)
    rng.shuffle(perm)
    h = relabel(g, perm)
    edges = list(h.edges)
    rng.shuffle(edges)
    return Graph(h.vertices, tuple(edges))

