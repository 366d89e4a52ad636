"""Graph families used by the identity checks: labeled graphs, random multigraphs, trees."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .graphcore import Graph, disjoint_union


def complete_edges(n: int) -> list[tuple[int, int]]:
    """Edges of K_n in the bit order used by :func:`labeled_graph`."""
    return list(itertools.combinations(range(n), 2))


def labeled_graph(n: int, mask: int) -> Graph:
    pairs = complete_edges(n)
    return Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled simple graphs on vertices 0..n-1."""
    for mask in range(1 << (n * (n - 1) // 2)):
        yield labeled_graph(n, mask)


def random_multigraph(rng: random.Random, max_vertices: int = 5, max_edges: int = 8) -> Graph:
    """A multigraph with loops and parallel edges, at least one vertex."""
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_edges)
    edges = []
    for _ in range(m):
        a = rng.randrange(n)
        # bias toward loops and repeats so small samples exercise both
        roll = rng.random()
        if roll < 0.2:
            b = a
        elif roll < 0.35 and edges:
            a, b = rng.choice(edges)
        else:
            b = rng.randrange(n)
        edges.append((a, b))
    return Graph.from_edges(n, edges)


def random_multigraphs(count: int, seed: int = 0, max_vertices: int = 5, max_edges: int = 8) -> list[Graph]:
    rng = random.Random(seed)
    return [random_multigraph(rng, max_vertices, max_edges) for _ in range(count)]


def prufer_to_tree(seq: tuple[int, ...], n: int) -> Graph:
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    edges = []
    for a in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, a))
        degree[leaf] -= 1
        degree[a] -= 1
    u, w = [i for i in range(n) if degree[i] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on 0..n-1 via Prüfer sequences."""
    if n == 1:
        yield Graph.from_edges(1)
        return
    if n == 2:
        yield Graph.from_edges(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_to_tree(seq, n)


def random_forest(rng: random.Random, max_parts: int = 3, max_tree: int = 5) -> Graph:
    g = Graph(())
    for _ in range(rng.randint(1, max_parts)):
        n = rng.randint(1, max_tree)
        if n <= 2:
            tree = next(labeled_trees(n))
        else:
            tree = prufer_to_tree(tuple(rng.randrange(n) for _ in range(n - 2)), n)
        g = disjoint_union(g, tree)
    return g


def parse_corpus_name(name: str) -> int:
    """``all-n4`` -> 4."""
    if not name.startswith("all-n") or not name[5:].isdigit():
        raise ValueError(f"unknown corpus {name!r}; expected all-n<k>")
    return int(name[5:])
