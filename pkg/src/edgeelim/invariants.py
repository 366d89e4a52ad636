"""Graph polynomials, each computed by more than one independent route.

Recurrence routes share one deletion/contraction/extraction engine
(:func:`_eliminate`); enumeration routes sum directly over edge subsets,
subgraphs, vertex subsets or colorings.
"""

from __future__ import annotations

import itertools
import os
import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Union

from . import graphcore as gc
from .errors import EnumerationGuardExceeded, InvalidPalette, SizeGuardExceeded
from .graphcore import Graph
from .polylib import ONE, Polynomial, substitute, v, x, y, z

# ---------------------------------------------------------------------------
# guards


@dataclass(frozen=True)
class SizeGuard:
    max_vertices: int = 12
    max_edges: int = 16

    @classmethod
    def default(cls) -> "SizeGuard":
        """Default guard; ``GP_SIZE_GUARD`` overrides the edge limit."""
        env = os.environ.get("GP_SIZE_GUARD")
        if env:
            return cls(max_edges=int(env))
        return cls()

    def check(self, g: Graph) -> None:
        if g.n > self.max_vertices or g.m > self.max_edges:
            raise SizeGuardExceeded(
                f"graph with {g.n} vertices / {g.m} edges exceeds guard "
                f"({self.max_vertices} vertices / {self.max_edges} edges)"
            )


COLORING_LIMIT = 10**7


def _guard(g: Graph, guard: SizeGuard | None) -> None:
    (guard or SizeGuard.default()).check(g)


# ---------------------------------------------------------------------------
# canonical form (memo key)


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant key by exhaustive relabeling (|V| <= 9).

    Vertices are first sorted by (degree, loops); permutations are only
    tried inside those classes, which keeps the result canonical.
    """
    if g.n > 9:
        raise SizeGuardExceeded("canonical form limited to 9 vertices")
    deg = {u: 0 for u in g.vertices}
    loops = {u: 0 for u in g.vertices}
    for a, b in g.edges:
        if a == b:
            loops[a] += 1
            deg[a] += 1
        else:
            deg[a] += 1
            deg[b] += 1
    inv = lambda u: (deg[u], loops[u])  # noqa: E731
    classes = [list(grp) for _, grp in itertools.groupby(sorted(g.vertices, key=inv), key=inv)]
    signature = tuple(sorted(inv(u) for u in g.vertices))
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [u for part in parts for u in part]
        pos = {u: i for i, u in enumerate(order)}
        key = tuple(sorted((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in g.edges))
        if best is None or key < best:
            best = key
    return (g.n, signature, best)


# ---------------------------------------------------------------------------
# recurrence engine

Pivot = Union[str, random.Random, Callable[[Graph], int]]


def _chooser(pivot: Pivot) -> Callable[[Graph], int]:
    if pivot == "first":
        return lambda g: 0
    if pivot == "last":
        return lambda g: len(g.edges) - 1
    if isinstance(pivot, random.Random):
        return lambda g: pivot.randrange(len(g.edges))
    if callable(pivot):
        return pivot
    raise ValueError(f"unknown pivot strategy {pivot!r}")


def _eliminate(g, vertex_base, weights, choose, cache):
    """Generic edge-elimination recursion.

    ``weights(is_loop)`` returns the factors for the contraction and
    extraction branches (``None`` skips a branch).  Edgeless graphs
    evaluate to ``vertex_base ** |V|``.
    """
    if cache is not None and g.n <= 9:
        key = canonical_form(g)
        hit = cache.get(key)
        if hit is not None:
            return hit
    else:
        key = None

    if not g.edges:
        result = vertex_base ** g.n
    else:
        touched = {u for e in g.edges for u in e}
        if len(touched) < g.n:
            # isolated vertices factor out by multiplicativity
            core = gc._unchecked(tuple(u for u in g.vertices if u in touched), g.edges)
            result = vertex_base ** (g.n - len(touched)) * _eliminate(
                core, vertex_base, weights, choose, cache
            )
        else:
            i = choose(g)
            a, b = g.edges[i]
            w_con, w_ext = weights(a == b)
            result = _eliminate(gc.delete_edge(g, i), vertex_base, weights, choose, cache)
            if w_con is not None:
                result = result + w_con * _eliminate(
                    gc.contract_edge(g, i), vertex_base, weights, choose, cache
                )
            if w_ext is not None:
                result = result + w_ext * _eliminate(
                    gc.extract_edge(g, i), vertex_base, weights, choose, cache
                )
    if key is not None:
        cache[key] = result
    return result


def _run(g, vertex_base, weights, pivot, guard, memo):
    _guard(g, guard)
    cache = {} if memo is True else (memo or None)
    return _eliminate(g, vertex_base, weights, _chooser(pivot), cache)


def eep_recurrence(g: Graph, pivot: Pivot = "first", guard: SizeGuard | None = None, memo=False) -> Polynomial:
    """Edge elimination polynomial xi(G; x, y, z).

    xi(G) = xi(G-e) + y xi(G/e) + z xi(G†e), xi(K1) = x, multiplicative.
    ``memo`` may be ``True`` or a dict shared across calls.
    """
    return _run(g, x, lambda loop: (y, z), pivot, guard, memo)


def potts_recurrence(g: Graph, pivot: Pivot = "first", guard: SizeGuard | None = None, memo=False) -> Polynomial:
    return _run(g, x, lambda loop: (y, None), pivot, guard, memo)


_VY = v * y


def scp_recurrence(g: Graph, pivot: Pivot = "first", guard: SizeGuard | None = None, memo=False) -> Polynomial:
    """Subgraph counting polynomial H via H(G-e) + v^(|e|-1) y (H(G/e) - H(G†e))."""

    def weights(loop):
        f = y if loop else _VY
        return f, -f

    return _run(g, ONE + v * x, weights, pivot, guard, memo)


_TCP_CON = z - 1
_TCP_EXT = (1 - z) * (x - y)


def tcp_recurrence(g: Graph, pivot: Pivot = "first", guard: SizeGuard | None = None, memo=False) -> Polynomial:
    return _run(g, x, lambda loop: (_TCP_CON, _TCP_EXT), pivot, guard, memo)


def badcol_recurrence(g: Graph, pivot: Pivot = "first", guard: SizeGuard | None = None, memo=False) -> Polynomial:
    """Bad coloring polynomial chi~(G; x, z) = chi~(G-e) + (z-1) chi~(G/e)."""
    return _run(g, x, lambda loop: (_TCP_CON, None), pivot, guard, memo)


def bivchrom_recurrence(g: Graph, pivot: Pivot = "first", guard: SizeGuard | None = None, memo=False) -> Polynomial:
    """Bivariate chromatic polynomial P(G; x, y) = P(G-e) - P(G/e) + (x-y) P(G†e)."""
    return _run(g, x, lambda loop: (Polynomial.const(-1), x - y), pivot, guard, memo)


# ---------------------------------------------------------------------------
# enumeration routes


def _poly_from_counts(counts) -> Polynomial:
    return Polynomial(dict(counts))


def potts_subset(g: Graph, guard: SizeGuard | None = None) -> Polynomial:
    """Sum over all edge subsets A of x^k(V,A) y^|A|."""
    _guard(g, guard)
    counts: Counter = Counter()
    edges = g.edges
    for r in range(len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            k = gc._count_components(g.vertices, sub)
            counts[(0, k, r, 0)] += 1
    return _poly_from_counts(counts)


def scp_subset(g: Graph, guard: SizeGuard | None = None) -> Polynomial:
    """Sum over all subgraphs (W, F) of v^|W| x^k(W,F) y^|F|.

    Enumerated edge set first: every F, then every set of extra vertices
    added to the vertices F covers.
    """
    _guard(g, guard)
    counts: Counter = Counter()
    edges = g.edges
    for r in range(len(edges) + 1):
        for F in itertools.combinations(edges, r):
            covered = {u for e in F for u in e}
            base_k = gc._count_components(tuple(covered), F)
            spare = [u for u in g.vertices if u not in covered]
            for s in range(len(spare) + 1):
                for extra in itertools.combinations(spare, s):
                    counts[(len(covered) + s, base_k + s, r, 0)] += 1
    return _poly_from_counts(counts)


def _vertex_subsets(g: Graph):
    for r in range(g.n + 1):
        yield from itertools.combinations(g.vertices, r)


def scp_induced(g: Graph, guard: SizeGuard | None = None) -> Polynomial:
    """H = sum over W of v^|W| Z(G[W])."""
    _guard(g, guard)
    total = Polynomial()
    for W in _vertex_subsets(g):
        total = total + Polynomial.var("v", len(W)) * potts_subset(gc.induced_subgraph(g, W), guard)
    return total


def badcol_from_potts(z_poly: Polynomial) -> Polynomial:
    """chi~(G; x, z) = Z(G; x, z-1)."""
    return substitute(z_poly, {"y": z - 1})


def badcol_subset(g: Graph, guard: SizeGuard | None = None) -> Polynomial:
    return badcol_from_potts(potts_subset(g, guard))


def tcp_expansion(g: Graph, guard: SizeGuard | None = None) -> Polynomial:
    """P~(G) = sum over W of (x-y)^|W| chi~(G-W; y, z)."""
    _guard(g, guard)
    free = x - y
    powers = [ONE]
    for _ in range(g.n):
        powers.append(powers[-1] * free)
    total = Polynomial()
    for W in _vertex_subsets(g):
        rest = gc.delete_vertices(g, W)
        # chi~(h; y, z) = Z(h; y, z-1), both swaps applied simultaneously
        chi = substitute(potts_subset(rest, guard), {"x": y, "y": z - 1})
        total = total + powers[len(W)] * chi
    return total


def tcp_coloring_oracle(g: Graph, x_val: int, y_val: int, limit: int = COLORING_LIMIT) -> Polynomial:
    """Brute-force P~(G; x, y, z) as a polynomial in z for integer palette sizes.

    Every map V -> {1..x} contributes z^(number of edges whose endpoints all
    share one color c <= y).  A loop is monochromatic by itself.
    """
    if x_val < 0 or y_val < 0 or y_val > x_val:
        raise InvalidPalette(f"need 0 <= y <= x, got x={x_val}, y={y_val}")
    if x_val ** g.n > limit:
        raise EnumerationGuardExceeded(f"{x_val}^{g.n} colorings exceed the limit {limit}")
    index = {u: i for i, u in enumerate(g.vertices)}
    edges = [(index[a], index[b]) for a, b in g.edges]
    counts: Counter = Counter()
    for phi in itertools.product(range(1, x_val + 1), repeat=g.n):
        bad = sum(1 for a, b in edges if phi[a] == phi[b] and phi[a] <= y_val)
        counts[(0, 0, 0, bad)] += 1
    return _poly_from_counts(counts)


def bivariate_chromatic(g: Graph, guard: SizeGuard | None = None) -> Polynomial:
    return substitute(tcp_expansion(g, guard), {"z": 0})


def scomp_subset(g: Graph, guard: SizeGuard | None = None) -> Polynomial:
    """Subgraph component polynomial Q = sum over W of v^|W| x^k(G[W])."""
    _guard(g, guard)
    counts: Counter = Counter()
    for W in _vertex_subsets(g):
        k = gc.component_count(gc.induced_subgraph(g, W))
        counts[(len(W), k, 0, 0)] += 1
    return _poly_from_counts(counts)
