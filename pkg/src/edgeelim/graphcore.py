"""Finite multigraphs and the vertex/edge operations used by the recurrences.

Edges are unordered pairs stored as ``(min, max)``; ``(u, u)`` is a loop.
The edge tuple keeps its order through every operation, so an edge
reference is just its index in ``Graph.edges``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyGraph, InvalidEdgeRef, ParseError, UnknownVertex


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        if len(verts) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        object.__setattr__(self, "vertices", verts)
        vset = set(verts)
        norm = []
        for e in self.edges:
            a, b = e
            if a not in vset or b not in vset:
                raise UnknownVertex(f"edge {e} has an endpoint outside the vertex set")
            norm.append((a, b) if a <= b else (b, a))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        """Graph on vertices ``0..n-1``."""
        return cls(tuple(range(n)), tuple(edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_simple(self) -> bool:
        return all(a != b for a, b in self.edges) and len(set(self.edges)) == len(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, vertices={list(self.vertices)}, edges={list(self.edges)})"


def _unchecked(vertices, edges) -> Graph:
    # hot path for the recurrences: inputs are already normalized
    g = object.__new__(Graph)
    object.__setattr__(g, "vertices", vertices)
    object.__setattr__(g, "edges", edges)
    return g


EMPTY = Graph(())


def _check_edge(g: Graph, e: int) -> tuple[int, int]:
    if not isinstance(e, int) or not 0 <= e < len(g.edges):
        raise InvalidEdgeRef(f"edge index {e!r} invalid for a graph with {len(g.edges)} edges")
    return g.edges[e]


def delete_edge(g: Graph, e: int) -> Graph:
    _check_edge(g, e)
    return _unchecked(g.vertices, g.edges[:e] + g.edges[e + 1 :])


def contract_edge(g: Graph, e: int) -> Graph:
    """Merge the endpoints of edge ``e``; a loop is simply removed."""
    u, w = _check_edge(g, e)
    rest = g.edges[:e] + g.edges[e + 1 :]
    if u == w:
        return _unchecked(g.vertices, rest)
    edges = []
    for a, b in rest:
        if a == w:
            a = u
        if b == w:
            b = u
        edges.append((a, b) if a <= b else (b, a))
    return _unchecked(tuple(x for x in g.vertices if x != w), tuple(edges))


def extract_edge(g: Graph, e: int) -> Graph:
    """Delete both endpoints of ``e`` together with every edge touching them."""
    u, w = _check_edge(g, e)
    gone = {u, w}
    return _unchecked(
        tuple(x for x in g.vertices if x not in gone),
        tuple((a, b) for a, b in g.edges if a not in gone and b not in gone),
    )


def delete_vertex(g: Graph, u: int) -> Graph:
    if u not in g.vertices:
        raise UnknownVertex(u)
    return _unchecked(
        tuple(x for x in g.vertices if x != u),
        tuple((a, b) for a, b in g.edges if a != u and b != u),
    )


def delete_vertices(g: Graph, us: Iterable[int]) -> Graph:
    gone = set(us)
    if not gone <= set(g.vertices):
        raise UnknownVertex(sorted(gone - set(g.vertices)))
    return _unchecked(
        tuple(x for x in g.vertices if x not in gone),
        tuple((a, b) for a, b in g.edges if a not in gone and b not in gone),
    )


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Copy of ``g2`` relabeled above ``max(g1)``, appended to ``g1``."""
    base = (max(g1.vertices) + 1) if g1.vertices else 0
    relabel = {old: base + i for i, old in enumerate(g2.vertices)}
    return _unchecked(
        g1.vertices + tuple(relabel[u] for u in g2.vertices),
        g1.edges + tuple((relabel[a], relabel[b]) for a, b in g2.edges),
    )


def induced_subgraph(g: Graph, w: Iterable[int]) -> Graph:
    keep = set(w)
    if not keep <= set(g.vertices):
        raise UnknownVertex(sorted(keep - set(g.vertices)))
    return _unchecked(
        tuple(x for x in g.vertices if x in keep),
        tuple((a, b) for a, b in g.edges if a in keep and b in keep),
    )


def component_count(g: Graph) -> int:
    return _count_components(g.vertices, g.edges)


def _count_components(vertices, edges) -> int:
    parent = {u: u for u in vertices}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    k = len(parent)
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            k -= 1
    return k


def components(g: Graph) -> list[Graph]:
    """Connected components, ordered by smallest vertex."""
    adj: dict[int, list[int]] = {u: [] for u in g.vertices}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    label: dict[int, int] = {}
    for s in g.vertices:
        if s in label:
            continue
        label[s] = s
        stack = [s]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b not in label:
                    label[b] = s
                    stack.append(b)
    groups: dict[int, tuple[list, list]] = {}
    for u in g.vertices:
        groups.setdefault(label[u], ([], []))[0].append(u)
    for a, b in g.edges:
        groups[label[a]][1].append((a, b))
    return [_unchecked(tuple(vs), tuple(es)) for vs, es in groups.values()]


def degree(g: Graph, u: int) -> int:
    """Number of incident edges; a loop counts once."""
    if u not in g.vertices:
        raise UnknownVertex(u)
    return sum(1 for a, b in g.edges if a == u or b == u)


def degree_histogram(g: Graph) -> dict[int, int]:
    hist: dict[int, int] = {}
    for u in g.vertices:
        d = degree(g, u)
        hist[d] = hist.get(d, 0) + 1
    return dict(sorted(hist.items()))


def deck(g: Graph) -> list[Graph]:
    if not g.vertices:
        raise EmptyGraph("the deck of the empty graph is undefined")
    return [delete_vertex(g, u) for u in g.vertices]


# --- file formats -----------------------------------------------------------


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def parse_edgelist(text: str) -> Graph:
    """``n m`` header, then ``m`` lines ``u w`` with 1-based endpoints.

    Lines starting with ``#`` and blank lines are skipped.  Vertices are
    returned 0-based.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", line=lineno)
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", line=lineno) from None
    if not rows:
        raise ParseError("missing 'n m' header", line=1)
    hline, n, m = rows[0]
    if n < 0 or m < 0:
        raise ParseError("vertex and edge counts must be nonnegative", line=hline)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else None
        raise ParseError(f"header announces {m} edges, found {len(body)}", line=where or hline)
    edges = []
    for lineno, a, b in body:
        if not (1 <= a <= n and 1 <= b <= n):
            raise ParseError(f"endpoint out of range 1..{n}", line=lineno)
        edges.append((a - 1, b - 1))
    return Graph.from_edges(n, edges)


def to_edgelist(g: Graph) -> str:
    index = {u: i + 1 for i, u in enumerate(g.vertices)}
    lines = [f"{g.n} {g.m}"]
    lines += [f"{index[a]} {index[b]}" for a, b in g.edges]
    return "\n".join(lines) + "\n"


def _g6_size(data: bytes) -> tuple[int, int]:
    """Decode the vertex count; returns ``(n, bytes_consumed)``."""
    if not data:
        raise ParseError("empty graph6 string", pos=1)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated 8-byte graph6 size", pos=len(data))
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise ParseError("truncated 4-byte graph6 size", pos=len(data))
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii", errors="replace")
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c!r} outside the graph6 range 63..126", pos=i + 1)
    n, off = _g6_size(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[off:]
    if len(body) != nbytes:
        raise ParseError(
            f"expected {nbytes} adjacency bytes for n={n}, found {len(body)}", pos=off + 1
        )
    bits = []
    for c in body:
        val = c - 63
        bits.extend((val >> (5 - j)) & 1 for j in range(6))
    if any(bits[nbits:]):
        raise ParseError("nonzero graph6 padding bits", pos=len(data))
    edges = []
    k = 0
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    if not g.is_simple():
        raise ValueError("graph6 encodes simple graphs only")
    n = g.n
    index = {u: i for i, u in enumerate(g.vertices)}
    present = {(index[a], index[b]) for a, b in g.edges}
    bits = [1 if (i, j) in present else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    out = [c + 63 for c in head]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out).decode("ascii")
