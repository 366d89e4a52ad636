"""Information recoverable from H and P~: polynomial decks and degree sequences."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from . import graphcore as gc
from .corpus import labeled_graph
from .errors import (
    EmptyGraph,
    MalformedInput,
    NonIntegralDivision,
    PolynomialParseError,
    SizeGuardExceeded,
)
from .graphcore import Graph
from .invariants import scp_subset
from .polylib import (
    Polynomial,
    Var,
    coefficient_of,
    degree_in,
    parse_polynomial,
    substitute,
    to_canonical_text,
    v,
)

BRUTE_FORCE_MAX_N = 7


@dataclass(frozen=True)
class PolyDeck:
    """H-polynomials of the vertex-deleted subgraphs of an ``n``-vertex graph."""

    polys: tuple[Polynomial, ...]
    n: int

    def __post_init__(self):
        if len(self.polys) != self.n:
            raise ValueError(f"deck of an {self.n}-vertex graph needs {self.n} cards, got {len(self.polys)}")

    def key(self) -> tuple[str, ...]:
        """Multiset identity: sorted canonical texts."""
        return tuple(sorted(to_canonical_text(p) for p in self.polys))

    def to_text(self) -> str:
        lines = [str(self.n)] + [to_canonical_text(p) for p in self.polys]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PolyDeck":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise PolynomialParseError("empty deck file")
        try:
            n = int(lines[0])
        except ValueError:
            raise PolynomialParseError(f"first deck line must be the vertex count, got {lines[0]!r}") from None
        if len(lines) - 1 != n:
            raise PolynomialParseError(f"deck announces {n} cards, found {len(lines) - 1}")
        return cls(tuple(parse_polynomial(ln) for ln in lines[1:]), n)


@dataclass(frozen=True)
class DegreeHistogram:
    """Nonzero vertex counts per degree, plus the edge count recovered alongside."""

    counts: dict = field(default_factory=dict)
    num_edges: int = 0

    @property
    def num_vertices(self) -> int:
        return sum(self.counts.values())

    def to_text(self) -> str:
        return "\n".join(f"{i}:{c}" for i, c in sorted(self.counts.items()))


def polynomial_deck(g: Graph) -> PolyDeck:
    if not g.vertices:
        raise EmptyGraph("the empty graph has no deck")
    return PolyDeck(tuple(scp_subset(card) for card in gc.deck(g)), g.n)


def reconstruct_lower_coeffs(d: PolyDeck) -> Polynomial:
    """H(G) without its v^n stratum.

    Every term of H carrying v^i appears in exactly n - i cards, so the
    v^i stratum of the deck sum divided by n - i gives that of H.
    """
    n = d.n
    if n < 1:
        raise EmptyGraph("reconstruction needs a deck of a graph with n >= 1")
    total = Polynomial()
    for p in d.polys:
        total = total + p
    out: dict = {}
    for exps, c in total.terms.items():
        i = exps[Var.V]
        if i < 0 or i >= n:
            raise MalformedInput(f"deck card has a v^{i} term; cards of an {n}-vertex graph have v-degree < {n}")
        q, r = divmod(c, n - i)
        if r:
            raise NonIntegralDivision(f"coefficient {c} of v^{i} stratum not divisible by {n - i}")
        out[exps] = q
    return Polynomial(out)


def stratum(p: Polynomial, i: int) -> Polynomial:
    """Terms of ``p`` with v-exponent exactly ``i`` (v kept)."""
    return coefficient_of(p, {"v": i}) * Polynomial.var("v", i)


@lru_cache(maxsize=None)
def _deck_index(n: int) -> dict[tuple[str, ...], frozenset[str]]:
    """Deck key -> canonical texts of H for every labeled simple graph on n vertices."""
    card_memo: dict = {}
    index: dict[tuple[str, ...], set[str]] = {}
    for mask in range(1 << (n * (n - 1) // 2)):
        g = labeled_graph(n, mask)
        cards = []
        for card in gc.deck(g):
            ck = card.edges, card.vertices
            if ck not in card_memo:
                card_memo[ck] = to_canonical_text(scp_subset(card))
            cards.append(card_memo[ck])
        index.setdefault(tuple(sorted(cards)), set()).add(to_canonical_text(scp_subset(g)))
    return {k: frozenset(s) for k, s in index.items()}


def brute_force_reconstruct_check(d: PolyDeck, max_n: int = BRUTE_FORCE_MAX_N) -> list[Polynomial]:
    """Distinct H-polynomials of all labeled simple graphs whose deck equals ``d``.

    The search table for each ``n`` is built once and cached.
    """
    if d.n > max_n:
        raise SizeGuardExceeded(f"brute-force reconstruction limited to n <= {max_n}")
    hits = _deck_index(d.n).get(d.key(), frozenset())
    return [parse_polynomial(t) for t in sorted(hits)]


def degree_histogram_from_tcp(pt: Polynomial) -> DegreeHistogram:
    """Read d(G, i) off R = P~(G; v+1, 1, z).

    R = sum over W of v^|W| z^|E(G-W)|, so the v^1 terms count vertices by
    how many edges their deletion removes, and deg_z R = |E|.
    """
    if Var.V in pt.variables():
        raise MalformedInput("P~ must not contain v")
    if not pt.is_polynomial() or pt.is_zero():
        raise MalformedInput("P~ must be a nonzero polynomial")
    r = substitute(pt, {"x": v + 1, "y": 1})
    m = degree_in(r, Var.Z)
    if coefficient_of(r, {"v": 0}) != Polynomial.monomial((0, 0, 0, m)):
        raise MalformedInput("v^0 stratum of P~(v+1, 1, z) is not z^|E|")
    n = degree_in(r, Var.V)
    linear = coefficient_of(r, {"v": 1})
    counts: Counter = Counter()
    for (_, _, _, e), c in linear.terms.items():
        i = m - e
        if c < 0 or not 0 <= i <= m:
            raise MalformedInput(f"unexpected v*z^{e} coefficient {c}")
        counts[i] += c
    if sum(counts.values()) != n:
        raise MalformedInput(f"degree counts sum to {sum(counts.values())}, expected {n} vertices")
    return DegreeHistogram(dict(sorted(counts.items())), m)
