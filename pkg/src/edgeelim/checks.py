"""Identity suite run by ``edgeelim check``: every cross-check on one graph."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import encodings as enc
from . import graphcore as gc
from . import invariants as inv
from . import transforms as tr
from .graphcore import Graph
from .polylib import Polynomial, coefficient_of, substitute, x, y, z

ORACLE_MAX_VERTICES = 5


@dataclass
class CheckResult:
    name: str
    passed: bool | None  # None: not applicable to this graph
    detail: str = ""


def is_forest(g: Graph) -> bool:
    return g.is_simple() and g.m == g.n - gc.component_count(g)


class _Cache:
    """Lazily computed polynomials of one graph, each computed once."""

    def __init__(self, g: Graph):
        self.g = g
        self._vals: dict[str, Polynomial] = {}

    def get(self, name: str, fn: Callable[[], Polynomial]) -> Polynomial:
        if name not in self._vals:
            self._vals[name] = fn()
        return self._vals[name]


def run_identity_suite(g: Graph, seed: int = 0) -> list[CheckResult]:
    c = _Cache(g)
    xi = c.get("xi", lambda: inv.eep_recurrence(g))
    Z = c.get("Z", lambda: inv.potts_subset(g))
    H = c.get("H", lambda: inv.scp_subset(g))
    PT = c.get("PT", lambda: inv.tcp_expansion(g))
    n = g.n
    out: list[CheckResult] = []

    def add(name, ok, detail=""):
        out.append(CheckResult(name, ok, detail))

    add("potts: subset = recurrence", Z == inv.potts_recurrence(g))
    add("scp: subset = induced", H == inv.scp_induced(g))
    add("scp: subset = recurrence", H == inv.scp_recurrence(g))
    add("tcp: expansion = recurrence", PT == inv.tcp_recurrence(g))

    rng = random.Random(seed)
    add(
        "pivot independence (last, random)",
        all(
            f(g, pivot=p) == ref
            for f, ref in ((inv.eep_recurrence, xi), (inv.scp_recurrence, H), (inv.tcp_recurrence, PT))
            for p in ("last", rng)
        ),
    )

    badcol = inv.badcol_from_potts(Z)
    biv = inv.bivariate_chromatic(g)
    add("xi(x,y,0) = Z", substitute(xi, {"z": 0}) == Z)
    add("xi(x,z-1,0) = badcol", substitute(xi, {"y": z - 1, "z": 0}) == badcol)
    add("badcol: subset = recurrence", badcol == inv.badcol_recurrence(g))
    add("xi(x,-1,x-y) = P", substitute(xi, {"y": -1, "z": x - y}) == biv)
    add("P: expansion = recurrence", biv == inv.bivchrom_recurrence(g))
    add("[v^|V|]H = Z", coefficient_of(H, {"v": n}) == Z)

    add("eep_from_scp(H) = xi", tr.eep_from_scp(H, n) == xi)
    add("scp_from_eep(xi) = H", tr.scp_from_eep(xi, n) == H)
    add("tcp_from_eep(xi) = P~", tr.tcp_from_eep(xi) == PT)
    add("eep_from_tcp(P~) = xi", tr.eep_from_tcp(PT) == xi)

    if n >= 1:
        hist = enc.degree_histogram_from_tcp(PT)
        add("degree histogram from P~", hist.counts == gc.degree_histogram(g) and hist.num_edges == g.m)
        deck = enc.polynomial_deck(g)
        total = sum(deck.polys, Polynomial())
        add(
            "deck sum = (n-i) [v^i]H",
            all(coefficient_of(total, {"v": i}) == (n - i) * coefficient_of(H, {"v": i}) for i in range(n)),
        )
        add("deck reconstructs lower strata", enc.reconstruct_lower_coeffs(deck) == H - enc.stratum(H, n))
    else:
        add("degree histogram from P~", None, "empty graph")
        add("deck sum = (n-i) [v^i]H", None, "empty graph")
        add("deck reconstructs lower strata", None, "empty graph")

    if is_forest(g):
        Q = inv.scomp_subset(g)
        add("forest: H from Q", tr.scp_from_scomp_forest(Q) == H)
        add("forest: Q from H", tr.scomp_from_scp_forest(H) == Q)
    else:
        add("forest: H from Q", None, "not a forest")
        add("forest: Q from H", None, "not a forest")

    if n <= ORACLE_MAX_VERTICES:
        ok = all(
            substitute(PT, {"x": xv, "y": yv}) == inv.tcp_coloring_oracle(g, xv, yv)
            for xv in range(4)
            for yv in range(xv + 1)
        )
        add("coloring oracle (y <= x <= 3)", ok)
    else:
        add("coloring oracle (y <= x <= 3)", None, f"more than {ORACLE_MAX_VERTICES} vertices")
    return out
