"""Substitutions between xi, H, P~ and Q.

Every composite substitution target is written as a Laurent sum of
monomials (e.g. (1 + v x)/v as v^-1 + x), so the only inverses ever
taken are of unit monomials.
"""

from __future__ import annotations

from .errors import MalformedQ, NonPolynomialResult
from .polylib import Polynomial, Var, substitute, to_canonical_text, x, y, z


def _require_polynomial(p: Polynomial, what: str) -> Polynomial:
    if not p.is_polynomial():
        raise NonPolynomialResult(f"{what} left negative exponents: {to_canonical_text(p)}")
    return p


def _require_vars(p: Polynomial, allowed: set, what: str) -> None:
    extra = p.variables() - allowed
    if extra:
        names = ", ".join(sorted(var.symbol for var in extra))
        raise ValueError(f"{what} must not contain {names}")


def scp_from_eep(xi: Polynomial, n: int) -> Polynomial:
    """H(G; v, x, y) = v^n xi(G; v^-1 + x, y, -y v^-1)."""
    _require_vars(xi, {Var.X, Var.Y, Var.Z}, "xi")
    v_inv = Polynomial.var("v", -1)
    h = Polynomial.var("v", n) * substitute(xi, {"x": v_inv + x, "z": -y * v_inv})
    return _require_polynomial(h, "scp_from_eep")


def eep_from_scp(h: Polynomial, n: int) -> Polynomial:
    """xi(G; x, y, z) = (-z/y)^n H(G; -y/z, x + z/y, y).

    Obtained by solving the forward map for v = -y/z.
    """
    _require_vars(h, {Var.V, Var.X, Var.Y}, "H")
    y_inv = Polynomial.var("y", -1)
    z_inv = Polynomial.var("z", -1)
    sub = substitute(h, {"v": -y * z_inv, "x": x + z * y_inv})
    prefactor = Polynomial.monomial((0, 0, -n, n), -1 if n % 2 else 1)
    return _require_polynomial(prefactor * sub, "eep_from_scp")


def eep_from_scp_printed(h: Polynomial, n: int) -> Polynomial:
    """The alternative inverse xi = (x-y)^n H(1/(x-y), y, z/(x-y)), taken literally.

    Kept as a negative control: it does not invert :func:`scp_from_eep`.
    With t = x - y, the monomial v^a x^b y^c maps to t^(n-a-c) y^b z^c;
    any negative power of t raises :class:`NonPolynomialResult`.
    """
    _require_vars(h, {Var.V, Var.X, Var.Y}, "H")
    t = x - y
    total = Polynomial()
    for (a, b, c, _), coeff in h.terms.items():
        k = n - a - c
        if k < 0:
            raise NonPolynomialResult(
                f"term v^{a}*x^{b}*y^{c} leaves (x-y)^{k} in the result"
            )
        total = total + coeff * t**k * y**b * z**c
    return total


def tcp_from_eep(xi: Polynomial) -> Polynomial:
    """P~(G; x, y, z) = xi(G; x, z - 1, (1 - z)(x - y))."""
    _require_vars(xi, {Var.X, Var.Y, Var.Z}, "xi")
    return substitute(xi, {"y": z - 1, "z": (1 - z) * (x - y)})


def eep_from_tcp(pt: Polynomial) -> Polynomial:
    """xi(G; x, y, z) = P~(G; x, x + z/y, y + 1)."""
    _require_vars(pt, {Var.X, Var.Y, Var.Z}, "P~")
    sub = substitute(pt, {"y": x + z * Polynomial.var("y", -1), "z": y + 1})
    return _require_polynomial(sub, "eep_from_tcp")


def scp_from_scomp_forest(q: Polynomial) -> Polynomial:
    """H(F) from Q(F) for a forest: v^a x^b -> v^a x^b (x+y)^(a-b)."""
    _require_vars(q, {Var.V, Var.X}, "Q")
    xy = x + y
    total = Polynomial()
    for (a, b, _, _), coeff in q.terms.items():
        if b > a or a < 0 or b < 0:
            raise MalformedQ(f"monomial v^{a}*x^{b} cannot occur in a subgraph component polynomial")
        total = total + coeff * Polynomial.monomial((a, b, 0, 0)) * xy ** (a - b)
    return total


def scomp_from_scp_forest(h: Polynomial) -> Polynomial:
    """Q(F; v, x) = H(F; v, x, 1 - x); only valid when F is a forest."""
    _require_vars(h, {Var.V, Var.X, Var.Y}, "H")
    return substitute(h, {"y": 1 - x})


__all__ = [
    "eep_from_scp",
    "eep_from_scp_printed",
    "eep_from_tcp",
    "scomp_from_scp_forest",
    "scp_from_eep",
    "scp_from_scomp_forest",
    "tcp_from_eep",
]
