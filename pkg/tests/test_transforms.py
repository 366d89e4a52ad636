import random
from fractions import Fraction

import pytest

from helpers import K1, K2, K3, P3, small_corpus
from edgeelim import invariants as inv
from edgeelim import transforms as tr
from edgeelim.corpus import labeled_trees, random_forest
from edgeelim.errors import MalformedQ, NonPolynomialResult
from edgeelim.polylib import Polynomial, coefficient_of, evaluate, parse_polynomial, x

P = parse_polynomial
XI_K2 = P("x^2 + x*y + z")
H_K2 = P("1 + 2*v*x + v^2*x^2 + v^2*x*y")
PT_K2 = P("x^2 - y + y*z")


def test_scp_from_eep_examples():
    assert tr.scp_from_eep(x, 1) == P("1 + v*x")
    assert tr.scp_from_eep(XI_K2, 2) == H_K2
    assert tr.scp_from_eep(Polynomial.const(1), 0) == 1


def test_scp_from_eep_wrong_n():
    with pytest.raises(NonPolynomialResult):
        tr.scp_from_eep(XI_K2, 1)


def test_eep_from_scp_examples():
    assert tr.eep_from_scp(P("1 + v*x"), 1) == x
    assert tr.eep_from_scp(H_K2, 2) == XI_K2
    assert tr.eep_from_scp(Polynomial.const(1), 0) == 1
    with pytest.raises(NonPolynomialResult):
        tr.eep_from_scp(H_K2, 3)


def test_tcp_eep_examples():
    assert tr.tcp_from_eep(XI_K2) == PT_K2
    assert tr.tcp_from_eep(x) == x
    assert tr.tcp_from_eep(Polynomial.const(1)) == 1
    assert tr.eep_from_tcp(PT_K2) == XI_K2
    assert tr.eep_from_tcp(x) == x
    assert tr.eep_from_tcp(Polynomial.const(1)) == 1


def test_variable_preconditions():
    with pytest.raises(ValueError):
        tr.scp_from_eep(P("v*x"), 1)
    with pytest.raises(ValueError):
        tr.eep_from_scp(P("z"), 1)


def test_round_trips_on_corpus():
    for g in small_corpus():
        xi, H, PT = inv.eep_recurrence(g), inv.scp_subset(g), inv.tcp_expansion(g)
        assert tr.eep_from_scp(H, g.n) == xi
        assert tr.scp_from_eep(xi, g.n) == H
        assert tr.tcp_from_eep(xi) == PT
        assert tr.eep_from_tcp(PT) == xi


def test_printed_inverse_fails_on_k2():
    with pytest.raises(NonPolynomialResult):
        tr.eep_from_scp_printed(H_K2, 2)


def test_printed_inverse_disagrees_numerically():
    # (x-y)^2 H(1/(x-y), y, z/(x-y)) at a rational point, H(K2) expanded inline
    xv, yv, zv = 5, 2, 7
    t = Fraction(xv - yv)
    hv, hx, hy = 1 / t, Fraction(yv), zv / t
    printed = t**2 * (1 + 2 * hv * hx + hv**2 * hx**2 + hv**2 * hx * hy)
    assert printed != evaluate(XI_K2, {"x": xv, "y": yv, "z": zv})


def test_forest_transform_examples():
    assert tr.scp_from_scomp_forest(P("1 + 2*v*x + v^2*x")) == H_K2
    assert tr.scp_from_scomp_forest(P("1 + v*x")) == P("1 + v*x")
    assert tr.scp_from_scomp_forest(Polynomial.const(1)) == 1
    q_p3 = P("1 + 3*v*x + 2*v^2*x + v^2*x^2 + v^3*x")
    assert tr.scomp_from_scp_forest(inv.scp_subset(P3)) == q_p3
    assert tr.scomp_from_scp_forest(P("1 + v*x")) == P("1 + v*x")
    with pytest.raises(MalformedQ):
        tr.scp_from_scomp_forest(P("v*x^2"))


def test_forest_transform_fails_for_triangle():
    q = inv.scomp_subset(K3)
    assert q == P("1 + 3*v*x + 3*v^2*x + v^3*x")
    h_sub = tr.scomp_from_scp_forest(inv.scp_subset(K3))
    assert h_sub != q
    assert coefficient_of(h_sub, {"v": 3}) == P("4*x - 6*x^2 + 4*x^3 - x^4")
    assert coefficient_of(h_sub, {"v": 2}) == coefficient_of(q, {"v": 2})


def test_forest_transforms_on_trees():
    rng = random.Random(8)
    forests = [t for n in range(1, 6) for t in labeled_trees(n)] + [random_forest(rng) for _ in range(10)]
    for f in forests:
        H, Q = inv.scp_subset(f), inv.scomp_subset(f)
        assert tr.scp_from_scomp_forest(Q) == H
        assert tr.scomp_from_scp_forest(H) == Q


def test_k1_values():
    assert tr.scp_from_eep(inv.eep_recurrence(K1), 1) == inv.scp_subset(K1)
    assert tr.eep_from_scp(inv.scp_subset(K2), 2) == inv.eep_recurrence(K2)
