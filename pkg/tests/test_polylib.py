from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgeelim.errors import ArithmeticCapacityError, NegativePowerOfNonMonomial, PolynomialParseError, ZeroPolynomial
from edgeelim.polylib import (
    ONE,
    Polynomial,
    Var,
    coefficient_of,
    degree_in,
    evaluate,
    from_json,
    parse_polynomial,
    poly_add,
    poly_mul,
    substitute,
    to_canonical_text,
    to_json,
    v,
    x,
    y,
    z,
)

P = parse_polynomial


def test_var_order():
    assert Var.V < Var.X < Var.Y < Var.Z
    assert len(Var) == 4


# --- poly_add / poly_mul ---------------------------------------------------


def test_add_examples():
    assert poly_add(x, y) == P("x + y")
    assert poly_add(x, -x) == Polynomial()
    assert poly_add(x, -x).terms == {}
    assert poly_add(x**2 + x * y, z) == P("x^2 + x*y + z")


def test_mul_examples():
    assert poly_mul(x + y, x - y) == x**2 - y**2
    # expanded by hand: H of two isolated vertices
    assert poly_mul(1 + v * x, 1 + v * x) == P("1 + 2*v*x + v^2*x^2")
    assert poly_mul(Polynomial.var("v", -1), v) == ONE


def test_no_zero_coefficients_stored():
    p = Polynomial({(1, 0, 0, 0): 0, (0, 1, 0, 0): 3})
    assert list(p.terms) == [(0, 1, 0, 0)]


def test_exponent_overflow():
    big = Polynomial.var("x", 2**31 - 1)
    with pytest.raises(ArithmeticCapacityError):
        big * x
    with pytest.raises(ArithmeticCapacityError):
        Polynomial.var("y", 2**31)


def test_int_equality():
    assert Polynomial.const(3) == 3
    assert Polynomial() == 0


# --- substitute --------------------------------------------------------------


def test_substitute_examples():
    xi_k2 = P("x^2 + x*y + z")
    assert substitute(xi_k2, {"y": z - 1, "z": 0}) == P("x^2 + x*z - x")
    assert substitute(x, {}) == x
    assert substitute(v * z, {"v": -y * Polynomial.var("z", -1)}) == -y


def test_substitute_is_simultaneous():
    assert substitute(x + 2 * y, {"x": y, "y": x}) == y + 2 * x


def test_negative_power_of_sum_rejected():
    p = Polynomial.var("v", -1)
    with pytest.raises(NegativePowerOfNonMonomial):
        substitute(p, {"v": x + y})
    with pytest.raises(NegativePowerOfNonMonomial):
        substitute(p, {"v": 2 * x})
    with pytest.raises(ZeroDivisionError):
        substitute(p, {"v": 0})


# --- coefficient_of / degree_in -----------------------------------------------


def test_coefficient_of_examples():
    h_k2 = P("1 + 2*v*x + v^2*x^2 + v^2*x*y")
    assert coefficient_of(h_k2, {"v": 2}) == P("x^2 + x*y")
    assert coefficient_of(x, {"v": 0}) == x
    assert coefficient_of(Polynomial(), {"z": 3}) == 0


def test_coefficient_of_multiple_constraints():
    p = P("3*v*z^2 + v*x*z^2 + v*z")
    assert coefficient_of(p, {Var.V: 1, Var.Z: 2}) == 3 + x


def test_degree_in_examples():
    assert degree_in(P("x^2 + x*y + z"), Var.X) == 2
    assert degree_in(1 + v * x, "v") == 1
    assert degree_in(P("v*z^2 + v^3"), Var.Z) == 2
    with pytest.raises(ZeroPolynomial):
        degree_in(Polynomial(), Var.X)


# --- evaluate -----------------------------------------------------------------


def test_evaluate_examples():
    assert evaluate(P("x^2 + x*y + z"), {"x": 3, "y": 0, "z": 0}) == 9
    assert evaluate(1 + v * x, {"v": 1, "x": 4}) == 5
    assert evaluate(Polynomial.var("v", -1) * y, {"v": 2, "y": 6}) == 3
    assert evaluate(Polynomial.var("v", -1), {"v": 2}) == Fraction(1, 2)


def test_evaluate_errors():
    with pytest.raises(ZeroDivisionError):
        evaluate(Polynomial.var("v", -1), {"v": 0})
    with pytest.raises(ValueError):
        evaluate(x + y, {"x": 1})


# --- text and json ------------------------------------------------------------


def test_canonical_text_examples():
    assert to_canonical_text(P("1 + 2*v*x + v^2*x^2 + v^2*x*y")) == "v^2*x^2 + v^2*x*y + 2*v*x + 1"
    assert to_canonical_text(Polynomial()) == "0"
    assert to_canonical_text(x) == "x"
    assert to_canonical_text(P("x^2 - y + y*z")) == "x^2 + y*z - y"
    assert to_canonical_text(-x - 1) == "-x - 1"
    assert to_canonical_text(Polynomial.var("v", -1) * 2) == "2*v^-1"


@pytest.mark.parametrize("bad", ["", "x +", "x y", "2**", "q", "x^y"])
def test_parse_errors(bad):
    with pytest.raises(PolynomialParseError):
        parse_polynomial(bad)


def test_json_roundtrip():
    p = P("v^2*x^2 - 12345678901234567890*y + 1")
    assert from_json(to_json(p)) == p
    assert to_json(x + 1) == '[{"e": [0, 1, 0, 0], "c": "1"}, {"e": [0, 0, 0, 0], "c": "1"}]'


# --- properties ---------------------------------------------------------------

exps = st.tuples(*[st.integers(-2, 3)] * 4)
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(Polynomial)
nonneg_polys = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 4), st.integers(-5, 5), max_size=4).map(Polynomial)
small_bindings = st.dictionaries(st.sampled_from(list(Var)), nonneg_polys, max_size=4)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + (b + c) == (a + b) + c
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(polys)
def test_identity_substitution(p):
    assert substitute(p, {var: Polynomial.var(var) for var in Var}) == p
    assert substitute(p, {}) == p


@settings(max_examples=60)
@given(nonneg_polys, nonneg_polys, small_bindings)
def test_substitute_is_homomorphism(a, b, bindings):
    assert substitute(a + b, bindings) == substitute(a, bindings) + substitute(b, bindings)
    assert substitute(a * b, bindings) == substitute(a, bindings) * substitute(b, bindings)


@settings(max_examples=60)
@given(nonneg_polys, small_bindings, st.tuples(*[st.integers(-3, 3)] * 4))
def test_evaluate_commutes_with_substitute(p, bindings, pt):
    point = dict(zip(Var, pt))
    inner = {var: evaluate(bindings.get(var, Polynomial.var(var)), point) for var in Var}
    assert evaluate(substitute(p, bindings), point) == evaluate(p, inner)


@given(polys, polys)
def test_canonical_text_injective(a, b):
    assert (to_canonical_text(a) == to_canonical_text(b)) == (a == b)
    assert parse_polynomial(to_canonical_text(a)) == a
