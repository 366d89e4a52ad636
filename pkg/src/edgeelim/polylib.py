"""Sparse Laurent polynomials in the fixed variables v, x, y, z.

A polynomial is an immutable map from exponent 4-tuples ``(e_v, e_x, e_y, e_z)``
to nonzero Python integers.  Exponents may be negative so that the
equivalence transforms can pass through Laurent intermediates; callers
check that final results are genuine polynomials.
"""

from __future__ import annotations

import json
import re
from enum import IntEnum
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import (
    ArithmeticCapacityError,
    NegativePowerOfNonMonomial,
    PolynomialParseError,
    ZeroPolynomial,
)

EXP_LIMIT = 2**31 - 1
ZERO_EXP = (0, 0, 0, 0)


class Var(IntEnum):
    V = 0
    X = 1
    Y = 2
    Z = 3

    @property
    def symbol(self) -> str:
        return self.name.lower()

    @classmethod
    def coerce(cls, v: Union["Var", str, int]) -> "Var":
        if isinstance(v, cls):
            return v
        if isinstance(v, str):
            try:
                return cls[v.upper()]
            except KeyError:
                raise ValueError(f"unknown variable {v!r}") from None
        return cls(v)


VARS = tuple(Var)


def _check_exps(keys: Iterable[tuple]) -> None:
    for k in keys:
        for e in k:
            if e > EXP_LIMIT or e < -EXP_LIMIT:
                raise ArithmeticCapacityError(f"exponent {e} outside signed 32-bit range")


def _max_abs_exp(terms) -> int:
    return max((abs(e) for k in terms for e in k), default=0)


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if len(k) != 4:
                    raise ValueError(f"exponent tuple must have 4 entries, got {k!r}")
                if c:
                    clean[tuple(int(e) for e in k)] = int(c)
            _check_exps(clean)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls._raw({ZERO_EXP: int(c)} if c else {})

    @classmethod
    def var(cls, v, power: int = 1) -> "Polynomial":
        exps = [0, 0, 0, 0]
        exps[Var.coerce(v)] = power
        return cls.monomial(exps)

    @classmethod
    def monomial(cls, exps, coeff: int = 1) -> "Polynomial":
        return cls({tuple(exps): coeff})

    @property
    def terms(self) -> Mapping[tuple, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_polynomial(self) -> bool:
        """True when no exponent is negative."""
        return all(e >= 0 for k in self._terms for e in k)

    def variables(self) -> set[Var]:
        return {Var(i) for k in self._terms for i, e in enumerate(k) if e}

    # arithmetic

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for k, c in small.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return Polynomial._raw({})
        if _max_abs_exp(a) + _max_abs_exp(b) > EXP_LIMIT:
            out = _mul_terms(a, b)
            _check_exps(out)
            return Polynomial._raw(out)
        return Polynomial._raw(_mul_terms(a, b))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "Polynomial":
        """Inverse in the Laurent ring; only unit monomials (coefficient +-1) qualify."""
        if not self._terms:
            raise ZeroDivisionError("inverse of the zero polynomial")
        if len(self._terms) != 1:
            raise NegativePowerOfNonMonomial(
                f"cannot invert a {len(self._terms)}-term polynomial: {to_canonical_text(self)}"
            )
        ((k, c),) = self._terms.items()
        if c not in (1, -1):
            raise NegativePowerOfNonMonomial(
                f"monomial {to_canonical_text(self)} has no integer Laurent inverse"
            )
        return Polynomial({tuple(-e for e in k): c})

    # comparison

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"Polynomial({to_canonical_text(self)!r})"

    def __str__(self):
        return to_canonical_text(self)


def _mul_terms(a: dict, b: dict) -> dict:
    out: dict = {}
    get = out.get
    for (a0, a1, a2, a3), ca in a.items():
        for (b0, b1, b2, b3), cb in b.items():
            k = (a0 + b0, a1 + b1, a2 + b2, a3 + b3)
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def _lift(other):
    if isinstance(other, Polynomial):
        return other
    if isinstance(other, int):
        return Polynomial.const(other)
    return NotImplemented


ONE = Polynomial.const(1)
ZERO = Polynomial.const(0)
v = Polynomial.var(Var.V)
x = Polynomial.var(Var.X)
y = Polynomial.var(Var.Y)
z = Polynomial.var(Var.Z)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def substitute(p: Polynomial, bindings: Mapping) -> Polynomial:
    """Simultaneously replace variables by polynomials.

    Unbound variables stay as they are.  A variable that occurs with a
    negative exponent must be bound to a unit monomial.
    """
    bound: dict[Var, Polynomial] = {}
    for k, val in bindings.items():
        var = Var.coerce(k)
        bound[var] = val if isinstance(val, Polynomial) else Polynomial.const(val)

    power_cache: dict[tuple[Var, int], Polynomial] = {}

    def power(var: Var, e: int) -> Polynomial:
        key = (var, e)
        if key not in power_cache:
            if e < 0:
                inv = power_cache.get((var, -1))
                if inv is None:
                    inv = bound[var].inverse()
                    power_cache[(var, -1)] = inv
                power_cache[key] = inv if e == -1 else inv ** (-e)
            else:
                power_cache[key] = bound[var] ** e
        return power_cache[key]

    acc: dict = {}
    for exps, c in p.terms.items():
        free = [0, 0, 0, 0]
        term = Polynomial.const(c)
        for var in VARS:
            e = exps[var]
            if not e:
                continue
            if var in bound:
                term = term * power(var, e)
            else:
                free[var] = e
        if any(free):
            term = term * Polynomial.monomial(free)
        for k, tc in term.terms.items():
            s = acc.get(k, 0) + tc
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
    return Polynomial._raw(acc)


def coefficient_of(p: Polynomial, constraints: Mapping) -> Polynomial:
    """Collect the terms whose exponents match ``constraints`` exactly.

    The constrained variables are removed (their exponent set to zero) in the
    result, e.g. ``coefficient_of(H, {"v": n})`` is the Potts model inside H.
    """
    cons = {Var.coerce(k): int(e) for k, e in constraints.items()}
    out: dict = {}
    for exps, c in p.terms.items():
        if all(exps[var] == e for var, e in cons.items()):
            k = tuple(0 if Var(i) in cons else e for i, e in enumerate(exps))
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return Polynomial._raw(out)


def degree_in(p: Polynomial, var) -> int:
    if p.is_zero():
        raise ZeroPolynomial("degree of the zero polynomial is undefined")
    i = Var.coerce(var)
    return max(k[i] for k in p.terms)


def evaluate(p: Polynomial, point: Mapping) -> Union[int, Fraction]:
    """Exact value at an integer point.

    Returns an ``int`` unless some exponent is negative, in which case the
    value is a ``Fraction``.
    """
    vals = {Var.coerce(k): val for k, val in point.items()}
    missing = p.variables() - vals.keys()
    if missing:
        names = ", ".join(sorted(var.symbol for var in missing))
        raise ValueError(f"unbound variables: {names}")
    laurent = not p.is_polynomial()
    total = Fraction(0) if laurent else 0
    for exps, c in p.terms.items():
        t = Fraction(c) if laurent else c
        for i, e in enumerate(exps):
            if e > 0:
                t *= vals[Var(i)] ** e
            elif e < 0:
                base = vals[Var(i)]
                if base == 0:
                    raise ZeroDivisionError(f"{Var(i).symbol} = 0 raised to {e}")
                t /= Fraction(base) ** (-e)
        total += t
    return total


def _sort_key(exps):
    return (sum(exps), exps)


def sorted_terms(p: Polynomial) -> list[tuple[tuple, int]]:
    """Terms in canonical order: total degree descending, then lex (v,x,y,z) descending."""
    return sorted(p.terms.items(), key=lambda kv: _sort_key(kv[0]), reverse=True)


def _render_term(exps, c: int) -> str:
    factors = []
    for var, e in zip(VARS, exps):
        if e == 0:
            continue
        factors.append(var.symbol if e == 1 else f"{var.symbol}^{e}")
    mag = abs(c)
    if not factors:
        return str(mag)
    body = "*".join(factors)
    return body if mag == 1 else f"{mag}*{body}"


def to_canonical_text(p: Polynomial) -> str:
    items = sorted_terms(p)
    if not items:
        return "0"
    parts = []
    for i, (exps, c) in enumerate(items):
        term = _render_term(exps, c)
        if i == 0:
            parts.append(f"-{term}" if c < 0 else term)
        else:
            parts.append(f" - {term}" if c < 0 else f" + {term}")
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|([vxyzVXYZ])|(\*\*|\^)|([-+*]))")


def parse_polynomial(text: str) -> Polynomial:
    """Parse canonical text (and any sum of products of integers and powers of v,x,y,z)."""
    src = text.strip()
    if not src:
        raise PolynomialParseError("empty polynomial text")
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise PolynomialParseError(f"unexpected character {src[pos]!r} at column {pos + 1}")
        num, var, caret, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("var", Var.coerce(var)))
        elif caret is not None:
            tokens.append(("pow", None))
        else:
            tokens.append(("op", op))
        pos = m.end()
        while pos < len(src) and src[pos].isspace():
            pos += 1

    acc: dict = {}
    i = 0
    n = len(tokens)

    def expect_factor():
        nonlocal i
        if i >= n:
            raise PolynomialParseError("expression ends where a factor was expected")
        kind, val = tokens[i]
        i += 1
        if kind == "num":
            return val, ZERO_EXP
        if kind == "var":
            e = 1
            if i < n and tokens[i][0] == "pow":
                i += 1
                sign = 1
                if i < n and tokens[i] == ("op", "-"):
                    sign = -1
                    i += 1
                if i >= n or tokens[i][0] != "num":
                    raise PolynomialParseError("exponent must be an integer")
                e = sign * tokens[i][1]
                i += 1
            exps = [0, 0, 0, 0]
            exps[val] = e
            return 1, tuple(exps)
        raise PolynomialParseError(f"unexpected token {val!r}")

    first = True
    while i < n:
        sign = 1
        if i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise PolynomialParseError("missing '+' or '-' between terms")
        first = False
        coeff, exps = expect_factor()
        exps = list(exps)
        while i < n and tokens[i] == ("op", "*"):
            i += 1
            c2, e2 = expect_factor()
            coeff *= c2
            exps = [a + b for a, b in zip(exps, e2)]
        k = tuple(exps)
        acc[k] = acc.get(k, 0) + sign * coeff
    return Polynomial(acc)


def to_json(p: Polynomial) -> str:
    return json.dumps([{"e": list(k), "c": str(c)} for k, c in sorted_terms(p)])


def from_json(text: str) -> Polynomial:
    data = json.loads(text)
    acc: dict = {}
    for item in data:
        k = tuple(int(e) for e in item["e"])
        acc[k] = acc.get(k, 0) + int(item["c"])
    return Polynomial(acc)
