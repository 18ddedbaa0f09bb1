"""Closed-form expression trees.

Nodes are small frozen dataclasses so trees are hashable and safe to share.
Python operators build raw (uncanonicalized) trees; :func:`canonical`
flattens sums/products, orders children by a total order and folds rational
arithmetic (including exact reduction of sums of roots of unity). It does no
other algebra: gamma products and radicals stay exactly as written.

Elliptic ``K``/``E`` nodes take the *parameter* ``m = k**2``.
"""

from __future__ import annotations

import math

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping

from .params import Affine, ParamList, format_param, format_rational, subs_param

UNARY_FUNCTIONS = (
    "log", "exp", "sin", "cos", "sinh", "cosh",
    "asin", "acos", "atan", "asinh", "atanh",
    "gamma", "K", "E", "re", "im",
)
CONSTANTS = ("i", "pi", "catalan")


class Expr:
    __slots__ = ()

    def __add__(self, other):
        return Add((self, wrap(other)))

    def __radd__(self, other):
        return Add((wrap(other), self))

    def __sub__(self, other):
        return Add((self, Neg(wrap(other))))

    def __rsub__(self, other):
        return Add((wrap(other), Neg(self)))

    def __mul__(self, other):
        return Mul((self, wrap(other)))

    def __rmul__(self, other):
        return Mul((wrap(other), self))

    def __truediv__(self, other):
        return Mul((self, Pow(wrap(other), Num(Fraction(-1)))))

    def __rtruediv__(self, other):
        return Mul((wrap(other), Pow(self, Num(Fraction(-1)))))

    def __pow__(self, other):
        return Pow(self, wrap(other))

    def __neg__(self):
        return Neg(self)


@dataclass(frozen=True)
class Num(Expr):
    value: Fraction


@dataclass(frozen=True)
class Sym(Expr):
    name: str


@dataclass(frozen=True)
class Const(Expr):
    name: str  # one of CONSTANTS


@dataclass(frozen=True)
class Add(Expr):
    terms: tuple


@dataclass(frozen=True)
class Mul(Expr):
    factors: tuple


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exp: Expr


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True)
class Fn(Expr):
    name: str  # one of UNARY_FUNCTIONS
    arg: Expr


@dataclass(frozen=True)
class Zeta(Expr):
    s: int


@dataclass(frozen=True)
class PolyLog(Expr):
    order: int
    arg: Expr

    def __post_init__(self):
        if self.order not in (2, 3, 4):
            raise ValueError(f"polylog order {self.order} not in {{2, 3, 4}}")


@dataclass(frozen=True)
class RootOfUnity(Expr):
    """``exp(2*pi*i*k/n)``."""

    n: int
    k: int


@dataclass(frozen=True)
class Hyp(Expr):
    series: "HypSeries"  # noqa: F821  (hyperdist.series.HypSeries)


I = Const("i")
PI = Const("pi")
CATALAN = Const("catalan")
ZERO = Num(Fraction(0))
ONE = Num(Fraction(1))


def wrap(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, (int, Fraction)):
        return Num(Fraction(x))
    if isinstance(x, Affine):
        return affine_expr(x)
    raise TypeError(f"cannot convert {x!r} to Expr")


def num(x) -> Num:
    return Num(Fraction(x))


def sqrt(x) -> Expr:
    return Pow(wrap(x), Num(Fraction(1, 2)))


def fn(name: str, x) -> Fn:
    if name not in UNARY_FUNCTIONS:
        raise ValueError(f"unknown function {name}")
    return Fn(name, wrap(x))


def affine_expr(p) -> Expr:
    if isinstance(p, Fraction):
        return Num(p)
    terms = [Mul((Num(c), Sym(k))) for k, c in p.coeffs]
    if p.const:
        terms.append(Num(p.const))
    return Add(tuple(terms)) if len(terms) > 1 else terms[0]


# ----------------------------------------------------------------- traversal

def children(e: Expr) -> tuple:
    if isinstance(e, Add):
        return e.terms
    if isinstance(e, Mul):
        return e.factors
    if isinstance(e, Pow):
        return (e.base, e.exp)
    if isinstance(e, (Neg, Fn, PolyLog)):
        return (e.arg,)
    if isinstance(e, Hyp):
        return (e.series.z,)
    return ()


def walk(e: Expr):
    yield e
    for c in children(e):
        yield from walk(c)


def free_symbols(e: Expr) -> frozenset:
    out = set()
    for node in walk(e):
        if isinstance(node, Sym):
            out.add(node.name)
        elif isinstance(node, Hyp):
            out |= node.series.upper.symbols | node.series.lower.symbols
    return frozenset(out)


def hyp_nodes(e: Expr) -> list:
    return [n for n in walk(e) if isinstance(n, Hyp)]


def map_children(e: Expr, f) -> Expr:
    if isinstance(e, Add):
        return Add(tuple(f(c) for c in e.terms))
    if isinstance(e, Mul):
        return Mul(tuple(f(c) for c in e.factors))
    if isinstance(e, Pow):
        return Pow(f(e.base), f(e.exp))
    if isinstance(e, Neg):
        return Neg(f(e.arg))
    if isinstance(e, Fn):
        return Fn(e.name, f(e.arg))
    if isinstance(e, PolyLog):
        return PolyLog(e.order, f(e.arg))
    if isinstance(e, Hyp):
        s = e.series
        return Hyp(type(s)(s.upper, s.lower, f(s.z)))
    return e


def subs(e: Expr, binding: Mapping) -> Expr:
    """Substitute rationals (or expressions) for symbols, including Hyp parameters."""
    if isinstance(e, Sym):
        if e.name in binding:
            return wrap(binding[e.name])
        return e
    if isinstance(e, Hyp):
        s = e.series
        rb = {k: v for k, v in binding.items() if isinstance(v, (int, Fraction))}
        return Hyp(type(s)(ParamList(subs_param(p, rb) for p in s.upper),
                           ParamList(subs_param(p, rb) for p in s.lower),
                           subs(s.z, binding)))
    return map_children(e, lambda c: subs(c, binding))


def replace(e: Expr, f) -> Expr:
    """Bottom-up rewrite: ``f(node)`` returns a replacement or None."""
    e2 = map_children(e, lambda c: replace(c, f))
    r = f(e2)
    return e2 if r is None else r


# ------------------------------------------------------------ canonical form

_KIND_RANK = {
    "int": 0, "rational": 0, "i": 1, "pi": 2, "catalan": 3, "root_of_unity": 4,
    "symbol": 5, "zeta": 6, "pow": 7, "mul": 8, "add": 9, "polylog": 10, "hyp": 12,
}


def sort_key(e: Expr):
    d = to_json(e)
    return (_KIND_RANK.get(d["kind"], 11), json.dumps(d, sort_keys=True))


def _root(n: int, k: int) -> Expr:
    k %= n
    g = gcd(k, n)
    n, k = n // g, k // g
    if k == 0:
        return ONE
    if n == 2:
        return Num(Fraction(-1))
    return RootOfUnity(n, k)


def _split_coeff(e: Expr):
    """Return ``(rational coefficient, rest or None)`` for a canonical node."""
    if isinstance(e, Num):
        return e.value, None
    if isinstance(e, Mul) and isinstance(e.factors[0], Num):
        rest = e.factors[1:]
        return e.factors[0].value, (rest[0] if len(rest) == 1 else Mul(rest))
    return Fraction(1), e


def _reduce_roots(terms: list) -> list:
    """Exactly fold the Z-linear combination of roots of unity among ``terms``."""
    roots = []
    other = []
    for t in terms:
        c, rest = _split_coeff(t)
        if isinstance(rest, RootOfUnity):
            roots.append((c, rest))
        else:
            other.append(t)
    if len(roots) < 2:
        return terms
    from .cyclotomic import reduce_root_sum

    n = 1
    for _, r in roots:
        n = n * r.n // gcd(n, r.n)
    coeffs = [Fraction(0)] * n
    for c, r in roots:
        coeffs[(r.k * (n // r.n)) % n] += c
    reduced = reduce_root_sum(coeffs, n)
    out = list(other)
    const = reduced[0]
    if const:
        out.append(Num(const))
    for k in range(1, n):
        if reduced[k]:
            out.append(_mul_canon([Num(reduced[k]), _root(n, k)]))
    return out


def _add_canon(terms) -> Expr:
    flat = []
    for t in terms:
        if isinstance(t, Add):
            flat.extend(t.terms)
        else:
            flat.append(t)
    flat = _reduce_roots(flat)
    const = Fraction(0)
    collected: dict = {}
    order = []
    for t in flat:
        if isinstance(t, Num):
            const += t.value
            continue
        c, rest = _split_coeff(t)
        if rest not in collected:
            collected[rest] = Fraction(0)
            order.append(rest)
        collected[rest] += c
    out = []
    for rest in order:
        c = collected[rest]
        if c == 0:
            continue
        out.append(rest if c == 1 else _mul_canon([Num(c), rest]))
    out.sort(key=sort_key)
    if const != 0:
        out.insert(0, Num(const))
    if not out:
        return ZERO
    if len(out) == 1:
        return out[0]
    return Add(tuple(out))


def _mul_canon(factors) -> Expr:
    flat = []
    for f in factors:
        if isinstance(f, Mul):
            flat.extend(f.factors)
        else:
            flat.append(f)
    coeff = Fraction(1)
    root_n, root_k = 1, 0
    rest = []
    for f in flat:
        if isinstance(f, Num):
            coeff *= f.value
        elif isinstance(f, RootOfUnity):
            n = root_n * f.n // gcd(root_n, f.n)
            root_k = root_k * (n // root_n) + f.k * (n // f.n)
            root_n = n
        else:
            rest.append(f)
    if coeff == 0:
        return ZERO
    r = _root(root_n, root_k)
    if isinstance(r, Num):
        coeff *= r.value
    elif r != ONE:
        rest.append(r)
    # merge equal bases with rational exponents: x^p * x^q -> x^(p+q)
    powers: dict = {}
    order = []
    for f in rest:
        if isinstance(f, Pow) and isinstance(f.exp, Num):
            base, ex = f.base, f.exp.value
        else:
            base, ex = f, Fraction(1)
        if base not in powers:
            powers[base] = Fraction(0)
            order.append(base)
        powers[base] += ex
    rest = []
    for base in order:
        ex = powers[base]
        if ex == 0:
            continue
        p = _pow_canon(base, Num(ex))
        if isinstance(p, Num):
            coeff *= p.value
        elif isinstance(p, Mul):
            for g in p.factors:
                if isinstance(g, Num):
                    coeff *= g.value
                else:
                    rest.append(g)
        else:
            rest.append(p)
    if coeff == 0:
        return ZERO
    rest.sort(key=sort_key)
    if coeff != 1 or not rest:
        rest.insert(0, Num(coeff))
    if len(rest) == 1:
        return rest[0]
    return Mul(tuple(rest))


def _int_root(n: int, q: int):
    """Exact integer q-th root of n >= 0, or None."""
    if n < 0:
        return None
    r = round(n ** (1.0 / q)) if n < 2 ** 1000 else None
    if r is None:
        return None
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** q == n:
            return cand
    return None


def _pow_canon(base: Expr, exp: Expr) -> Expr:
    if isinstance(exp, Num):
        e = exp.value
        if e == 0:
            return ONE
        if e == 1:
            return base
        if isinstance(base, Num):
            b = base.value
            if e.denominator == 1:
                if b == 0 and e < 0:
                    return Pow(base, exp)
                return Num(b ** int(e))
            if b == 1:
                return ONE
            if b == -1:
                return _root(2 * e.denominator, e.numerator)
            if b > 0:
                q = e.denominator
                rn, rd = _int_root(b.numerator, q), _int_root(b.denominator, q)
                if rn is not None and rd is not None:
                    return Num(Fraction(rn, rd) ** e.numerator)
        if isinstance(base, RootOfUnity) and e.denominator == 1:
            return _root(base.n, base.k * int(e))
        if isinstance(base, Const) and base.name == "i" and e.denominator == 1:
            return _root(4, int(e))
        if isinstance(base, Pow) and isinstance(base.exp, Num) and e.denominator == 1:
            return _pow_canon(base.base, Num(base.exp.value * e))
    return Pow(base, exp)


def _gamma_fold(x: Fraction):
    """Gamma at a positive integer or half-integer, exactly."""
    if x.denominator == 1 and x > 0:
        return Num(Fraction(math.factorial(int(x) - 1)))
    if x.denominator == 2 and x > 0:
        n = int(x - Fraction(1, 2))
        c = Fraction(math.factorial(2 * n), 4 ** n * math.factorial(n))
        return _mul_canon([Num(c), _pow_canon(PI, Num(Fraction(1, 2)))])
    return None


def canonical(e: Expr) -> Expr:
    if isinstance(e, Num | Sym | Const | Zeta):
        return e
    if isinstance(e, RootOfUnity):
        return _root(e.n, e.k)
    if isinstance(e, Neg):
        return _mul_canon([Num(Fraction(-1)), canonical(e.arg)])
    if isinstance(e, Add):
        return _add_canon([canonical(t) for t in e.terms])
    if isinstance(e, Mul):
        return _mul_canon([canonical(f) for f in e.factors])
    if isinstance(e, Pow):
        b = canonical(e.base)
        x = canonical(e.exp)
        return _pow_canon(b, x)
    if isinstance(e, Fn):
        arg = canonical(e.arg)
        if e.name == "gamma" and isinstance(arg, Num):
            folded = _gamma_fold(arg.value)
            if folded is not None:
                return folded
        return Fn(e.name, arg)
    if isinstance(e, PolyLog):
        return PolyLog(e.order, canonical(e.arg))
    if isinstance(e, Hyp):
        s = e.series
        return Hyp(type(s)(s.upper, s.lower, canonical(s.z)))
    raise TypeError(f"unknown node {e!r}")


def structurally_equal(a: Expr, b: Expr) -> bool:
    return canonical(a) == canonical(b)


def rational_value(e: Expr):
    """The exact rational value of ``e`` if it folds to one, else None."""
    c = canonical(e)
    return c.value if isinstance(c, Num) else None


# ---------------------------------------------------------------- JSON codec

def to_json(e: Expr) -> dict:
    if isinstance(e, Num):
        v = e.value
        if v.denominator == 1:
            return {"kind": "int", "value": str(v.numerator)}
        return {"kind": "rational", "value": format_rational(v)}
    if isinstance(e, Sym):
        return {"kind": "symbol", "name": e.name}
    if isinstance(e, Const):
        return {"kind": e.name}
    if isinstance(e, Add):
        return {"kind": "add", "args": [to_json(t) for t in e.terms]}
    if isinstance(e, Mul):
        return {"kind": "mul", "args": [to_json(t) for t in e.factors]}
    if isinstance(e, Pow):
        return {"kind": "pow", "args": [to_json(e.base), to_json(e.exp)]}
    if isinstance(e, Neg):
        return {"kind": "neg", "args": [to_json(e.arg)]}
    if isinstance(e, Fn):
        return {"kind": e.name, "args": [to_json(e.arg)]}
    if isinstance(e, Zeta):
        return {"kind": "zeta", "s": e.s}
    if isinstance(e, PolyLog):
        return {"kind": "polylog", "order": e.order, "args": [to_json(e.arg)]}
    if isinstance(e, RootOfUnity):
        return {"kind": "root_of_unity", "n": e.n, "k": e.k}
    if isinstance(e, Hyp):
        return series_to_json(e.series, kind=True)
    raise TypeError(f"unknown node {e!r}")


def series_to_json(s, kind=False) -> dict:
    d = {
        "upper": [format_param(p) for p in s.upper],
        "lower": [format_param(p) for p in s.lower],
        "z": to_json(s.z),
    }
    if kind:
        d = {"kind": "hyp", **d}
    return d


def series_from_json(d: dict):
    from .params import parse_param
    from .series import HypSeries

    return HypSeries(ParamList(parse_param(p) for p in d["upper"]),
                     ParamList(parse_param(p) for p in d["lower"]),
                     from_json(d["z"]))


def from_json(d: dict) -> Expr:
    from .errors import ParseError

    try:
        kind = d["kind"]
        if kind == "int":
            v = Fraction(d["value"])
            if v.denominator != 1:
                raise ParseError(f"int literal {d['value']!r} is not an integer")
            return Num(v)
        if kind == "rational":
            return Num(Fraction(d["value"]))
        if kind == "symbol":
            return Sym(d["name"])
        if kind in CONSTANTS:
            return Const(kind)
        if kind == "add":
            return Add(tuple(from_json(a) for a in d["args"]))
        if kind == "mul":
            return Mul(tuple(from_json(a) for a in d["args"]))
        if kind == "pow":
            b, x = d["args"]
            return Pow(from_json(b), from_json(x))
        if kind == "neg":
            return Neg(from_json(d["args"][0]))
        if kind in UNARY_FUNCTIONS:
            return Fn(kind, from_json(d["args"][0]))
        if kind == "zeta":
            return Zeta(int(d["s"]))
        if kind == "polylog":
            return PolyLog(int(d["order"]), from_json(d["args"][0]))
        if kind == "root_of_unity":
            return RootOfUnity(int(d["n"]), int(d["k"]))
        if kind == "hyp":
            return Hyp(series_from_json(d))
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad expression node {d!r}: {exc}") from exc
    raise ParseError(f"unknown expression kind {kind!r}")


# ------------------------------------------------------------------- printer

_PREC_ADD, _PREC_MUL, _PREC_NEG, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5

_FN_TEXT = {"K": "K", "E": "E"}


def _num_text(v: Fraction):
    s = format_rational(v)
    if v < 0:
        return s, _PREC_NEG
    if v.denominator != 1:
        return s, _PREC_MUL
    return s, _PREC_ATOM


def _wrap_text(t, prec, need):
    return f"({t})" if prec < need else t


def _text(e: Expr):
    if isinstance(e, Num):
        return _num_text(e.value)
    if isinstance(e, Sym):
        return e.name, _PREC_ATOM
    if isinstance(e, Const):
        return {"i": "I", "pi": "pi", "catalan": "catalan"}[e.name], _PREC_ATOM
    if isinstance(e, Zeta):
        return f"zeta({e.s})", _PREC_ATOM
    if isinstance(e, RootOfUnity):
        return f"root({e.n}, {e.k})", _PREC_ATOM
    if isinstance(e, Fn):
        return f"{_FN_TEXT.get(e.name, e.name)}({_text(e.arg)[0]})", _PREC_ATOM
    if isinstance(e, PolyLog):
        return f"Li{e.order}({_text(e.arg)[0]})", _PREC_ATOM
    if isinstance(e, Hyp):
        return series_text(e.series), _PREC_ATOM
    if isinstance(e, Neg):
        t, p = _text(e.arg)
        return "-" + _wrap_text(t, p, _PREC_POW), _PREC_NEG
    if isinstance(e, Pow):
        bt, bp = _text(e.base)
        xt, xp = _text(e.exp)
        if isinstance(e.exp, Num) and e.exp.value == Fraction(1, 2):
            return f"sqrt({bt})", _PREC_ATOM
        return f"{_wrap_text(bt, bp, _PREC_ATOM)}^{_wrap_text(xt, xp, _PREC_ATOM)}", _PREC_POW
    if isinstance(e, Mul):
        num_parts, den_parts = [], []
        coeff = None
        for f in e.factors:
            if isinstance(f, Num) and coeff is None:
                coeff = f.value
                continue
            if isinstance(f, Pow) and isinstance(f.exp, Num) and f.exp.value < 0:
                inv = Pow(f.base, Num(-f.exp.value)) if f.exp.value != -1 else f.base
                den_parts.append(_wrap_text(*_text(inv), _PREC_POW))
            else:
                num_parts.append(_wrap_text(*_text(f), _PREC_POW))
        sign = ""
        if coeff is not None:
            if coeff < 0:
                sign = "-"
                coeff = -coeff
            if coeff.numerator != 1 or not num_parts:
                num_parts.insert(0, str(coeff.numerator))
            if coeff.denominator != 1:
                den_parts.insert(0, str(coeff.denominator))
        text = "*".join(num_parts)
        if den_parts:
            den = den_parts[0] if len(den_parts) == 1 else "(" + "*".join(den_parts) + ")"
            text = f"{text}/{den}"
        return sign + text, (_PREC_NEG if sign else _PREC_MUL)
    if isinstance(e, Add):
        out = ""
        for i, t in enumerate(e.terms):
            tt, tp = _text(t)
            if i and tt.startswith("-"):
                out += " - " + tt[1:]
            elif i:
                out += " + " + _wrap_text(tt, tp, _PREC_ADD + 1)
            else:
                out += tt
        return out, _PREC_ADD
    raise TypeError(f"unknown node {e!r}")


def to_text(e: Expr) -> str:
    return _text(e)[0]


def series_text(s) -> str:
    p, q = len(s.upper), len(s.lower)
    return f"{p}F{q}({s.upper.text()}; {s.lower.text()}; {to_text(s.z)})"


# re-exported for callers that only import expr
__all__ = [
    "Expr", "Num", "Sym", "Const", "Add", "Mul", "Pow", "Neg", "Fn", "Zeta", "PolyLog",
    "RootOfUnity", "Hyp", "I", "PI", "CATALAN", "ZERO", "ONE", "wrap", "num", "sqrt", "fn",
    "affine_expr", "canonical", "structurally_equal", "to_json", "from_json", "to_text",
    "series_text", "subs", "free_symbols", "hyp_nodes", "walk", "replace", "rational_value",
]
