"""Text syntax for expressions, parameters and series.

Grammar (whitespace insignificant)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := ("-" | "+") unary | power
    power   := atom ("^" unary)?
    atom    := INT | NAME | NAME "(" args ")" | "(" expr ")" | series
    series  := (INT "F" INT | "F" | "pFq") "(" params ";" params ";" expr ")"
    params  := "" | "/" | expr ("," expr)*

Constants are ``I``, ``pi`` and ``catalan``; other bare names are symbols.
Functions: sqrt, log, exp, sin, cos, tan, sinh, cosh, asin, acos, atan, acot,
asinh, atanh, gamma, beta, zeta, Li2, Li3, Li4, polylog(s, x), K, E, re,
im, csc, sec, cot, root(n, k) (= exp(2 pi i k / n)).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .expr import (
    CATALAN, I, PI, Add, Expr, Fn, Hyp, Mul, Neg, Num, PolyLog, Pow, RootOfUnity, Sym,
    Zeta, canonical, num,
)
from .params import Affine, ParamList

_TOKEN = re.compile(r"\s*(?:(\d+F\d+)(?=\s*\()|(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")

_UNARY = {
    "log": "log", "exp": "exp", "sin": "sin", "cos": "cos", "sinh": "sinh", "cosh": "cosh",
    "asin": "asin", "arcsin": "asin", "acos": "acos", "arccos": "acos",
    "atan": "atan", "arctan": "atan", "asinh": "asinh",
    "arcsinh": "asinh", "atanh": "atanh", "arctanh": "atanh", "gamma": "gamma", "K": "K",
    "E": "E", "re": "re", "im": "im",
}


def _tokens(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected input", pos)
        series, integer, name, sym = m.groups()
        start = m.start(m.lastindex)
        if series:
            out.append(("series", series, start))
        elif integer:
            out.append(("int", int(integer), start))
        elif name:
            out.append(("name", name, start))
        else:
            out.append(("op", sym, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, op):
        t = self.peek()
        if t[0] == "op" and t[1] == op:
            self.i += 1
            return True
        return False

    def expect(self, op):
        if not self.accept(op):
            t = self.peek()
            raise ParseError(f"expected {op!r}, found {t[1]!r}", t[2])

    def parse(self) -> Expr:
        e = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"trailing input {t[1]!r}", t[2])
        return e

    def expr(self):
        terms = [self.term()]
        while True:
            if self.accept("+"):
                terms.append(self.term())
            elif self.accept("-"):
                terms.append(Neg(self.term()))
            else:
                break
        return terms[0] if len(terms) == 1 else Add(tuple(terms))

    def term(self):
        factors = [self.unary()]
        while True:
            if self.accept("*"):
                factors.append(self.unary())
            elif self.accept("/"):
                factors.append(Pow(self.unary(), num(-1)))
            else:
                break
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept("^"):
            return Pow(base, self.unary())
        return base

    def args(self):
        self.expect("(")
        out = []
        if not self.accept(")"):
            out.append(self.expr())
            while self.accept(","):
                out.append(self.expr())
            self.expect(")")
        return out

    def _int_arg(self, e, what):
        c = canonical(e)
        if not isinstance(c, Num) or c.value.denominator != 1:
            raise ParseError(f"{what} must be an integer literal")
        return int(c.value)

    def atom(self):
        kind, val, pos = self.next()
        if kind == "int":
            return Num(Fraction(val))
        if kind == "series":
            return self.series_body()
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect(")")
            return e
        if kind == "name":
            if val in ("F", "pFq") and self.peek()[1] == "(":
                return self.series_body()
            if self.peek()[0] == "op" and self.peek()[1] == "(":
                return self.call(val, pos)
            if val == "I":
                return I
            if val == "pi":
                return PI
            if val == "catalan":
                return CATALAN
            return Sym(val)
        raise ParseError(f"unexpected token {val!r}", pos)

    def call(self, name, pos):
        a = self.args()

        def one():
            if len(a) != 1:
                raise ParseError(f"{name} takes one argument", pos)
            return a[0]

        if name in _UNARY:
            return Fn(_UNARY[name], one())
        if name == "sqrt":
            return Pow(one(), num(Fraction(1, 2)))
        if name == "tan":
            x = one()
            return Mul((Fn("sin", x), Pow(Fn("cos", x), num(-1))))
        if name == "csc":
            return Pow(Fn("sin", one()), num(-1))
        if name == "sec":
            return Pow(Fn("cos", one()), num(-1))
        if name == "cot":
            x = one()
            return Mul((Fn("cos", x), Pow(Fn("sin", x), num(-1))))
        if name in ("acot", "arccot"):
            return Fn("atan", Pow(one(), num(-1)))
        if name == "beta":
            if len(a) != 2:
                raise ParseError("beta takes two arguments", pos)
            x, y = a
            return Mul((Fn("gamma", x), Fn("gamma", y), Pow(Fn("gamma", Add((x, y))), num(-1))))
        if name == "zeta":
            return Zeta(self._int_arg(one(), "zeta argument"))
        if name in ("Li2", "Li3", "Li4"):
            return PolyLog(int(name[2]), one())
        if name == "polylog":
            if len(a) != 2:
                raise ParseError("polylog takes (order, x)", pos)
            return PolyLog(self._int_arg(a[0], "polylog order"), a[1])
        if name == "root":
            if len(a) != 2:
                raise ParseError("root takes (n, k)", pos)
            return RootOfUnity(self._int_arg(a[0], "root order"), self._int_arg(a[1], "root index"))
        raise ParseError(f"unknown function {name!r}", pos)

    def params(self):
        out = []
        t = self.peek()
        if t[0] == "op" and t[1] in (";", ")"):
            return out
        if t[0] == "op" and t[1] == "/" and self.toks[self.i + 1][1] in (";", ")"):
            self.i += 1
            return out
        out.append(to_affine(self.expr()))
        while self.accept(","):
            out.append(to_affine(self.expr()))
        return out

    def series_body(self):
        from .series import HypSeries

        start = self.toks[self.i - 1]
        self.expect("(")
        upper = self.params()
        self.expect(";")
        lower = self.params()
        self.expect(";")
        z = self.expr()
        self.expect(")")
        if start[0] == "series":
            p, q = (int(x) for x in start[1].split("F"))
            if (p, q) != (len(upper), len(lower)):
                raise ParseError(
                    f"{start[1]} declared but got {len(upper)} upper / {len(lower)} lower parameters",
                    start[2])
        return Hyp(HypSeries(ParamList(upper), ParamList(lower), z))


def to_affine(e: Expr):
    """Convert an expression that is affine in its symbols to a parameter."""
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Sym):
        return Affine.symbol(e.name)
    if isinstance(e, Neg):
        return -to_affine(e.arg)
    if isinstance(e, Add):
        out = Fraction(0)
        for t in e.terms:
            out = out + to_affine(t)
        return out
    if isinstance(e, Mul):
        out = Fraction(1)
        for f in e.factors:
            v = to_affine(f)
            if isinstance(out, Affine) and isinstance(v, Affine):
                raise ParseError("parameter is not affine in its symbols")
            out = v * out if isinstance(v, Affine) else out * v
        return out
    if isinstance(e, Pow):
        c = canonical(e)
        if isinstance(c, Num):
            return c.value
        if isinstance(e.exp, Num) and e.exp.value == 1:
            return to_affine(e.base)
    raise ParseError(f"parameter must be an affine rational form, got {type(e).__name__}")


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


def parse_affine(text: str):
    return to_affine(parse_expr(text))


def parse_series(text: str):
    e = parse_expr(text)
    if not isinstance(e, Hyp):
        raise ParseError("expected a series like 2F1(1/2, 1/2; 2; 1)")
    return e.series


def parse_param_list(text: str) -> ParamList:
    text = text.strip()
    if text in ("", "/", "{}"):
        return ParamList(())
    text = text.strip("{}[]")
    return ParamList(parse_affine(t) for t in _split_top(text))


def _split_top(text: str):
    depth, cur, out = 0, "", []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur)
    return out

