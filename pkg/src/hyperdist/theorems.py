"""Closed-form summation theorems and a matcher for concrete series.

Templates live in ``data/templates.json`` (generated by
``scripts/build_templates.py``). Each one is a series whose parameters are
affine in a few symbols, a closed form in the same symbols, and side
conditions. Matching a concrete series against a template means choosing
a bijection between template and concrete parameters such that the affine
equations have a unique rational solution.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Mapping

from .errors import (
    DivergentSeries, DomainError, HyperdistError, PoleInRHS, SideConditionViolated,
)
from .expr import (
    Expr, Fn, Hyp, Num, Pow, Sym, canonical, children, free_symbols, from_json, replace,
    series_from_json, subs, to_text, walk,
)
from .identity import ConstraintPredicate, Identity, not_pole
from .params import Affine, format_rational
from .series import Convergence, HypSeries, convergence_class


class TheoremId(str, enum.Enum):
    GAUSS1 = "Gauss1"
    KUMMER_MINUS1 = "KummerMinus1"
    KUMMER_HALF = "KummerHalf"
    DIXON = "Dixon"
    WATSON = "Watson"
    WHIPPLE = "Whipple"
    CLAUSEN_SQUARE = "ClausenSquare"
    DOUGALL_L1 = "DougallL1"
    DOUGALL_L2 = "DougallL2"
    DOUGALL_L3 = "DougallL3"
    DOUGALL_L4 = "DougallL4"
    K1 = "K1"
    K2 = "K2"
    K3 = "K3"
    K4 = "K4"
    # the arcsin-squared Taylor series, needed to sum DIST right sides
    ARCSIN_SQUARE = "ArcSinSquare"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Template:
    theorem: TheoremId
    variant: str
    symbols: tuple
    series: HypSeries
    rhs: Expr
    side_conditions: tuple
    source: str = ""

    @property
    def label(self) -> str:
        return f"{self.theorem}{self.variant}" if self.variant else str(self.theorem)

    @property
    def argument_symbol(self):
        z = self.series.z
        return z.name if isinstance(z, Sym) else None

    def all_conditions(self) -> tuple:
        extra = tuple(not_pole(b) for b in self.series.lower if isinstance(b, Affine))
        return self.side_conditions + extra


@dataclass(frozen=True)
class MatchResult:
    theorem: TheoremId
    binding: dict
    closed_form: Expr
    side_conditions: tuple = ()
    variant: str = ""
    identity: Identity | None = field(default=None, compare=False, repr=False)

    def binding_text(self) -> dict:
        return {k: (format_rational(v) if isinstance(v, Fraction) else to_text(v))
                for k, v in sorted(self.binding.items())}


@lru_cache(maxsize=None)
def templates() -> tuple:
    data = json.loads(resources.files("hyperdist").joinpath("data/templates.json").read_text())
    out = []
    for d in data["templates"]:
        out.append(Template(
            TheoremId(d["id"]), d.get("variant", ""), tuple(d["symbols"]),
            series_from_json(d["series"]), from_json(d["rhs"]),
            tuple(ConstraintPredicate.from_json(c) for c in d.get("side_conditions", ())),
            d.get("source", "")))
    return tuple(out)


def templates_for(t) -> list:
    t = TheoremId(t)
    return [tp for tp in templates() if tp.theorem == t]


def _template(t, variant=None) -> Template:
    options = templates_for(t)
    if variant is None:
        return options[0]
    for tp in options:
        if tp.variant == variant:
            return tp
    raise KeyError(f"{t} has no variant {variant!r}")


# ------------------------------------------------------------------ apply

def _numerator_poles(e: Expr, inverted=False) -> list:
    """Gamma arguments at nonpositive integers that are not in a denominator."""
    out = []
    if isinstance(e, Pow) and isinstance(e.exp, Num) and e.exp.value < 0:
        return _numerator_poles(e.base, not inverted)
    if isinstance(e, Fn) and e.name == "gamma" and not inverted:
        a = canonical(e.arg)
        if isinstance(a, Num) and a.value.denominator == 1 and a.value <= 0:
            out.append(a.value)
    if isinstance(e, Fn) and e.name == "sin" and inverted:
        # csc(pi x) with x an integer
        a = canonical(e.arg)
        if a == canonical(Num(Fraction(0))):
            out.append(Fraction(0))
    if isinstance(e, Hyp):
        return out
    for c in children(e):
        out.extend(_numerator_poles(c, inverted))
    return out


def _prepare_binding(tp: Template, binding: Mapping) -> dict:
    out = {}
    zsym = tp.argument_symbol
    for k, v in binding.items():
        if k == zsym:
            out[k] = canonical(v) if isinstance(v, Expr) else canonical(Num(Fraction(v)))
        elif isinstance(v, (int, Fraction, str)):
            out[k] = Fraction(v)
        else:
            raise SideConditionViolated(f"{tp.label}: symbol {k} needs a rational value")
    missing = set(tp.symbols) - set(out)
    if missing:
        raise SideConditionViolated(f"{tp.label}: no value for {sorted(missing)}")
    return out


def apply_theorem(t, binding: Mapping, variant: str | None = None) -> Identity:
    """Instantiate a theorem template as a concrete identity."""
    tp = _template(t, variant)
    b = _prepare_binding(tp, binding)
    rat = {k: v for k, v in b.items() if isinstance(v, Fraction)}
    bad = [c for c in tp.all_conditions() if not c.holds(rat)]
    if bad:
        raise SideConditionViolated(f"{tp.label}: " + "; ".join(str(c) for c in bad))
    series = tp.series.subs(b)
    try:
        cls = convergence_class(series)
    except DomainError as exc:
        raise SideConditionViolated(f"{tp.label}: {exc}") from exc
    if cls == Convergence.DIVERGENT:
        raise SideConditionViolated(f"{tp.label}: {series} diverges")
    rhs = subs(tp.rhs, b)
    poles = _numerator_poles(rhs)
    zsym = tp.argument_symbol
    if zsym and b[zsym] == canonical(Num(Fraction(0))):
        poles.append(Fraction(0))
    if poles:
        raise PoleInRHS(f"{tp.label}: closed form has a pole at {[str(p) for p in poles]}")
    rhs = canonical(rhs)
    shown = {k: (format_rational(v) if isinstance(v, Fraction) else to_text(v)) for k, v in b.items()}
    return Identity(tp.label, Hyp(series), rhs, (), (), tp.source,
                    {"theorem": str(tp.theorem), "variant": tp.variant, "binding": shown})


# ------------------------------------------------------------------ match

class _System:
    """Incrementally reduced linear system: pivot symbol -> (coeffs, const)."""

    __slots__ = ("rows",)

    def __init__(self, rows=None):
        self.rows = rows or {}

    def reduce(self, form) -> tuple:
        if isinstance(form, Affine):
            coeffs, const = {}, form.const
            for s, c in form.coeffs:
                if s in self.rows:
                    rc, k = self.rows[s]
                    const += c * k
                    for s2, c2 in rc.items():
                        coeffs[s2] = coeffs.get(s2, 0) + c * c2
                else:
                    coeffs[s] = coeffs.get(s, 0) + c
            return {s: c for s, c in coeffs.items() if c}, const
        return {}, Fraction(form)

    def add(self, form, value: Fraction):
        """New system with ``form = value`` added, or None if inconsistent."""
        coeffs, const = self.reduce(form)
        rhs = value - const
        if not coeffs:
            return self if rhs == 0 else None
        pivot = min(coeffs)
        alpha = coeffs.pop(pivot)
        prow = ({s: -c / alpha for s, c in coeffs.items()}, rhs / alpha)
        rows = {}
        for s, (rc, k) in self.rows.items():
            if pivot in rc:
                c = rc[pivot]
                nc = {x: y for x, y in rc.items() if x != pivot}
                for s2, c2 in prow[0].items():
                    nc[s2] = nc.get(s2, 0) + c * c2
                rows[s] = ({x: y for x, y in nc.items() if y}, k + c * prow[1])
            else:
                rows[s] = (rc, k)
        rows[pivot] = prow
        return _System(rows)

    def solution(self, symbols):
        out = {}
        for s in symbols:
            row = self.rows.get(s)
            if row is None or row[0]:
                return None
            out[s] = row[1]
        return out


def _assignments(template_params, values: Counter, system: _System):
    if not template_params:
        yield system
        return
    head, rest = template_params[0], template_params[1:]
    for v in sorted(values):
        if values[v] == 0:
            continue
        nxt = system.add(head, v)
        if nxt is None:
            continue
        values[v] -= 1
        yield from _assignments(rest, values, nxt)
        values[v] += 1


def _solutions(tp: Template, s: HypSeries):
    # most constrained entries first keeps the search narrow
    def order(ps):
        return sorted(ps, key=lambda p: -len(p.symbols) if isinstance(p, Affine) else -99)

    seen = set()
    for sys_u in _assignments(order(list(tp.series.upper)), Counter(s.upper), _System()):
        for sys_l in _assignments(order(list(tp.series.lower)), Counter(s.lower), sys_u):
            params = [x for x in tp.symbols if x != tp.argument_symbol]
            sol = sys_l.solution(params)
            if sol is None:
                continue
            key = tuple(sorted(sol.items()))
            if key not in seen:
                seen.add(key)
                yield sol


@lru_cache(maxsize=256)
def _numeric(e: Expr):
    from .numerics import Precision, eval_expression

    return eval_expression(e, {}, Precision(30, 10)).ball


def _same_argument(template_z: Expr, z: Expr) -> bool:
    a, b = canonical(template_z), canonical(z)
    if a == b:
        return True
    if isinstance(a, Num) and isinstance(b, Num):
        return False
    try:
        diff = abs(_numeric(a) - _numeric(b))
    except HyperdistError:
        return False
    return float(diff.mid()) < 1e-25


def match_closed_form(s: HypSeries) -> list:
    """Every template instance equal to ``s`` up to parameter order."""
    if not s.is_concrete:
        return []
    out = []
    seen = set()
    for tp in templates():
        if tp.series.p != s.p or tp.series.q != s.q:
            continue
        zsym = tp.argument_symbol
        if zsym is None and not _same_argument(tp.series.z, s.z):
            continue
        for sol in _solutions(tp, s):
            binding = dict(sol)
            if zsym:
                binding[zsym] = canonical(s.z)
            try:
                idn = apply_theorem(tp.theorem, binding, tp.variant)
            except (SideConditionViolated, PoleInRHS, DivergentSeries, DomainError):
                continue
            key = (tp.label, idn.rhs)
            if key in seen:
                continue
            seen.add(key)
            out.append(MatchResult(tp.theorem, binding, idn.rhs, tp.all_conditions(), tp.variant, idn))
    return out


def _prefer(matches: list) -> MatchResult:
    # closed forms free of hypergeometric nodes first, then template order
    return min(matches, key=lambda m: any(isinstance(n, Hyp) for n in walk(m.closed_form)))


def sum_dist_rhs(identity: Identity, passes: int = 3) -> Identity:
    """Replace each recognisable Hyp node on the right by its closed form."""
    fired = []

    def rewrite(node):
        if not isinstance(node, Hyp):
            return None
        matches = match_closed_form(node.series)
        if not matches:
            return None
        m = _prefer(matches)
        fired.append({"series": str(node.series), "theorem": m.theorem.value + m.variant,
                      "binding": m.binding_text()})
        return m.closed_form

    rhs = identity.rhs
    for _ in range(passes):
        before = len(fired)
        rhs = replace(rhs, rewrite)
        if len(fired) == before:
            break
    if not fired:
        return identity
    rhs = canonical(rhs)
    notes = dict(identity.notes, theorems=fired)
    syms = tuple(sorted(set(identity.free_symbols) | free_symbols(rhs)))
    return Identity(identity.name, identity.lhs, rhs, syms, identity.constraints,
                    identity.provenance, notes)


def clausen_product_identity(a, b, z) -> Identity:
    """The 3F2 product formula behind K3 and K4, at concrete ``a``, ``b``, ``z``."""
    from .expr import Mul
    from .parse import parse_expr

    a, b = Fraction(a), Fraction(b)
    zz = canonical(z) if isinstance(z, Expr) else canonical(Num(Fraction(z)))
    lhs = Hyp(HypSeries([Fraction(1, 2), Fraction(1, 2) - a, a + Fraction(1, 2)], [1 - b, b + 1], zz))
    w = canonical(subs(parse_expr("(1-sqrt(1-z))/2"), {"z": zz}))
    up = [Fraction(1, 2) - a, a + Fraction(1, 2)]
    rhs = Mul((Hyp(HypSeries(up, [1 - b], w)), Hyp(HypSeries(up, [b + 1], w))))
    return Identity("ClausenProduct", lhs, rhs, (), (), "product formula")


__all__ = [
    "MatchResult", "Template", "TheoremId", "apply_theorem", "clausen_product_identity",
    "match_closed_form", "sum_dist_rhs", "templates", "templates_for",
]
