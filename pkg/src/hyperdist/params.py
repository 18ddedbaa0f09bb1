"""Exact parameters: rationals and affine forms over named symbols.

Concrete series use ``fractions.Fraction`` for every parameter. Templates
(theorem statements, parametric corpus entries) use :class:`Affine`, a
rational constant plus rational multiples of free symbols such as
``a/2 + 1``. Arithmetic between the two always collapses back to a plain
``Fraction`` once no symbol is left.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


def is_nonpositive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Affine:
    """``const + sum(coeff * symbol)`` with at least one nonzero coefficient."""

    const: Fraction
    coeffs: tuple  # ((name, Fraction), ...) sorted by name

    @staticmethod
    def make(const, coeffs: Mapping[str, Fraction]) -> "Param":
        items = tuple(sorted((k, Fraction(v)) for k, v in coeffs.items() if v != 0))
        if not items:
            return Fraction(const)
        return Affine(Fraction(const), items)

    @staticmethod
    def symbol(name: str) -> "Affine":
        return Affine(Fraction(0), ((name, Fraction(1)),))

    @property
    def symbols(self) -> frozenset:
        return frozenset(k for k, _ in self.coeffs)

    def coeff_map(self) -> dict:
        return dict(self.coeffs)

    def subs(self, binding: Mapping[str, Fraction]) -> "Param":
        const = self.const
        rest = {}
        for name, c in self.coeffs:
            if name in binding:
                const += c * as_rational(binding[name])
            else:
                rest[name] = c
        return Affine.make(const, rest)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return Affine(self.const + other, self.coeffs)
        if isinstance(other, Affine):
            m = self.coeff_map()
            for k, v in other.coeffs:
                m[k] = m.get(k, 0) + v
            return Affine.make(self.const + other.const, m)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Affine(-self.const, tuple((k, -v) for k, v in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Affine)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Affine.make(self.const * other, {k: v * other for k, v in self.coeffs})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __str__(self):
        return format_param(self)


Param = Union[Fraction, Affine]


def param_symbols(p: Param) -> frozenset:
    return p.symbols if isinstance(p, Affine) else frozenset()


def subs_param(p: Param, binding: Mapping[str, Fraction]) -> Param:
    return p.subs(binding) if isinstance(p, Affine) else p


def _format_term(name: str, c: Fraction) -> str:
    sign = "-" if c < 0 else "+"
    c = abs(c)
    if c.numerator == 1:
        body = name
    else:
        body = f"{c.numerator}*{name}"
    if c.denominator != 1:
        body = f"{body}/{c.denominator}"
    return sign + body


def format_param(p: Param) -> str:
    if isinstance(p, Fraction):
        return format_rational(p)
    if isinstance(p, int):
        return str(p)
    parts = [_format_term(k, v) for k, v in p.coeffs]
    if p.const != 0:
        parts.append(("-" if p.const < 0 else "+") + format_rational(abs(p.const)))
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def parse_param(text: str) -> Param:
    """Parse ``"5/4"``, ``"-1/24"`` or an affine form like ``"3*a/4 - b + 1/4"``."""
    from .parse import parse_affine

    return parse_affine(text)


def _param_key(p: Param):
    if isinstance(p, Fraction):
        return (0, p, ())
    return (1, p.const, p.coeffs)


class ParamList(tuple):
    """Ordered multiset of parameters.

    Iteration and display keep insertion order; ``==`` and ``hash`` use
    multiset semantics.
    """

    def __new__(cls, entries: Iterable = ()):
        items = []
        for e in entries:
            if isinstance(e, (int, str)):
                e = parse_param(e) if isinstance(e, str) else Fraction(e)
            items.append(e)
        return super().__new__(cls, items)

    def counter(self) -> Counter:
        return Counter(self)

    def __eq__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        return Counter(self) == Counter(other)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(tuple(sorted((_param_key(p) for p in self), key=repr)))

    def __add__(self, other):
        return ParamList(tuple(self) + tuple(other))

    def __repr__(self):
        return "ParamList([" + ", ".join(format_param(p) for p in self) + "])"

    @property
    def symbols(self) -> frozenset:
        out = frozenset()
        for p in self:
            out |= param_symbols(p)
        return out

    def is_concrete(self) -> bool:
        return all(isinstance(p, Fraction) for p in self)

    def subs(self, binding) -> "ParamList":
        return ParamList(subs_param(p, binding) for p in self)

    def text(self) -> str:
        return ", ".join(format_param(p) for p in self)
