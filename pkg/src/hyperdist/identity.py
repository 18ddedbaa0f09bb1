"""Identities between closed-form expressions, with affine side conditions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import ConstraintViolated, ValidationError
from .expr import Expr, free_symbols, from_json, subs, to_json, to_text
from .params import Affine, as_rational, format_param, format_rational

RELATIONS = (">", ">=", "!=", "in_Z", "not_nonpos_int")


@dataclass(frozen=True)
class ConstraintPredicate:
    """``form <relation> bound`` for an affine ``form`` over the free symbols.

    ``in_Z`` asks that ``form - bound`` be an integer; ``not_nonpos_int``
    asks that ``form - bound`` not be 0, -1, -2, ...
    """

    form: object  # Affine or Fraction
    relation: str
    bound: Fraction = Fraction(0)

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "bound", as_rational(self.bound))

    @property
    def symbols(self) -> frozenset:
        return self.form.symbols if isinstance(self.form, Affine) else frozenset()

    def value(self, binding: Mapping) -> Fraction:
        v = self.form.subs(binding) if isinstance(self.form, Affine) else Fraction(self.form)
        if isinstance(v, Affine):
            missing = sorted(v.symbols)
            raise ConstraintViolated(f"constraint {self} has unbound symbols {missing}")
        return v - self.bound

    def holds(self, binding: Mapping) -> bool:
        x = self.value(binding)
        if self.relation == ">":
            return x > 0
        if self.relation == ">=":
            return x >= 0
        if self.relation == "!=":
            return x != 0
        if self.relation == "in_Z":
            return x.denominator == 1
        return not (x.denominator == 1 and x <= 0)

    def __str__(self):
        form, bound = format_param(self.form), format_rational(self.bound)
        if self.relation in ("in_Z", "not_nonpos_int"):
            if self.bound:
                form = f"{form} - ({bound})"
            return f"{form} {'in Z' if self.relation == 'in_Z' else 'not in {0, -1, -2, ...}'}"
        return f"{form} {self.relation} {bound}"

    def to_json(self) -> dict:
        return {"form": format_param(self.form), "relation": self.relation,
                "bound": format_rational(self.bound)}

    @staticmethod
    def from_json(d: dict) -> "ConstraintPredicate":
        from .parse import parse_affine

        return ConstraintPredicate(parse_affine(d["form"]), d["relation"], Fraction(d.get("bound", "0")))


def gt(form, bound=0):
    return ConstraintPredicate(form, ">", Fraction(bound))


def ge(form, bound=0):
    return ConstraintPredicate(form, ">=", Fraction(bound))


def ne(form, bound=0):
    return ConstraintPredicate(form, "!=", Fraction(bound))


def not_pole(form, bound=0):
    return ConstraintPredicate(form, "not_nonpos_int", Fraction(bound))


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: Expr
    rhs: Expr
    free_symbols: tuple = ()
    constraints: tuple = ()
    provenance: str = ""
    notes: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "free_symbols", tuple(self.free_symbols))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        used = free_symbols(self.lhs) | free_symbols(self.rhs)
        extra = used - set(self.free_symbols)
        if extra:
            raise ValidationError(f"identity {self.name}: symbols {sorted(extra)} not declared free")

    @property
    def is_concrete(self) -> bool:
        return not self.free_symbols

    def check(self, binding: Mapping) -> list:
        """Constraints violated by ``binding`` (empty when all hold)."""
        return [c for c in self.constraints if not c.holds(binding)]

    def instantiate(self, binding: Mapping) -> "Identity":
        binding = {k: as_rational(v) for k, v in binding.items()}
        missing = set(self.free_symbols) - set(binding)
        if missing:
            raise ConstraintViolated(f"{self.name}: no value for {sorted(missing)}")
        bad = self.check(binding)
        if bad:
            raise ConstraintViolated(f"{self.name}: binding {_fmt_binding(binding)} violates "
                                     + "; ".join(str(c) for c in bad))
        return Identity(self.name, subs(self.lhs, binding), subs(self.rhs, binding), (), (),
                        self.provenance, dict(self.notes, binding=_fmt_binding(binding)))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "lhs": to_json(self.lhs),
            "rhs": to_json(self.rhs),
            "free_symbols": list(self.free_symbols),
            "constraints": [c.to_json() for c in self.constraints],
            "provenance": self.provenance,
        }

    @staticmethod
    def from_json(d: dict) -> "Identity":
        return Identity(
            d["name"], from_json(d["lhs"]), from_json(d["rhs"]), tuple(d.get("free_symbols", ())),
            tuple(ConstraintPredicate.from_json(c) for c in d.get("constraints", ())),
            d.get("provenance", ""))

    def __str__(self):
        return f"{to_text(self.lhs)} = {to_text(self.rhs)}"


def _fmt_binding(binding: Mapping) -> dict:
    return {k: format_rational(as_rational(v)) for k, v in sorted(binding.items())}
