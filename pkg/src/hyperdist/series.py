"""Generalized hypergeometric series ``pFq(A; B; z)`` with exact parameters."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvalidSeries
from .expr import Expr, Num, Pow, canonical, num, series_text, wrap
from .params import Affine, ParamList, is_nonpositive_integer


class Convergence(str, enum.Enum):
    INSIDE_DISK = "inside_disk"
    BOUNDARY_ABS = "boundary_abs"
    BOUNDARY_COND = "boundary_cond"
    DIVERGENT = "divergent"
    TERMINATING = "terminating"


@dataclass(frozen=True, eq=True)
class HypSeries:
    upper: ParamList
    lower: ParamList
    z: Expr

    def __post_init__(self):
        if not isinstance(self.upper, ParamList):
            object.__setattr__(self, "upper", ParamList(self.upper))
        if not isinstance(self.lower, ParamList):
            object.__setattr__(self, "lower", ParamList(self.lower))
        if not isinstance(self.z, Expr):
            object.__setattr__(self, "z", wrap(self.z))
        for b in self.lower:
            if isinstance(b, Fraction) and is_nonpositive_integer(b):
                raise InvalidSeries(f"lower parameter {b} is a nonpositive integer")

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    @property
    def is_concrete(self) -> bool:
        return self.upper.is_concrete() and self.lower.is_concrete()

    @property
    def terminating(self) -> bool:
        return any(isinstance(a, Fraction) and is_nonpositive_integer(a) for a in self.upper)

    @property
    def degree(self):
        """Polynomial degree of a terminating series, else None."""
        ks = [-a for a in self.upper if isinstance(a, Fraction) and is_nonpositive_integer(a)]
        return int(min(ks)) if ks else None

    def excess(self):
        """``sum(lower) - sum(upper)``; an Affine for templates."""
        total = Fraction(0)
        for b in self.lower:
            total = total + b
        for a in self.upper:
            total = total - a
        return total

    def subs(self, binding) -> "HypSeries":
        from .expr import subs

        return HypSeries(self.upper.subs(binding), self.lower.subs(binding), subs(self.z, binding))

    def __str__(self):
        return series_text(self)


def hyp(upper, lower, z) -> HypSeries:
    return HypSeries(ParamList(upper), ParamList(lower), wrap(z))


def pochhammer(a, k: int):
    """Rising factorial ``a (a+1) ... (a+k-1)``; exact for rationals and affine forms.

    Affine ``a`` gives an Expression product.
    """
    if k < 0:
        raise ValueError("k must be a natural number")
    if isinstance(a, Affine):
        from .expr import Mul, affine_expr

        if k == 0:
            return num(1)
        return Mul(tuple(affine_expr(a + j) for j in range(k)))
    a = Fraction(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
        if out == 0:
            return out
    return out


def cancel_parameters(s: HypSeries) -> HypSeries:
    """Strike the largest common multiset out of the upper and lower lists."""
    common = Counter(s.upper) & Counter(s.lower)
    if not common:
        return s
    drop_u, drop_l = Counter(common), Counter(common)
    upper, lower = [], []
    for a in s.upper:
        if drop_u[a]:
            drop_u[a] -= 1
        else:
            upper.append(a)
    for b in s.lower:
        if drop_l[b]:
            drop_l[b] -= 1
        else:
            lower.append(b)
    return HypSeries(ParamList(upper), ParamList(lower), s.z)


def _argument_value(s: HypSeries, bits=256):
    from .numerics import Precision, eval_expression

    try:
        v = eval_expression(s.z, {}, Precision(digits=max(30, bits // 3), guard=10))
    except Exception as exc:  # any failure to evaluate the argument
        raise DomainError(f"argument {s.z} is not numerically evaluable: {exc}") from exc
    return v


def unit_root_order(z_value):
    """If the ball ``z_value`` is (numerically) a root of unity, return (r, k)
    with z = exp(2 pi i k / r); else None. Only orders up to 720 are tried."""
    from flint import acb, arb

    az = abs(z_value)
    if not (az - 1).contains(0) and abs(float((az - 1).mid())) > 1e-25:
        return None
    theta = z_value.arg() / (2 * arb.pi())
    t = float(theta.mid())
    frac = Fraction(t).limit_denominator(720)
    check = acb.exp_pi_i(2 * acb(frac.numerator) / frac.denominator)
    if abs(float(abs(check - z_value).mid())) > 1e-25:
        return None
    return frac.denominator, frac.numerator % frac.denominator


def convergence_class(s: HypSeries) -> Convergence:
    if not s.is_concrete:
        raise InvalidSeries("convergence_class needs concrete parameters")
    if s.terminating:
        return Convergence.TERMINATING
    if s.p <= s.q:
        return Convergence.INSIDE_DISK
    if s.p > s.q + 1:
        return Convergence.DIVERGENT
    z = _argument_value(s).ball
    az = abs(z)
    one_minus = 1 - az
    if one_minus > 0 and float(one_minus.mid()) > 1e-25:
        return Convergence.INSIDE_DISK
    if one_minus < 0 and float(one_minus.mid()) < -1e-25:
        return Convergence.DIVERGENT
    excess = s.excess()
    if excess > 0:
        return Convergence.BOUNDARY_ABS
    is_one = abs(float(abs(z - 1).mid())) < 1e-25
    if -1 < excess <= 0 and not is_one:
        return Convergence.BOUNDARY_COND
    return Convergence.DIVERGENT


def series_term(s: HypSeries, k: int) -> Expr:
    """Exact ``k``-th Maclaurin term ``prod (a)_k / (prod (b)_k k!) * z^k``."""
    if k == 0:
        return num(1)
    if not s.is_concrete:
        raise InvalidSeries("series_term needs concrete parameters")
    c = Fraction(1)
    for a in s.upper:
        c *= pochhammer(a, k)
    for b in s.lower:
        c /= pochhammer(b, k)
    c /= pochhammer(1, k)
    return canonical(Num(c) * Pow(s.z, num(k)))


def validate_lower(params) -> None:
    for b in params:
        if isinstance(b, Fraction) and is_nonpositive_integer(b):
            raise InvalidSeries(f"lower parameter {b} is a nonpositive integer")
