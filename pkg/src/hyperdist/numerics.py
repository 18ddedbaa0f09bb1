"""Ball-arithmetic evaluation of closed forms.

Complex balls come from python-flint's ``acb`` type. Special functions other
than the complete elliptic integrals are delegated to it; K and E are
computed here with the arithmetic-geometric mean so the elliptic layer does
not depend on the backend's own elliptic code.

All branches are principal. ``K(m)`` and ``E(m)`` take the parameter
``m = k**2``; use :func:`modulus_to_parameter` when starting from a modulus.
"""

from __future__ import annotations

import contextlib
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from flint import acb, arb, ctx, fmpq

from .errors import DomainError, EvaluationError, PoleError, UnboundSymbol
from .expr import Add, Const, Expr, Fn, Hyp, Mul, Neg, Num, PolyLog, Pow, RootOfUnity, Sym, Zeta

RIGOROUS = "rigorous"
HEURISTIC = "heuristic"


@dataclass(frozen=True)
class Precision:
    digits: int = 40
    guard: int = 20

    def __post_init__(self):
        if self.digits < 10 or self.guard < 10:
            raise ValueError("digits and guard must both be at least 10")

    @property
    def bits(self) -> int:
        return int((self.digits + self.guard) * 3.3219280948873626) + 10

    @property
    def target(self) -> float:
        return 10.0 ** (-self.digits)

    def with_digits(self, digits: int) -> "Precision":
        return Precision(digits, self.guard)


@contextlib.contextmanager
def working_bits(bits: int):
    """Temporarily set the flint working precision (process global)."""
    old = ctx.prec
    ctx.prec = bits
    try:
        yield
    finally:
        ctx.prec = old


def _radius(z: acb) -> float:
    r = float(z.real.rad()) + float(z.imag.rad())
    return math.nextafter(r, math.inf) if r else 0.0


class ComplexApprox:
    """A complex ball plus a rigor tag.

    ``err`` is an absolute radius. For rigorous values it encloses every
    rounding and truncation error; for heuristic values it is an empirical
    estimate (see :mod:`hyperdist.serieseval`).
    """

    __slots__ = ("ball", "rigor")

    def __init__(self, ball, rigor=RIGOROUS):
        self.ball = acb(ball)
        self.rigor = rigor

    @property
    def re(self) -> arb:
        return self.ball.real

    @property
    def im(self) -> arb:
        return self.ball.imag

    @property
    def err(self) -> float:
        return _radius(self.ball)

    @property
    def mid(self) -> complex:
        m = self.ball.mid()
        return complex(float(m.real), float(m.imag))

    @property
    def is_rigorous(self) -> bool:
        return self.rigor == RIGOROUS

    def with_err(self, err: float, rigor=None) -> "ComplexApprox":
        m = self.ball.mid()
        with working_bits(max(ctx.prec, self.ball.bits() + 16)):
            e = arb(0, err)
            return ComplexApprox(acb(m.real + e, m.imag + e), rigor or self.rigor)

    def digits_text(self, digits: int) -> str:
        """Decimal text of the midpoint, fixed to ``digits`` significant digits."""
        # flint rounds even negation to the ambient precision
        with working_bits(max(ctx.prec, self.ball.bits() + 16)):
            m = self.ball.mid()
            re = m.real.str(digits, radius=False)
            im = m.imag
            if im == 0:
                return re
            sign = "-" if im < 0 else "+"
            return f"{re} {sign} {abs(im).str(digits, radius=False)}*I"

    def __repr__(self):
        return f"ComplexApprox({self.ball.str(20)}, {self.rigor})"


def weaker(*tags) -> str:
    return HEURISTIC if HEURISTIC in tags else RIGOROUS


# ------------------------------------------------------------- primitives

def _is_pole(z: acb) -> bool:
    """True when the ball touches a nonpositive integer."""
    if not z.imag.contains(0):
        return False
    re = z.real
    if re > 0:
        return False
    lo = math.floor(float(re.mid()) - float(re.rad()) - 1)
    hi = math.ceil(float(re.mid()) + float(re.rad()) + 1)
    return any(re.contains(k) for k in range(max(lo, -10**9), min(hi, 0) + 1))


def gamma(z, prec: Precision = Precision()) -> ComplexApprox:
    with working_bits(prec.bits):
        z = acb(z.ball if isinstance(z, ComplexApprox) else z)
        if _is_pole(z):
            raise PoleError(f"gamma has a pole at {z.str(10)}")
        return ComplexApprox(z.gamma())


def polylog(order: int, z, prec: Precision = Precision()) -> ComplexApprox:
    if order not in (2, 3, 4):
        raise DomainError(f"polylog order {order} not supported")
    with working_bits(prec.bits):
        z = acb(z.ball if isinstance(z, ComplexApprox) else z)
        return ComplexApprox(z.polylog(order))


def polylog_series(order: int, z, prec: Precision = Precision()) -> ComplexApprox:
    """Direct power series ``sum z^k / k^order`` with a geometric tail bound (|z| <= 1/2)."""
    with working_bits(prec.bits):
        z = acb(z.ball if isinstance(z, ComplexApprox) else z)
        az = float(abs(z).mid()) + float(abs(z).rad())
        if az > 0.5 + 1e-12:
            raise DomainError("direct polylog series used only for |z| <= 1/2")
        total = acb(0)
        power = acb(1)
        k = 0
        tol = 2.0 ** (-prec.bits)
        while True:
            k += 1
            power = power * z
            total += power / acb(k) ** order
            bound = az ** (k + 1) / (k + 1) ** order / (1 - az) if az else 0.0
            if bound < tol:
                break
        return ComplexApprox(total + acb(arb(0, bound), arb(0, bound)))


def agm(a, b, bits: int):
    """Arithmetic-geometric mean with the "right choice" of square root.

    Returns ``(M, cs)`` where ``cs`` collects ``c_n = (a_{n-1} - b_{n-1}) / 2``
    for the Legendre sum used by :func:`elliptic_e`.
    """
    a, b = acb(a), acb(b)
    cs = []
    # quadratic convergence: once the relative gap is below 2^(-bits/2),
    # one more step takes it below 2^-bits
    half = arb(2) ** (-(bits // 2))
    last = False
    for _ in range(bits.bit_length() + 64):
        an = (a + b) / 2
        g = (a * b).sqrt()
        if abs(an - g).mid() > abs(an + g).mid():
            g = -g
        cs.append((a - b) / 2)
        a, b = an, g
        if last:
            break
        d = abs(a - b)
        last = bool(d.mid() < half * abs(a).mid())
    d = abs(a - b)
    r = d.mid() + d.rad()
    return a + acb(arb(0, r), arb(0, r)), cs


def _check_elliptic_arg(m: acb, name: str):
    if m.imag.contains(0) and m.real > 1:
        raise DomainError(f"{name}(m) evaluated on its branch cut m > 1")


def _k_ball(m: acb, bits: int) -> acb:
    if (m - 1).contains(0):
        raise PoleError("K(m) has a logarithmic singularity at m = 1")
    _check_elliptic_arg(m, "K")
    mean, _ = agm(acb(1), (1 - m).sqrt(), bits)
    return acb.pi() / (2 * mean)


def _e_ball(m: acb, bits: int) -> acb:
    if m == 1:
        return acb(1)
    if (m - 1).contains(0):
        raise DomainError("E(m) ball straddles m = 1")
    _check_elliptic_arg(m, "E")
    mean, cs = agm(acb(1), (1 - m).sqrt(), bits)
    # c_0^2 = m; later c_n come from the AGM steps
    s = m / 2
    for n, c in enumerate(cs, start=1):
        s += arb(2) ** (n - 1) * c * c
    return acb.pi() / (2 * mean) * (1 - s)


def elliptic_k(m, prec: Precision = Precision()) -> ComplexApprox:
    """Complete elliptic integral of the first kind, parameter convention."""
    with working_bits(prec.bits):
        m = acb(m.ball if isinstance(m, ComplexApprox) else m)
        return ComplexApprox(_k_ball(m, prec.bits))


def elliptic_e(m, prec: Precision = Precision()) -> ComplexApprox:
    """Complete elliptic integral of the second kind, parameter convention."""
    with working_bits(prec.bits):
        m = acb(m.ball if isinstance(m, ComplexApprox) else m)
        return ComplexApprox(_e_ball(m, prec.bits))


def modulus_to_parameter(k):
    """Map a modulus ``k`` to the parameter ``m = k**2`` used by K and E."""
    return k * k


def zeta(s: int, prec: Precision = Precision()) -> ComplexApprox:
    if s < 2:
        raise DomainError("zeta(s) needs an integer s >= 2")
    with working_bits(prec.bits):
        return ComplexApprox(acb(s).zeta())


def catalan(prec: Precision = Precision()) -> ComplexApprox:
    with working_bits(prec.bits):
        return ComplexApprox(acb(arb.const_catalan()))


def pi(prec: Precision = Precision()) -> ComplexApprox:
    with working_bits(prec.bits):
        return ComplexApprox(acb.pi())


def _log(z: acb) -> acb:
    if z.contains(0):
        raise DomainError("log of a ball containing 0")
    return z.log()


_ELEMENTARY = {
    "log": _log,
    "exp": acb.exp,
    "sin": acb.sin,
    "cos": acb.cos,
    "sinh": acb.sinh,
    "cosh": acb.cosh,
    "asin": acb.asin,
    "acos": acb.acos,
    "atan": acb.atan,
    "asinh": acb.asinh,
    "atanh": acb.atanh,
    "re": lambda z: acb(z.real),
    "im": lambda z: acb(z.imag),
}


def elementary(name: str, z, prec: Precision = Precision()) -> ComplexApprox:
    with working_bits(prec.bits):
        z = acb(z.ball if isinstance(z, ComplexApprox) else z)
        v = _ELEMENTARY[name](z)
        if not v.is_finite():
            raise DomainError(f"{name} is not finite at {z.str(10)}")
        return ComplexApprox(v)


# ------------------------------------------------------------ expressions

def _acb_rational(x: Fraction) -> acb:
    return acb(fmpq(x.numerator, x.denominator))


class _Evaluator:
    def __init__(self, bindings: Mapping, prec: Precision, hyp_cache: dict):
        self.bindings = bindings
        self.prec = prec
        self.hyp_cache = hyp_cache
        self.rigor = RIGOROUS

    def ev(self, e: Expr) -> acb:
        if isinstance(e, Num):
            return _acb_rational(e.value)
        if isinstance(e, Sym):
            if e.name not in self.bindings:
                raise UnboundSymbol(f"symbol {e.name!r} is unbound")
            v = self.bindings[e.name]
            return _acb_rational(Fraction(v)) if isinstance(v, (int, Fraction)) else acb(v)
        if isinstance(e, Const):
            if e.name == "i":
                return acb(0, 1)
            if e.name == "pi":
                return acb.pi()
            return acb(arb.const_catalan())
        if isinstance(e, Add):
            out = acb(0)
            for t in e.terms:
                out += self.ev(t)
            return out
        if isinstance(e, Mul):
            out = acb(1)
            for f in e.factors:
                out *= self.ev(f)
            return out
        if isinstance(e, Neg):
            return -self.ev(e.arg)
        if isinstance(e, Pow):
            return self.power(e)
        if isinstance(e, Fn):
            return self.function(e)
        if isinstance(e, Zeta):
            if e.s < 2:
                raise DomainError("zeta(s) needs an integer s >= 2")
            return acb(e.s).zeta()
        if isinstance(e, PolyLog):
            return self.ev(e.arg).polylog(e.order)
        if isinstance(e, RootOfUnity):
            return acb.exp_pi_i(2 * _acb_rational(Fraction(e.k, e.n)))
        if isinstance(e, Hyp):
            return self.hyp(e)
        raise TypeError(f"cannot evaluate node {type(e).__name__}")

    def power(self, e: Pow) -> acb:
        x = e.exp
        if isinstance(x, Num) and x.value.denominator == 1 and x.value < 0:
            base = e.base
            if isinstance(base, Fn) and base.name == "gamma":
                # reciprocal gamma is entire, so a pole in a denominator gives 0
                return self.ev(base.arg).rgamma() ** int(-x.value)
            if isinstance(base, Mul):
                # canonical form gathers a denominator into one product
                out = acb(1)
                for f in base.factors:
                    if isinstance(f, Pow) and isinstance(f.exp, Num) and f.exp.value.denominator == 1:
                        f = Pow(f.base, Num(f.exp.value * x.value))
                    else:
                        f = Pow(f, x)
                    out *= self.power(f) if f.exp.value < 0 else self.ev(f)
                return out
            if isinstance(base, Pow) and isinstance(base.exp, Num) and base.exp.value.denominator == 1 \
                    and base.exp.value > 0:
                return self.power(Pow(base.base, Num(base.exp.value * x.value)))
        b = self.ev(e.base)
        if isinstance(x, Num):
            v = x.value
            if v.denominator == 1:
                if v < 0 and b.contains(0):
                    raise DomainError("division by a ball containing 0")
                return b ** int(v)
            if b.contains(0):
                if b.is_zero() and v > 0:
                    return acb(0)
                if v < 0:
                    raise DomainError("negative power of a ball containing 0")
            if v.denominator == 2:
                return b.sqrt() ** v.numerator
            return (b.log() * _acb_rational(v)).exp()
        w = self.ev(x)
        if b.contains(0):
            raise DomainError("complex power of a ball containing 0")
        return (b.log() * w).exp()

    def function(self, e: Fn) -> acb:
        z = self.ev(e.arg)
        if e.name == "gamma":
            if _is_pole(z):
                raise PoleError(f"gamma pole at {z.str(10)}")
            return z.gamma()
        if e.name == "K":
            return _k_ball(z, ctx.prec)
        if e.name == "E":
            return _e_ball(z, ctx.prec)
        v = _ELEMENTARY[e.name](z)
        if not v.is_finite():
            raise DomainError(f"{e.name} is not finite at {z.str(10)}")
        return v

    def hyp(self, e: Hyp) -> acb:
        from .serieseval import eval_pfq

        s = e.series
        if self.bindings:
            s = s.subs(self.bindings)
        if not s.is_concrete:
            raise UnboundSymbol(f"unbound parameter symbols in {s}")
        key = (s, self.prec.digits)
        if key not in self.hyp_cache:
            self.hyp_cache[key] = eval_pfq(s, self.prec)
        r = self.hyp_cache[key]
        self.rigor = weaker(self.rigor, r.rigor)
        return acb(r.ball)


def eval_expression(e: Expr, bindings: Mapping | None = None,
                    prec: Precision = Precision()) -> ComplexApprox:
    """Evaluate ``e`` to a ball whose radius is at most ``10**-digits`` relative.

    Closed-form parts are re-evaluated with more working bits when
    cancellation widens the ball; embedded series are evaluated once per
    call and reused across retries.
    """
    bindings = dict(bindings or {})
    cache: dict = {}
    bits = prec.bits
    last = None
    for _ in range(5):
        ev = _Evaluator(bindings, prec, cache)
        with working_bits(bits):
            v = ev.ev(e)
        last = ComplexApprox(v, ev.rigor)
        if not v.is_finite():
            raise DomainError(f"expression is not finite: {e}")
        scale = max(float(abs(v).mid()), 1e-300)
        hyp_err = max((c.err for c in cache.values()), default=0.0)
        if last.err <= prec.target * scale or last.err <= 4 * hyp_err:
            return last
        bits *= 2
    return last


def eval_side(e: Expr, side: str, bindings=None, prec: Precision = Precision()) -> ComplexApprox:
    """:func:`eval_expression` with failures wrapped as :class:`EvaluationError`."""
    try:
        return eval_expression(e, bindings, prec)
    except Exception as exc:  # annotate with the side that failed
        raise EvaluationError(side, exc) from exc
