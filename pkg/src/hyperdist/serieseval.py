"""Numeric evaluation of ``pFq`` series at exact arguments.

Three strategies:

``direct``
    Partial sums plus a rigorous geometric tail bound. With rational
    parameters and a rational argument the partial sum is exact (integer
    binary splitting) and only the final division rounds.
``tail_asymptotic``
    For ``p = q + 1`` on the unit circle at a root of unity. ``N`` head terms
    are summed exactly; the remaining terms are expanded as
    ``C z^n n^-sigma (c_0 + c_1/n + ...)`` and each power sum is a
    combination of Hurwitz zeta values.
``alternating_accel``
    For ``z = -1``: exact head, then the Cohen-Villegas-Zagier transform on
    the tail terms.

Boundary strategies report an empirical error ``10 |S(N) - S(2N)|`` and are
tagged heuristic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from flint import acb, arb, fmpq, fmpz

from .errors import DivergentSeries, DomainError, InvalidSeries, PrecisionExhausted
from .expr import Num, RootOfUnity, canonical
from .numerics import HEURISTIC, RIGOROUS, ComplexApprox, Precision, eval_expression, working_bits
from .series import Convergence, HypSeries, convergence_class, unit_root_order

DIRECT = "direct"
TAIL_ASYMPTOTIC = "tail_asymptotic"
ALTERNATING_ACCEL = "alternating_accel"


@dataclass(frozen=True)
class EvalPlan:
    strategy: str
    head_terms: int = 64
    tail_order: int = 0

    def __post_init__(self):
        if self.head_terms < 64:
            raise ValueError("head_terms must be at least 64")
        if self.strategy == TAIL_ASYMPTOTIC and self.tail_order < 4:
            raise ValueError("tail_asymptotic needs tail_order >= 4")

    def escalate(self) -> "EvalPlan":
        return EvalPlan(self.strategy, 2 * self.head_terms, self.tail_order + 2)


# --------------------------------------------------------------- arguments

@dataclass(frozen=True)
class _Arg:
    """Argument of a series: exact rational, exact root of unity, or a ball."""

    rational: Fraction | None
    root: tuple | None  # (r, k) meaning exp(2 pi i k / r)
    ball: acb


def _argument(s: HypSeries, prec: Precision) -> _Arg:
    z = canonical(s.z)
    with working_bits(prec.bits + 64):
        if isinstance(z, Num):
            v = z.value
            root = (1, 0) if v == 1 else (2, 1) if v == -1 else None
            return _Arg(v, root, acb(fmpq(v.numerator, v.denominator)))
        if isinstance(z, RootOfUnity):
            ball = acb.exp_pi_i(2 * acb(fmpq(z.k, z.n)))
            return _Arg(None, (z.n, z.k % z.n), ball)
    ball = eval_expression(z, {}, Precision(prec.digits + 20, prec.guard)).ball
    root = unit_root_order(ball)
    if root is not None:
        r, k = root
        with working_bits(prec.bits + 64):
            ball = acb.exp_pi_i(2 * acb(fmpq(k, r)))
        if r <= 2:
            return _Arg(Fraction(1) if r == 1 else Fraction(-1), root, ball)
    return _Arg(None, root, ball)


# -------------------------------------------------------------------- plan

def plan(s: HypSeries, prec: Precision = Precision()) -> EvalPlan:
    cls = convergence_class(s)
    if cls == Convergence.DIVERGENT:
        raise DivergentSeries(f"{s} diverges")
    if cls in (Convergence.TERMINATING, Convergence.INSIDE_DISK):
        return EvalPlan(DIRECT, 64, 0)
    n_head = max(512, 32 * prec.digits)
    j = max(10, math.ceil((prec.digits + 5) / math.log10(n_head)))
    arg = _argument(s, prec)
    if arg.root == (2, 1):
        return EvalPlan(ALTERNATING_ACCEL, n_head, 0)
    if cls == Convergence.BOUNDARY_COND:
        raise DivergentSeries(
            f"{s}: conditionally convergent away from z = -1 is not supported")
    if arg.root is None:
        raise DomainError(f"{s}: boundary argument is not a root of unity of order <= 720")
    return EvalPlan(TAIL_ASYMPTOTIC, n_head, j)


# ------------------------------------------------------- binary splitting

def _linear_factors(s: HypSeries, z: Fraction):
    """Integer polynomials P(k), Q(k) (as linear factor lists) with
    t_{k+1}/t_k = P(k)/Q(k)."""
    num = [(a.numerator, a.denominator) for a in s.upper]  # (n + d k) / d
    den = [(b.numerator, b.denominator) for b in s.lower] + [(1, 1)]
    pc = z.numerator
    qc = z.denominator
    for _, d in den:
        pc *= d
    for _, d in num:
        qc *= d
    return pc, num, qc, den


def _poly_at(c, factors, k):
    v = c
    for n, d in factors:
        v *= n + d * k
    return v


def _bsplit(pc, num, qc, den, a, b):
    """(P, Q, T) over [a, b) with sum_{k=a}^{b-1} prod_{j=a}^{k-1} P(j)/Q(j) = T/Q."""
    if b - a == 1:
        p = _poly_at(pc, num, a)
        q = _poly_at(qc, den, a)
        return p, q, q
    if b - a <= 8:
        p, q, t = 1, 1, 0
        # T/Q accumulates left to right
        for k in range(a, b):
            pk = _poly_at(pc, num, k)
            qk = _poly_at(qc, den, k)
            t = t * qk + p * qk
            p *= pk
            q *= qk
        return p, q, t
    m = (a + b) // 2
    p1, q1, t1 = _bsplit(pc, num, qc, den, a, m)
    p2, q2, t2 = _bsplit(pc, num, qc, den, m, b)
    return p1 * p2, q1 * q2, t1 * q2 + p1 * t2


def _combine(left, right):
    p1, q1, t1 = left
    p2, q2, t2 = right
    return p1 * p2, q1 * q2, t1 * q2 + p1 * t2


def exact_partial(s: HypSeries, z: Fraction, start: int, stop: int):
    """Exact ``(P, Q, T)`` for terms ``start..stop-1`` relative to ``t_start``.

    ``sum_{k=start}^{stop-1} t_k = t_start * T / Q`` and
    ``t_stop = t_start * P / Q``.
    """
    if stop <= start:
        return 1, 1, 0
    pc, num, qc, den = _linear_factors(s, z)
    return _bsplit(pc, num, qc, den, start, stop)


def exact_term(s: HypSeries, z: Fraction, k: int) -> Fraction:
    if k == 0:
        return Fraction(1)
    p, q, _ = exact_partial(s, z, 0, k)
    return Fraction(p, q)


def _ratio_ball(s: HypSeries, z: acb, k: int) -> acb:
    r = acb(z)
    for a in s.upper:
        r *= acb(fmpq(a.numerator, a.denominator) + k)
    for b in s.lower:
        r /= acb(fmpq(b.numerator, b.denominator) + k)
    return r / (k + 1)


def _fmpq(x: Fraction) -> fmpq:
    return fmpq(x.numerator, x.denominator)


def _as_arb(p: int, q: int) -> arb:
    return arb(fmpz(p)) / arb(fmpz(q))


# ------------------------------------------------------------ direct sums

def _ratio_bound(s: HypSeries, az: float, k: int) -> float:
    """Upper bound on |t_{j+1}/t_j| for all j >= k (requires k beyond every parameter)."""
    lowers = sorted([float(b) for b in s.lower] + [1.0])
    uppers = sorted(float(a) for a in s.upper)
    rho = az
    paired = min(len(uppers), len(lowers))
    for a, b in zip(uppers[-paired:] if paired else [], lowers[:paired]):
        rho *= max(1.0, (a + k) / (b + k))
    for b in lowers[paired:]:
        rho /= (b + k)
    return rho * (1 + 1e-12)


def _direct(s: HypSeries, arg: _Arg, prec: Precision) -> ComplexApprox:
    bits = prec.bits
    target = 2.0 ** (-bits)
    degree = s.degree
    if arg.rational is not None and arg.rational == 0:
        return ComplexApprox(acb(1))
    if arg.rational is not None:
        z = arg.rational
        if degree is not None:
            p, q, t = exact_partial(s, z, 0, degree + 1)
            with working_bits(bits):
                return ComplexApprox(acb(_as_arb(t, q)))
        az = float(abs(z))
        pc, num, qc, den = _linear_factors(s, z)
        k0 = int(max([abs(float(x)) for x in list(s.upper) + list(s.lower)] + [0])) + 2
        n = max(64, k0)
        while True:
            pp, qq, tt = _bsplit(pc, num, qc, den, 0, n)
            tn = abs(Fraction(pp, qq)) if pp else Fraction(0)
            rho = _ratio_bound(s, az, n)
            if rho < 1:
                bound = float(tn) / (1 - rho) if tn else 0.0
                scale = max(abs(float(Fraction(tt, qq))), 1e-300)
                if bound <= target * scale:
                    break
            n *= 2
            if n > 1 << 22:
                raise PrecisionExhausted(f"{s}: too many terms for direct summation")
        with working_bits(bits):
            val = acb(_as_arb(tt, qq))
            if bound:
                val += acb(arb(0, bound), arb(0, bound))
            return ComplexApprox(val)
    # ball arithmetic: exact coefficients times z**k, so radii do not compound
    with working_bits(bits):
        z = arg.ball
        absz = abs(z)
        az = float(absz.mid()) + float(absz.rad())
        k0 = int(max([abs(float(x)) for x in list(s.upper) + list(s.lower)] + [0])) + 2
        coeff = fmpq(1)
        total = acb(1)
        k = 0
        limit = degree if degree is not None else 1 << 22
        while k < limit:
            coeff *= _coeff_ratio(s, k)
            k += 1
            if coeff == 0:
                break
            total += acb(arb(coeff)) * z ** k
            if degree is None and k >= k0:
                rho = _ratio_bound(s, az, k)
                if rho < 1:
                    mag = abs(arb(coeff)) * absz ** k
                    bound = float(mag.mid() + mag.rad()) * rho / (1 - rho)
                    scale = max(float(abs(total).mid()), 1e-300)
                    if bound <= target * scale:
                        return ComplexApprox(total + acb(arb(0, bound), arb(0, bound)))
        if degree is None:
            raise PrecisionExhausted(f"{s}: too many terms for direct summation")
        return ComplexApprox(total)


def _coeff_ratio(s: HypSeries, k: int) -> fmpq:
    r = fmpq(1, k + 1)
    for a in s.upper:
        r *= _fmpq(a) + k
    for b in s.lower:
        r /= _fmpq(b) + k
    return r


# --------------------------------------------------------- Hurwitz zeta

@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    total = Fraction(0)
    for k in range(n):
        total += math.comb(n + 1, k) * bernoulli(k)
    return -total / (n + 1)


def bernoulli_poly(n: int, x: Fraction) -> Fraction:
    return sum((math.comb(n, k) * bernoulli(k) * x ** (n - k) for k in range(n + 1)), Fraction(0))


def _hurwitz_ball(s: arb, a: arb, bits: int) -> arb:
    """Euler-Maclaurin for real ``s > 1`` and ``a > 0`` with a rigorous remainder."""
    sigma = float(s.mid())
    target = 2.0 ** (-bits)
    a_f = float(a.mid())
    m = max(0, math.ceil(bits * 0.35 + abs(sigma) - a_f))
    total = arb(0)
    for k in range(m):
        total += (a + k) ** (-s)
    x = a + m
    total += x ** (1 - s) / (s - 1) + x ** (-s) / 2
    # terms B_2j/(2j)! * (s)_{2j-1} * x^{-s-2j+1}
    poch = s  # (s)_{2j-1} for j = 1
    xf = float(x.mid())
    xpow = x ** (-s - 1)
    inv_x2 = 1 / (x * x)
    fact = 2
    j = 1
    while True:
        b2j = bernoulli(2 * j)
        total += arb(_fmpq(b2j)) / fact * poch * xpow
        # x^-s is completely monotone, so the remainder is bounded by the
        # first omitted term; a factor 2 covers rounding in the float bound
        pj = poch * (s + 2 * j - 1)  # (s)_{2j}
        bnext = abs(float(bernoulli(2 * j + 2)))
        rem = 2 * bnext / math.factorial(2 * j + 2) * abs(float(pj.mid()) * (sigma + 2 * j)) \
            * xf ** (-sigma - 2 * j - 1)
        if rem < target * abs(float(total.mid())) or j > 4 * bits:
            break
        poch = pj * (s + 2 * j)
        xpow *= inv_x2
        fact *= (2 * j + 1) * (2 * j + 2)
        j += 1
    return total + arb(0, rem)


def hurwitz_zeta(s, a, prec: Precision = Precision()) -> ComplexApprox:
    """``zeta(s, a) = sum_{k>=0} (k + a)^-s`` for real ``s > 1``, rational ``a > 0``."""
    with working_bits(prec.bits):
        s_b = arb(_fmpq(Fraction(s))) if isinstance(s, (int, Fraction)) else arb(s)
        a_b = arb(_fmpq(Fraction(a))) if isinstance(a, (int, Fraction)) else arb(a)
        if not (s_b > 1):
            raise DomainError("hurwitz_zeta needs s > 1")
        if not (a_b > 0):
            raise DomainError("hurwitz_zeta needs a > 0")
        return ComplexApprox(acb(_hurwitz_ball(s_b, a_b, prec.bits)))


# ------------------------------------------------ gamma-ratio expansion

@lru_cache(maxsize=256)
def tail_coefficients(upper: tuple, lower: tuple, order: int) -> tuple:
    """Exact ``c_0..c_order`` with
    ``prod Gamma(n + a) / prod Gamma(n + b) = n^(sum a - sum b) * sum_j c_j n^-j``.

    ``upper`` and ``lower`` must have equal length (include 1 for ``n!``).
    """
    d = [Fraction(0)]
    for k in range(1, order + 1):
        acc = sum((bernoulli_poly(k + 1, a) for a in upper), Fraction(0))
        acc -= sum((bernoulli_poly(k + 1, b) for b in lower), Fraction(0))
        d.append(Fraction((-1) ** (k + 1), k * (k + 1)) * acc)
    c = [Fraction(1)]
    for m in range(1, order + 1):
        c.append(sum((k * d[k] * c[m - k] for k in range(1, m + 1)), Fraction(0)) / m)
    return tuple(c)


def _gamma_constant(s: HypSeries) -> arb:
    out = arb(1)
    for b in s.lower:
        out *= arb(_fmpq(b)).gamma()
    for a in s.upper:
        out *= arb(_fmpq(a)).rgamma()
    return out


def _power_tail(arg: _Arg, n: int, x: Fraction, bits: int) -> acb:
    """``sum_{m >= n} z^m m^-x`` for ``z`` a root of unity."""
    r, k = arg.root
    x_b = arb(_fmpq(x))
    total = acb(0)
    for rho in range(r):
        phase = acb.exp_pi_i(2 * acb(fmpq(k * (n + rho) % r, r))) if r > 1 else acb(1)
        hz = _hurwitz_ball(x_b, arb(_fmpq(Fraction(n + rho, r))), bits)
        total += phase * hz
    return total * arb(r) ** (-x_b)


def _head(s: HypSeries, arg: _Arg, n: int, bits: int):
    """Head sum of n terms and the n-th term, both as balls."""
    if arg.rational is not None:
        p, q, t = exact_partial(s, arg.rational, 0, n)
        return acb(_as_arb(t, q)), acb(_as_arb(p, q))
    # z is a root of unity: bucket the real coefficients by the power of z
    r, kk = arg.root
    buckets = [arb(0)] * r
    coeff = fmpq(1)
    for k in range(n):
        j = (k * kk) % r
        buckets[j] += arb(coeff)
        coeff *= _coeff_ratio(s, k)
    roots = [acb.exp_pi_i(2 * acb(fmpq(j, r))) for j in range(r)]
    total = sum((roots[j] * buckets[j] for j in range(r)), acb(0))
    return total, roots[(n * kk) % r] * arb(coeff)


def _tail_asymptotic_once(s: HypSeries, arg: _Arg, n: int, order: int, bits: int) -> acb:
    with working_bits(bits):
        head, _ = _head(s, arg, n, bits)
        upper = tuple(sorted(s.upper))
        lower = tuple(sorted(list(s.lower) + [Fraction(1)]))
        coeffs = tail_coefficients(upper, lower, order)
        sigma = -(sum(upper, Fraction(0)) - sum(lower, Fraction(0)))
        tail = acb(0)
        for j, c in enumerate(coeffs):
            if c:
                tail += arb(_fmpq(c)) * _power_tail(arg, n, sigma + j, bits)
        return head + _gamma_constant(s) * tail


def _cvz(terms: list) -> acb:
    """Cohen-Villegas-Zagier acceleration of ``sum (-1)^k a_k``."""
    n = len(terms)
    d = (3 + arb(8).sqrt()) ** n
    d = (d + 1 / d) / 2
    b = arb(-1)
    c = -d
    s = acb(0)
    for k in range(n):
        c = b - c
        s += c * terms[k]
        b = b * (k + n) * (k - n) / ((k + arb(0.5)) * (k + 1))
    return s / d


def _alternating_once(s: HypSeries, arg: _Arg, n: int, digits: int, bits: int) -> acb:
    with working_bits(bits):
        head, term = _head(s, arg, n, bits)
        count = math.ceil(1.31 * digits) + 10
        z = arg.ball
        terms = []
        sign = 1
        for k in range(n, n + count):
            terms.append(term * sign)
            term *= _ratio_ball(s, z, k)
            sign = -sign
        return head + _cvz(terms)


def _boundary(s: HypSeries, arg: _Arg, pl: EvalPlan, prec: Precision) -> ComplexApprox:
    threshold = 10.0 ** (-prec.digits + prec.guard / 2)
    cur = pl
    for _ in range(4):
        bits = prec.bits + 32
        if cur.strategy == TAIL_ASYMPTOTIC:
            v1 = _tail_asymptotic_once(s, arg, cur.head_terms, cur.tail_order, bits)
            v2 = _tail_asymptotic_once(s, arg, 2 * cur.head_terms, cur.tail_order, bits)
        else:
            work = prec.digits + prec.guard
            v1 = _alternating_once(s, arg, cur.head_terms, work, bits)
            v2 = _alternating_once(s, arg, 2 * cur.head_terms, work, bits)
        with working_bits(bits):
            diff = abs(v1 - v2)
            err = 10 * (float(diff.mid()) + float(diff.rad())) + float(v2.real.rad()) + float(v2.imag.rad())
            scale = max(float(abs(v2).mid()), 1.0)
        if err < threshold * scale:
            out = ComplexApprox(v2.mid(), HEURISTIC).with_err(err)
            return out
        cur = cur.escalate()
    raise PrecisionExhausted(f"{s}: boundary error {err:.3g} above {threshold:.3g}")


# ----------------------------------------------------------------- public

def eval_pfq(s: HypSeries, prec: Precision = Precision(), strategy: EvalPlan | None = None) -> ComplexApprox:
    """Evaluate a concrete series. Raises DivergentSeries outside the convergence region."""
    if not s.is_concrete:
        raise InvalidSeries("eval_pfq needs concrete parameters")
    pl = strategy or plan(s, prec)
    arg = _argument(s, prec)
    if pl.strategy == DIRECT:
        return _direct(s, arg, prec)
    return _boundary(s, arg, pl, prec)


__all__ = [
    "ALTERNATING_ACCEL", "DIRECT", "EvalPlan", "TAIL_ASYMPTOTIC", "bernoulli", "eval_pfq",
    "exact_partial", "exact_term", "hurwitz_zeta", "plan", "tail_coefficients", "RIGOROUS",
]
