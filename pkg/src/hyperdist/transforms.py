"""Identity generators: the distribution relation and three rewrites.

``dist`` splits a series over residue classes of its summation index:
a ``pFq`` at ``z`` averaged over the ``n``-th roots of unity produces a
higher-order series whose parameter lists are the blocks
``{(c+m)/n, ..., (c+m+n-1)/n}``. ``stir``, ``init`` and ``pfd`` are the
falling-factorial, initial-term and partial-fraction rewrites.

Everything here is exact; numbers only enter when an identity is verified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DuplicateParameter, InvalidSeries, InvalidSpec, NotIntegerDifference, VanishingPochhammer,
)
from .expr import (
    Add, Expr, Hyp, Mul, Num, Pow, RootOfUnity, canonical, free_symbols, num, to_text, wrap,
)
from .identity import Identity
from .params import ParamList, format_param, is_nonpositive_integer
from .series import HypSeries, cancel_parameters, pochhammer


@dataclass(frozen=True)
class DistSpec:
    n: int
    m: int
    z: Expr
    A: ParamList
    B: ParamList

    def __post_init__(self):
        object.__setattr__(self, "z", wrap(self.z))
        object.__setattr__(self, "A", ParamList(self.A))
        object.__setattr__(self, "B", ParamList(self.B))
        if not (isinstance(self.n, int) and self.n >= 1):
            raise InvalidSpec(f"n must be a positive integer, got {self.n}")
        if not (isinstance(self.m, int) and 0 <= self.m < self.n):
            raise InvalidSpec(f"need 0 <= m < n, got m={self.m}, n={self.n}")

    def label(self) -> str:
        return (f"DIST({self.n},{self.m},{to_text(self.z)},{{{self.A.text()}}},"
                f"{{{self.B.text()}}})")


def dist_block(c, n: int, m: int) -> ParamList:
    """``{(c+m)/n, (c+m+1)/n, ..., (c+m+n-1)/n}``."""
    if not 0 <= m < n:
        raise InvalidSpec(f"need 0 <= m < n, got m={m}, n={n}")
    if isinstance(c, (int, str)):
        c = Fraction(c)
    return ParamList((c + m + j) / n for j in range(n))


def dist_blocks(cs, n: int, m: int) -> ParamList:
    out = []
    for c in cs:
        out.extend(dist_block(c, n, m))
    return ParamList(out)


def _poch(a, k):
    return wrap(pochhammer(a, k))


def _check_numeric_disk(z: Expr):
    if free_symbols(z):
        return
    from .numerics import Precision, eval_expression

    v = eval_expression(z, {}, Precision(20, 10))
    az = abs(v.ball)
    if az > 1 and float((az - 1).mid()) > 1e-15:
        raise InvalidSpec(f"|z| must be at most 1, got {to_text(z)}")


def dist(spec: DistSpec, raw: bool = False) -> Identity:
    """The distribution identity for ``spec``.

    The left side has parameter cancellation applied unless ``raw`` is set.
    Branches of ``z^(1/n)`` and ``z^(-m/n)`` are principal.
    """
    n, m, z, A, B = spec.n, spec.m, spec.z, spec.A, spec.B
    p, q = len(A), len(B)
    for a in A:
        if isinstance(a, Fraction) and m > 0 and pochhammer(a, m) == 0:
            raise InvalidSpec(f"(a)_m vanishes for a = {format_param(a)}, m = {m}")
    for b in B:
        if isinstance(b, Fraction) and is_nonpositive_integer(b):
            raise InvalidSpec(f"lower parameter {format_param(b)} is a nonpositive integer")
    cz = canonical(z)
    if m > 0 and isinstance(cz, Num) and cz.value == 0:
        raise InvalidSpec("z = 0 is excluded when m > 0")
    _check_numeric_disk(z)
    upper = ParamList([Fraction(1)]) + dist_blocks(A, n, m)
    lower = dist_blocks([Fraction(1)] + list(B), n, m)
    try:
        lhs_series = HypSeries(upper, lower, z)
    except InvalidSeries as exc:
        raise InvalidSpec(str(exc)) from exc
    if not raw:
        lhs_series = cancel_parameters(lhs_series)

    exponent = m * (p - q - 1) - 1
    prefactor = [num(math.factorial(m)), Pow(num(n), num(exponent))]
    if m:
        prefactor.append(Pow(z, num(Fraction(-m, n))))
    prefactor += [_poch(b, m) for b in B]
    prefactor += [Pow(_poch(a, m), num(-1)) for a in A]
    scale = Fraction(n) ** (q - p + 1)
    root_z = Pow(z, num(Fraction(1, n)))
    terms = []
    for k in range(n):
        arg = canonical(Mul((num(scale), RootOfUnity(n, k), root_z)))
        series = Hyp(HypSeries(A, B, arg))
        phase = canonical(RootOfUnity(n, (-k * m) % n))
        terms.append(Mul((phase, series)) if phase != num(1) else series)
    rhs = Mul(tuple(prefactor) + (Add(tuple(terms)) if len(terms) > 1 else terms[0],))
    rhs = canonical(rhs)
    syms = sorted(free_symbols(Hyp(lhs_series)) | free_symbols(rhs))
    return Identity(spec.label(), Hyp(lhs_series), rhs, tuple(syms), (),
                    "distribution relation")


def annihilation_sum(n: int, j: int, m: int) -> Expr:
    """Exact ``sum_k exp(2 pi i k (j - m) / n)``: ``n`` when ``j = m (mod n)``, else 0."""
    return canonical(Add(tuple(RootOfUnity(n, (k * (j - m)) % n) for k in range(n))))


# ------------------------------------------------------------------ rewrites

def _split(s: HypSeries, ui: int, li: int):
    if not (0 <= ui < s.p and 0 <= li < s.q):
        raise InvalidSpec(f"index out of range: upper {ui}, lower {li}")
    rest_u = [a for i, a in enumerate(s.upper) if i != ui]
    rest_l = [b for i, b in enumerate(s.lower) if i != li]
    return s.upper[ui], s.lower[li], rest_u, rest_l


def _require_concrete(s: HypSeries):
    if not s.is_concrete:
        raise InvalidSpec("rewrites need concrete rational parameters")


def stir(s: HypSeries, upper_idx: int, lower_idx: int) -> Identity:
    """Split ``(a)_k / (a-m)_k`` into falling factorials of ``k``.

    ``pFq(a, A'; a-m, B'; z) = sum_{k=0}^{m} C(m,k) z^k (A')_k / ((a-m)_k (B')_k)
    * F(A'+k; B'+k; z)``.
    """
    _require_concrete(s)
    a, b, rest_u, rest_l = _split(s, upper_idx, lower_idx)
    diff = a - b
    if diff.denominator != 1 or diff < 0:
        raise NotIntegerDifference(f"upper {a} minus lower {b} is not a natural number")
    m = int(diff)
    terms = []
    for k in range(m + 1):
        den = pochhammer(b, k)
        for bj in rest_l:
            den *= pochhammer(bj, k)
        if den == 0:
            raise VanishingPochhammer(f"a Pochhammer symbol in the denominator vanishes at k = {k}")
        coeff = Fraction(math.comb(m, k))
        for aj in rest_u:
            coeff *= pochhammer(aj, k)
        coeff /= den
        if coeff == 0:
            continue
        shifted = HypSeries(ParamList(x + k for x in rest_u), ParamList(x + k for x in rest_l), s.z)
        factors = [num(coeff)]
        if k:
            factors.append(Pow(s.z, num(k)))
        factors.append(Hyp(shifted))
        terms.append(Mul(tuple(factors)))
    rhs = canonical(Add(tuple(terms))) if len(terms) != 1 else canonical(terms[0])
    return Identity(f"STIR({s}; {upper_idx}, {lower_idx})", Hyp(s), rhs, (), (), "falling-factorial rewrite")


def init(s: HypSeries, upper_idx_of_1: int, lower_idx: int) -> Identity:
    """Drop the first ``n`` terms of ``pFq(1, A'; n+1, B'; z)`` and reindex."""
    _require_concrete(s)
    one, top, rest_u, rest_l = _split(s, upper_idx_of_1, lower_idx)
    if one != 1:
        raise InvalidSpec(f"upper parameter at {upper_idx_of_1} is {one}, not 1")
    n = top - 1
    if n.denominator != 1 or n < 1:
        raise InvalidSpec(f"lower parameter {top} is not n+1 with n >= 1")
    n = int(n)
    cz = canonical(s.z)
    if isinstance(cz, Num) and cz.value == 0:
        raise InvalidSpec("z = 0 is excluded")
    den = Fraction(1)
    for aj in rest_u:
        den *= pochhammer(1 - aj, n)
    if den == 0:
        raise VanishingPochhammer("(1 - a_j)_n vanishes for an upper parameter")
    numer = Fraction((-1) ** ((s.p - s.q) * n) * math.factorial(n))
    for bj in rest_l:
        numer *= pochhammer(1 - bj, n)
    shifted_l = [bj - n for bj in rest_l]
    if any(is_nonpositive_integer(x) for x in shifted_l):
        raise InvalidSpec("a shifted lower parameter b_j - n is a nonpositive integer")
    shifted = HypSeries(ParamList(aj - n for aj in rest_u), ParamList(shifted_l), s.z)
    head = []
    for k in range(n):
        c = Fraction(1, math.factorial(k))
        for aj in rest_u:
            c *= pochhammer(aj - n, k)
        for bj in shifted_l:
            c /= pochhammer(bj, k)
        if c:
            head.append(Mul((num(-c), Pow(s.z, num(k)))))
    inner = Add((Hyp(shifted),) + tuple(head))
    rhs = canonical(Mul((num(numer / den), Pow(s.z, num(-n)), inner)))
    return Identity(f"INIT({s}; {upper_idx_of_1}, {lower_idx})", Hyp(s), rhs, (), (),
                    "initial-term rewrite")


def pfd(s: HypSeries, pairs) -> Identity:
    """Partial fractions over upper/lower pairs ``(a_j; a_j + 1)``."""
    _require_concrete(s)
    pairs = [tuple(p) for p in pairs]
    ups = [u for u, _ in pairs]
    los = [l for _, l in pairs]
    if not pairs or len(set(ups)) != len(ups) or len(set(los)) != len(los):
        raise InvalidSpec("pairs must be a nonempty list of distinct (upper, lower) indices")
    vals = []
    for u, l in pairs:
        if not (0 <= u < s.p and 0 <= l < s.q):
            raise InvalidSpec(f"pair ({u}, {l}) out of range")
        if s.lower[l] != s.upper[u] + 1:
            raise InvalidSpec(f"lower {s.lower[l]} is not upper {s.upper[u]} + 1")
        vals.append(s.upper[u])
    if len(set(vals)) != len(vals):
        raise DuplicateParameter("paired upper parameters must be distinct")
    rest_u = [a for i, a in enumerate(s.upper) if i not in ups]
    rest_l = [b for i, b in enumerate(s.lower) if i not in los]
    terms = []
    for k, ak in enumerate(vals):
        c = Fraction(1)
        for j, aj in enumerate(vals):
            if j != k:
                c *= aj / (aj - ak)
        if c == 0:
            continue
        part = HypSeries(ParamList([ak] + rest_u), ParamList([ak + 1] + rest_l), s.z)
        terms.append(Mul((num(c), Hyp(part))))
    rhs = canonical(Add(tuple(terms))) if len(terms) != 1 else canonical(terms[0])
    return Identity(f"PFD({s}; {pairs})", Hyp(s), rhs, (), (), "partial-fraction rewrite")

