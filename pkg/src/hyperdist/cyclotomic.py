"""Exact arithmetic in cyclotomic fields, just enough to fold sums of roots of unity."""

from fractions import Fraction
from functools import lru_cache


def _polydiv_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Coefficients (lowest degree first) of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


def reduce_root_sum(coeffs, n: int) -> list:
    """Reduce ``sum(coeffs[k] * w**k)``, ``w = exp(2 pi i/n)``, to the power basis.

    Returns a length-``n`` list whose entries beyond ``phi(n) - 1`` are zero;
    the representation is unique, so the sum is rational iff only entry 0
    survives.
    """
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rem = [Fraction(c) for c in coeffs]
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            for j in range(deg + 1):
                rem[i - deg + j] -= c * phi[j]
    return rem
