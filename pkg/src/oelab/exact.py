"""Exact integer/rational helpers for irrational power-of-two thresholds.

Verdicts in this package never go through floating point: quantities like
2^(n/2) are either bracketed by dyadic rationals or eliminated by squaring
both sides of the comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["nth_root_floor", "pow2_ceil", "pow2_bracket", "isqrt_bracket"]


def nth_root_floor(x: int, k: int) -> int:
    """floor(x ** (1/k)) for nonnegative integer x and k >= 1, exactly."""
    if x < 0 or k < 1:
        raise ValueError(f"need x >= 0 and k >= 1, got x={x}, k={k}")
    if x in (0, 1) or k == 1:
        return x
    r = 1 << -(-x.bit_length() // k)  # upper start: r^k >= x
    while True:
        nxt = ((k - 1) * r + x // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r ** k > x:
        r -= 1
    return r


def pow2_ceil(num: int, den: int) -> int:
    """ceil(2 ** (num/den)) for num >= 0, den >= 1, exactly."""
    if num < 0 or den < 1:
        raise ValueError(f"need num >= 0 and den >= 1, got {num}/{den}")
    root = nth_root_floor(1 << num, den)
    return root if root ** den == (1 << num) else root + 1


def pow2_bracket(exponent: Fraction, bits: int = 64) -> tuple[Fraction, Fraction]:
    """Dyadic lo <= 2**exponent <= hi; exact (lo == hi) at integer exponents.

    bits controls the bracket width for fractional exponents: at most 2^-bits
    relative to the value.
    """
    exponent = Fraction(exponent)
    if exponent.denominator == 1:
        e = exponent.numerator
        v = Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)
        return v, v
    p, q = exponent.numerator, exponent.denominator
    # scale so that 2**exponent = 2**((p + q*shift)/q) / 2**shift with the
    # inner exponent at least `bits`, then take integer q-th root brackets;
    # the floor/floor+1 gap is then at most 2^-bits of the value
    shift = bits
    t = p + q * shift
    while t < q * bits:
        shift += bits
        t = p + q * shift
    lo_int = nth_root_floor(1 << t, q)
    hi_int = lo_int + 1  # never exact: exponent is not an integer
    den = 1 << shift
    return Fraction(lo_int, den), Fraction(hi_int, den)


def isqrt_bracket(x: int) -> tuple[int, int]:
    """Integers lo <= sqrt(x) <= hi with hi == lo exactly when x is a square."""
    lo = math.isqrt(x)
    return lo, lo if lo * lo == x else lo + 1
