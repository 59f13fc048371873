"""Integer root and dyadic power-of-two bracket helpers."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oelab import isqrt_bracket, nth_root_floor, pow2_bracket, pow2_ceil


@given(st.integers(0, 10**30), st.integers(1, 12))
@settings(max_examples=300)
def test_nth_root_floor_definition(x, k):
    r = nth_root_floor(x, k)
    assert r >= 0
    assert r**k <= x < (r + 1) ** k


def test_nth_root_floor_exact_powers():
    assert nth_root_floor(7**9, 9) == 7
    assert nth_root_floor(7**9 - 1, 9) == 6
    assert nth_root_floor(1, 5) == 1
    assert nth_root_floor(0, 3) == 0
    with pytest.raises(ValueError):
        nth_root_floor(-1, 2)
    with pytest.raises(ValueError):
        nth_root_floor(4, 0)


@given(st.integers(0, 300), st.integers(1, 8))
@settings(max_examples=200)
def test_pow2_ceil_definition(num, den):
    c = pow2_ceil(num, den)
    # c - 1 < 2^(num/den) <= c, checked multiplicatively
    assert c**den >= 1 << num
    if c > 1:
        assert (c - 1) ** den < 1 << num


def test_pow2_ceil_known_values():
    assert pow2_ceil(4, 4) == 2
    assert pow2_ceil(8, 4) == 4
    assert pow2_ceil(9, 4) == 5  # 2^2.25 = 4.756...
    assert pow2_ceil(0, 1) == 1


@given(st.fractions(min_value=Fraction(-64), max_value=Fraction(64), max_denominator=16))
@settings(max_examples=200)
def test_pow2_bracket_sandwiches(exponent):
    lo, hi = pow2_bracket(exponent)
    assert 0 < lo <= hi
    # lo <= 2^exponent <= hi, verified by clearing denominators
    p, q = exponent.numerator, exponent.denominator
    # compare lo^q vs 2^p: lo^q <= 2^p <= hi^q
    if p >= 0:
        target = Fraction(1 << p)
    else:
        target = Fraction(1, 1 << -p)
    assert lo**q <= target <= hi**q
    if exponent.denominator == 1:
        assert lo == hi
    else:
        # consecutive integers over 2^shift; one of the two is odd, so the
        # larger reduced denominator recovers the shift
        assert hi - lo == Fraction(1, max(lo.denominator, hi.denominator))
        assert (hi - lo) / lo <= Fraction(1, 1 << 63)


def test_pow2_bracket_negative_fractional():
    lo, hi = pow2_bracket(Fraction(-4, 5))
    assert lo < hi
    assert lo**5 < Fraction(1, 16) < hi**5


@given(st.integers(0, 10**24))
@settings(max_examples=200)
def test_isqrt_bracket(x):
    lo, hi = isqrt_bracket(x)
    assert lo * lo <= x <= hi * hi
    assert hi - lo <= 1
    assert (lo == hi) == (math.isqrt(x) ** 2 == x)
