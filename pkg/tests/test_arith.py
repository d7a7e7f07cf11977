import math

import pytest
from hypothesis import given, strategies as st

from expdioph.arith import Rat, gcd, iroot, is_perfect_power, is_perfect_square, isqrt, pow_of_base


@pytest.mark.parametrize("n, root", [(49, 7), (50, 7), (0, 0), (1, 1), (2, 1)])
def test_isqrt_examples(n, root):
    assert isqrt(n) == root


def test_isqrt_exhaustive_to_a_million():
    for n in range(10 ** 6 + 1):
        r = isqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)


@given(st.integers(min_value=0, max_value=1 << 4096))
def test_isqrt_big(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) ** 2


@given(st.integers(min_value=0, max_value=1 << 4096), st.integers(min_value=1, max_value=40))
def test_iroot_bracket(n, k):
    r = iroot(n, k)
    assert r ** k <= n < (r + 1) ** k


@pytest.mark.parametrize("n, want", [(49, 7), (53, None), (1, 1), (0, 0)])
def test_is_perfect_square(n, want):
    assert is_perfect_square(n) == want


def test_is_perfect_square_matches_isqrt():
    for n in range(20000):
        s = isqrt(n)
        assert (is_perfect_square(n) is not None) == (s * s == n)


@pytest.mark.parametrize("n, want", [(8, (2, 3)), (9, (3, 2)), (7, None), (64, (2, 6)), (2, None)])
def test_is_perfect_power_examples(n, want):
    assert is_perfect_power(n) == want


def test_is_perfect_power_rejects_small():
    with pytest.raises(ValueError):
        is_perfect_power(1)


def test_is_perfect_power_against_trial_roots():
    # oracle: build every power below the limit, keep the smallest base seen
    limit = 10 ** 5
    smallest = {}
    for base in range(2, isqrt(limit) + 1):
        v, k = base * base, 2
        while v <= limit:
            smallest.setdefault(v, (base, k))
            v *= base
            k += 1
    for n in range(2, limit + 1):
        assert is_perfect_power(n) == smallest.get(n), n


def test_is_perfect_power_big():
    assert is_perfect_power(3 ** 1000) == (3, 1000)
    assert is_perfect_power(6 ** 1000 + 1) is None


@pytest.mark.parametrize("n, c, want", [(9, 3, 2), (27, 3, 3), (28, 3, None), (1, 5, 0), (2, 2, 1)])
def test_pow_of_base(n, c, want):
    assert pow_of_base(n, c) == want


def test_pow_of_base_roundtrip():
    for c in range(2, 21):
        for z in range(41):
            assert pow_of_base(c ** z, c) == z
            if z:
                assert pow_of_base(c ** z + 1, c) is None


def test_pow_of_base_rejects_bad_base():
    with pytest.raises(ValueError):
        pow_of_base(8, 1)


@pytest.mark.parametrize("m, n, want", [(2, 5, 1), (6, 4, 2), (0, 7, 7)])
def test_gcd(m, n, want):
    assert gcd(m, n) == want


def test_rat_is_normalized():
    r = Rat(6, -4)
    assert (r.numerator, r.denominator) == (-3, 2)
    assert math.gcd(r.numerator, r.denominator) == 1
