import pytest
from hypothesis import given, settings, strategies as st

from expdioph.arith import gcd
from expdioph.solver import (
    ExpSolution,
    InvalidTriple,
    Triple,
    count_solutions,
    enumerate_solutions,
    has_multiple_solutions,
    parse_height,
)

from conftest import naive_solutions

COPRIME_SMALL = [
    (a, b, c)
    for a in range(2, 11)
    for b in range(2, 11)
    for c in range(2, 11)
    if gcd(a, b) == gcd(a, c) == gcd(b, c) == 1
]


@pytest.mark.parametrize(
    "abc, height, want",
    [
        ((3, 5, 2), 2 ** 20, [(1, 1, 3), (3, 1, 5), (1, 3, 7)]),
        ((2, 5, 3), 3 ** 5, [(2, 1, 2), (1, 2, 3)]),
        ((2, 3, 11), 11 ** 3, [(3, 1, 1), (1, 2, 1)]),
    ],
)
def test_enumerate_examples(abc, height, want, backend):
    got = enumerate_solutions(Triple(*abc), height, backend=backend)
    assert set(got) == set(want)
    assert got == sorted(want, key=lambda s: (s[2], s[0], s[1]))
    assert got == naive_solutions(*abc, height)


@pytest.mark.parametrize(
    "abc, height, n",
    [((3, 5, 2), 2 ** 60, 3), ((5, 3, 2), 2 ** 60, 3), ((2, 5, 133), 133 ** 4, 2)],
)
def test_count_examples(abc, height, n):
    assert count_solutions(Triple(*abc), height) == n


def test_count_2_5_133_witnesses():
    assert enumerate_solutions(Triple(2, 5, 133), 133 ** 4) == [(3, 3, 1), (7, 1, 1)]


@pytest.mark.parametrize(
    "abc, height, want",
    [((3, 5, 2), 2 ** 20, True), ((2, 5, 3), 3 ** 5, True), ((2, 5, 7), 7 ** 12, False)],
)
def test_has_multiple(abc, height, want, backend):
    assert has_multiple_solutions(Triple(*abc), height, backend=backend) is want
    assert (len(naive_solutions(*abc, height)) >= 2) is want


def test_2_5_7_single_solution():
    assert naive_solutions(2, 5, 7, 7 ** 12) == [(1, 1, 1)]


@pytest.mark.parametrize("abc", [(4, 6, 2), (1, 3, 2), (2, 2, 3), (3, 9, 2), (0, 5, 7)])
def test_invalid_triples(abc):
    with pytest.raises(InvalidTriple):
        Triple(*abc)


def test_height_below_c_rejected():
    with pytest.raises(ValueError):
        enumerate_solutions(Triple(2, 3, 11), 10)


def test_completeness_against_naive_oracle():
    for abc in COPRIME_SMALL:
        for h in (10 ** 4, 10 ** 9):
            assert enumerate_solutions(Triple(*abc), h) == naive_solutions(*abc, h), abc


def test_big_height_uses_exact_path():
    t = Triple(3, 5, 2)
    assert enumerate_solutions(t, 2 ** 200) == [(1, 1, 3), (3, 1, 5), (1, 3, 7)]
    assert enumerate_solutions(Triple(2, 3, 7), 7 ** 40) == naive_solutions(2, 3, 7, 7 ** 40)


@pytest.mark.parametrize("abc", COPRIME_SMALL[::7])
def test_symmetry(abc):
    a, b, c = abc
    h = 10 ** 12
    mine = enumerate_solutions(Triple(a, b, c), h)
    swapped = enumerate_solutions(Triple(b, a, c), h)
    assert sorted((s.y, s.x, s.z) for s in mine) == sorted(swapped)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(COPRIME_SMALL), st.integers(2, 40), st.integers(0, 30))
def test_monotone_in_height(abc, k, extra):
    c = abc[2]
    h1 = c ** k
    h2 = h1 * (2 ** extra)
    small = enumerate_solutions(Triple(*abc), h1)
    large = enumerate_solutions(Triple(*abc), h2)
    assert set(small) <= set(large)
    assert small == [s for s in large if c ** s.z <= h1]


def test_parity_for_even_c():
    for a, b, c in COPRIME_SMALL:
        if c % 2 == 0:
            for s in enumerate_solutions(Triple(a, b, c), 10 ** 12):
                assert (a ** s.x) % 2 == 1 and (b ** s.y) % 2 == 1


@pytest.mark.parametrize("sieve", [True, (7,), (5, 9, 16, 17, 73)])
def test_modular_sieve_is_conservative(sieve):
    for abc in COPRIME_SMALL:
        plain = enumerate_solutions(Triple(*abc), 10 ** 9)
        assert enumerate_solutions(Triple(*abc), 10 ** 9, sieve=sieve) == plain


def test_modular_sieve_on_exceptional():
    for abc, h in [((3, 5, 2), 2 ** 60), ((2, 89, 91), 91 ** 3), ((3, 10, 13), 13 ** 5)]:
        t = Triple(*abc)
        assert enumerate_solutions(t, h, sieve=True) == enumerate_solutions(t, h)
        assert has_multiple_solutions(t, h, sieve=True)


def test_solutions_are_value_objects():
    s = ExpSolution(1, 2, 3)
    assert tuple(s) == (1, 2, 3) and s.z == 3


@pytest.mark.parametrize(
    "text, c, want",
    [("1048576", None, 2 ** 20), ("2^60", None, 2 ** 60), ("10**9", None, 10 ** 9), ("c^5", 11, 11 ** 5)],
)
def test_parse_height(text, c, want):
    assert parse_height(text, c) == want


@pytest.mark.parametrize("text", ["c^3", "abc", "0", "-5"])
def test_parse_height_bad(text):
    with pytest.raises(ValueError):
        parse_height(text)
