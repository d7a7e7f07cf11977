"""Exact integer primitives.

Everything here works on Python ints (arbitrary precision) and never touches
floating point. Rationals are :class:`fractions.Fraction`, which is already
kept in lowest terms with a positive denominator.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Tuple

Rat = Fraction

__all__ = [
    "Rat",
    "isqrt",
    "iroot",
    "is_perfect_square",
    "is_perfect_power",
    "pow_of_base",
    "gcd",
]


def isqrt(n: int) -> int:
    """Floor of the square root of ``n``."""
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def iroot(n: int, k: int) -> int:
    """Floor of the ``k``-th root of ``n`` (``n >= 0``, ``k >= 1``).

    Newton iteration from a power-of-two overestimate; every step is an exact
    integer operation, so the result satisfies r**k <= n < (r+1)**k.
    """
    if k < 1:
        raise ValueError("root index must be >= 1")
    if n < 0:
        raise ValueError("iroot of a negative number")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << (-(-n.bit_length() // k))
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    # x is now floor(n^(1/k)); the loop only ever stops from above
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def is_perfect_square(n: int) -> Optional[int]:
    """Return ``s`` with ``s*s == n``, or ``None``."""
    if n < 0:
        return None
    s = math.isqrt(n)
    return s if s * s == n else None


def is_perfect_power(n: int) -> Optional[Tuple[int, int]]:
    """Return ``(base, exp)`` with ``exp >= 2`` and the smallest possible base.

    Trial exponents run from ``floor(log2 n)`` downward, so the first exact
    root found carries the largest exponent.
    """
    if n < 2:
        raise ValueError(f"is_perfect_power needs n >= 2, got {n}")
    for k in range(n.bit_length() - 1, 1, -1):
        r = iroot(n, k)
        if r ** k == n:
            return r, k
    return None


def pow_of_base(n: int, c: int) -> Optional[int]:
    """Return ``z >= 0`` with ``c**z == n``, or ``None``."""
    if c < 2:
        raise ValueError(f"base must be >= 2, got {c}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    z = 0
    while n > 1:
        n, rem = divmod(n, c)
        if rem:
            return None
        z += 1
    return z


def gcd(m: int, n: int) -> int:
    return math.gcd(m, n)
