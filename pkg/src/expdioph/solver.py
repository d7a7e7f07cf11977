"""Enumerate solutions of a^x + b^y = c^z for a fixed base triple.

Completeness is always relative to a height bound ``H`` on the common value
``c^z``: no effective bound on the exponents is known, so every count here is
``N_H(a, b, c)`` rather than ``N(a, b, c)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from . import kernels
from .arith import gcd, pow_of_base

DEFAULT_SIEVE_MODULI = (5, 7, 9, 11, 13, 16, 17, 19, 37, 73)


class InvalidTriple(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Triple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if min(a, b, c) < 2:
            raise InvalidTriple(f"bases must all be >= 2, got ({a},{b},{c})")
        if gcd(a, b) != 1 or gcd(a, c) != 1 or gcd(b, c) != 1:
            raise InvalidTriple(f"bases must be pairwise coprime, got ({a},{b},{c})")

    def swapped(self) -> "Triple":
        return Triple(self.b, self.a, self.c)

    def __iter__(self):
        return iter((self.a, self.b, self.c))


class ExpSolution(NamedTuple):
    x: int
    y: int
    z: int


def check_height(t: Triple, height: int) -> int:
    if height < t.c:
        raise ValueError(f"height {height} is below c={t.c}; the search space is empty")
    return height


def verify_solution(t: Triple, s: ExpSolution) -> bool:
    """Direct evaluation, independent of the subtraction-and-divide search."""
    return min(s) >= 1 and pow(t.a, s.x) + pow(t.b, s.y) == pow(t.c, s.z)


def _order(g: int, m: int) -> int:
    k, v = 1, g % m
    while v != 1:
        v = v * g % m
        k += 1
    return k


@lru_cache(maxsize=4096)
def _sieve_table(a: int, b: int, c: int, m: int) -> Tuple[int, int, FrozenSet[Tuple[int, int]]]:
    oa, ob, oc = _order(a, m), _order(b, m), _order(c, m)
    bpow = {pow(b, y, m) for y in range(ob)}
    ok = frozenset(
        (i, k)
        for i in range(oa)
        for k in range(oc)
        if (pow(c, k, m) - pow(a, i, m)) % m in bpow
    )
    return oa, oc, ok


def _sieves(t: Triple, moduli: Sequence[int]):
    prod = t.a * t.b * t.c
    return [_sieve_table(t.a, t.b, t.c, m) for m in moduli if gcd(m, prod) == 1]


def _iter_solutions(t: Triple, height: int, moduli: Sequence[int]) -> Iterator[ExpSolution]:
    a, b, c = t.a, t.b, t.c
    tables = _sieves(t, moduli)
    cz, z = c, 1
    while cz <= height:
        ax, x = a, 1
        while ax < cz:
            if all((x % oa, z % oc) in ok for oa, oc, ok in tables):
                y = pow_of_base(cz - ax, b)
                if y:
                    yield ExpSolution(x, y, z)
            ax *= a
            x += 1
        cz *= c
        z += 1


def _search(t: Triple, height: int, limit: int, sieve, backend) -> List[ExpSolution]:
    if sieve:
        moduli = DEFAULT_SIEVE_MODULI if sieve is True else tuple(sieve)
        out = []
        for s in _iter_solutions(t, height, moduli):
            out.append(s)
            if limit and len(out) >= limit:
                break
        return out
    if height < kernels.U64_LIMIT:
        impl = kernels.get_backend(backend)
        return [ExpSolution(*s) for s in impl.eq1_solutions(t.a, t.b, t.c, height, limit)]
    out = []
    for s in _iter_solutions(t, height, ()):
        out.append(s)
        if limit and len(out) >= limit:
            break
    return out


def enumerate_solutions(
    t: Triple, height: int, *, sieve=False, backend: Optional[str] = None
) -> List[ExpSolution]:
    """Every (x, y, z) with a^x + b^y = c^z <= height, sorted by (z, x, y).

    ``sieve`` turns on a modular pre-filter: ``True`` for the default moduli
    or a sequence of moduli. It only skips (x, z) pairs that have no solution
    modulo some m coprime to abc, so results are unchanged.
    """
    check_height(t, height)
    sols = _search(t, height, 0, sieve, backend)
    for s in sols:
        if not verify_solution(t, s):
            raise AssertionError(f"search produced a non-solution {s} for {t}")
    return sorted(sols, key=lambda s: (s.z, s.x, s.y))


def count_solutions(t: Triple, height: int, **kw) -> int:
    return len(enumerate_solutions(t, height, **kw))


def has_multiple_solutions(
    t: Triple, height: int, *, sieve=False, backend: Optional[str] = None
) -> bool:
    check_height(t, height)
    found = _search(t, height, 2, sieve, backend)
    return sum(verify_solution(t, s) for s in found) >= 2


def parse_height(text: str, c: Optional[int] = None) -> int:
    """Parse ``"1048576"``, ``"2^20"``, ``"10**9"`` or ``"c^5"`` (needs ``c``)."""
    s = text.strip().replace("**", "^")
    if "^" in s:
        base_s, exp_s = s.split("^", 1)
        base_s = base_s.strip()
        if base_s == "c":
            if c is None:
                raise ValueError("height 'c^k' needs a value for c")
            base = c
        else:
            base = int(base_s)
        exp = int(exp_s)
        if base < 1 or exp < 0:
            raise ValueError(f"bad height {text!r}")
        return base ** exp
    value = int(s)
    if value < 1:
        raise ValueError(f"bad height {text!r}")
    return value

