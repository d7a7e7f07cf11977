"""The known triples with two or more solutions, and their verification.

Witness solutions are never tabulated: each entry is re-solved by search
under a height bound, so the table below only lists bases.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

from .solver import ExpSolution, Triple, enumerate_solutions, verify_solution

SPORADIC: Tuple[Tuple[int, int, int], ...] = (
    (3, 5, 2),
    (3, 13, 2),
    (2, 5, 3),
    (2, 7, 3),
    (2, 3, 11),
    (3, 10, 13),
    (2, 3, 35),
    (2, 89, 91),
    (2, 5, 133),
    (2, 3, 259),
    (3, 13, 2200),
    (2, 91, 8283),
)

DEFAULT_HEIGHT_FLOOR = 10 ** 8
DEFAULT_HEIGHT_CAP = 1 << 256


class VerificationError(RuntimeError):
    def __init__(self, triple: Triple, height: int, found: List[ExpSolution]):
        self.triple = triple
        self.height = height
        self.found = found
        super().__init__(
            f"{tuple(triple)}: only {len(found)} solution(s) with c^z <= {height}: {found}"
        )


@dataclass(frozen=True)
class ExceptionalEntry:
    triple: Triple
    kind: str  # "sporadic" or "family"
    r: Optional[int] = None
    witnesses: Tuple[ExpSolution, ...] = field(default=())

    def __post_init__(self):
        if self.kind == "family":
            r = self.r
            if r is None or not valid_family_r(r):
                raise ValueError(f"family index must be 2 or >= 4, got {r}")
            if tuple(self.triple) != family_triple(r):
                raise ValueError(f"{tuple(self.triple)} is not the family member for r={r}")
        elif self.kind == "sporadic":
            if tuple(self.triple) not in SPORADIC:
                raise ValueError(f"{tuple(self.triple)} is not a sporadic exceptional triple")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def verified(self) -> bool:
        return len(self.witnesses) >= 2 and all(verify_solution(self.triple, w) for w in self.witnesses)


def valid_family_r(r: int) -> bool:
    return r == 2 or r >= 4


def family_triple(r: int) -> Tuple[int, int, int]:
    return 2, 2 ** r - 1, 2 ** r + 1


def family_solutions(r: int) -> Tuple[ExpSolution, ExpSolution]:
    """The two solutions (1,1,1) and (r+2,2,2) of the (2, 2^r-1, 2^r+1) family."""
    if not valid_family_r(r):
        raise ValueError(f"family index must be 2 or >= 4, got {r}")
    t = Triple(*family_triple(r))
    sols = (ExpSolution(1, 1, 1), ExpSolution(r + 2, 2, 2))
    for s in sols:
        if not verify_solution(t, s):
            raise AssertionError(f"family identity failed at r={r}: {s}")
    return sols


def in_exceptional_set(a: int, b: int, c: int) -> bool:
    """Membership of (a,b,c) or (b,a,c), family members included for every r."""
    for p, q in ((a, b), (b, a)):
        if (p, q, c) in SPORADIC:
            return True
        if p == 2 and q + 2 == c and q >= 3:
            r = (q + 1).bit_length() - 1
            if q + 1 == 1 << r and valid_family_r(r):
                return True
    return False


def default_height(t: Triple) -> int:
    return max(t.c ** 3, DEFAULT_HEIGHT_FLOOR)


def verify_exceptional(
    e: ExceptionalEntry, height: Optional[int] = None, *, cap: int = DEFAULT_HEIGHT_CAP
) -> ExceptionalEntry:
    """Re-solve ``e.triple`` and return the entry with all found solutions as witnesses.

    With ``height=None`` the search starts at max(c^3, 10^8) and doubles up to
    ``cap`` until two solutions appear. An explicit height is used as given.
    """
    t = e.triple
    if height is None:
        h = default_height(t)
        while True:
            found = enumerate_solutions(t, h)
            if len(found) >= 2 or h >= cap:
                break
            h = min(2 * h, cap)
    else:
        h = height
        found = enumerate_solutions(t, h) if h >= t.c else []
    if len(found) < 2:
        raise VerificationError(t, h, found)
    if e.kind == "family":
        missing = set(family_solutions(e.r)) - set(found)
        if missing and max(t.c ** s.z for s in missing) <= h:
            raise AssertionError(f"search missed family solutions {missing} for r={e.r}")
    return replace(e, witnesses=tuple(found))


def exceptional_set(
    r_max: int, height: Optional[int] = None, *, verify: bool = True
) -> List[ExceptionalEntry]:
    """The 12 sporadic triples followed by family members r = 2, 4, ..., r_max."""
    if r_max < 2:
        raise ValueError(f"r_max must be >= 2, got {r_max}")
    entries = [ExceptionalEntry(Triple(*t), "sporadic") for t in SPORADIC]
    entries += [
        ExceptionalEntry(Triple(*family_triple(r)), "family", r)
        for r in range(2, r_max + 1)
        if valid_family_r(r)
    ]
    if verify:
        entries = [verify_exceptional(e, height) for e in entries]
    return entries
