"""Purely exponential equations a^x + b^y = c^z: solution counting, the known
exceptional triples, and a checked replay of the a^2+b=c^z, a+b^2=c^Z theorem."""
from .arith import Rat, gcd, iroot, is_perfect_power, is_perfect_square, isqrt, pow_of_base
from .exceptional import (
    ExceptionalEntry,
    VerificationError,
    exceptional_set,
    family_solutions,
    in_exceptional_set,
    verify_exceptional,
)
from .kernels import BACKEND
from .scan import ScanConfig, ScanReport, merge_reports, scan_range
from .solver import (
    ExpSolution,
    InvalidTriple,
    Triple,
    count_solutions,
    enumerate_solutions,
    has_multiple_solutions,
)
from .system import (
    ProofError,
    ProofTrace,
    SystemSolution,
    b_from_af,
    brute_force_system,
    candidate_search_f_ge2,
    case_m_eq_2,
    compute_f,
    compute_g,
    discriminant,
    f1_branch,
    gu_squared_terms,
    inequality_holds,
    reject_survivor,
    theorem_certificate,
)

__version__ = "0.1.0"
