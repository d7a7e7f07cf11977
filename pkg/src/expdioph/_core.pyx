# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. Mirrors ``_fallback`` function for function."""

ctypedef unsigned long long u64


def eq1_solutions(u64 a, u64 b, u64 c, u64 height, Py_ssize_t limit=0):
    """All (x, y, z) >= 1 with a^x + b^y = c^z <= height; all inputs < 2**63."""
    cdef u64 cz = 1, ax, rem
    cdef int x, y, z = 0
    out = []
    while cz <= height // c:
        cz *= c
        z += 1
        ax = 1
        x = 0
        while ax <= (cz - 1) // a:
            ax *= a
            x += 1
            rem = cz - ax
            y = 0
            while rem % b == 0:
                rem //= b
                y += 1
            if rem == 1 and y >= 1:
                out.append((x, y, z))
                if limit and len(out) >= limit:
                    return out
    return out


def system_sieve(u64 cz_mod, u64 modulus, u64 cz_small, bint big,
                 u64 a_lo, u64 a_hi):
    """Values of a in [a_lo, a_hi] that may make a + (c^z - a^2)^2 a power of c.

    ``modulus`` is a power of c below 2**31 and ``cz_mod`` is c^z mod it.
    When c^z - a^2 >= 2**16 the power must be divisible by ``modulus``;
    smaller b are passed through for an exact check. ``cz_small`` is c^z
    itself and is only read when ``big`` is false.
    """
    cdef u64 a, am, sq, t, n, b
    out = []
    if a_hi < a_lo:
        return out
    am = a_lo % modulus
    sq = (am * am) % modulus
    for a in range(a_lo, a_hi + 1):
        # invariant: am = a mod modulus, sq = a^2 mod modulus
        if big or cz_small - a * a >= 65536:
            t = cz_mod - sq if cz_mod >= sq else cz_mod + modulus - sq
            n = (am + (t * t) % modulus) % modulus
            if n == 0:
                out.append(a)
        else:
            out.append(a)
        sq += 2 * am + 1
        while sq >= modulus:
            sq -= modulus
        am += 1
        if am == modulus:
            am = 0
    return out
