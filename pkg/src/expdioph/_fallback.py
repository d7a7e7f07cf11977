"""Interpreted versions of the ``_core`` kernels, same signatures and results."""
import numpy as np


def eq1_solutions(a, b, c, height, limit=0):
    out = []
    cz = 1
    z = 0
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


def system_sieve(cz_mod, modulus, cz_small, big, a_lo, a_hi):
    if a_hi < a_lo:
        return []
    a = np.arange(a_lo, a_hi + 1, dtype=np.uint64)
    m = np.uint64(modulus)
    am = a % m
    t = (np.uint64(cz_mod) + m - (am * am) % m) % m
    keep = (am + (t * t) % m) % m == 0
    if not big:
        keep |= (np.uint64(cz_small) - a * a) < np.uint64(65536)
    return [int(v) for v in a[keep]]
