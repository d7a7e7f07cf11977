"""Time the compiled kernels against the interpreted fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload is run on every available backend and the results are checked
for equality before timings are reported.
"""
import argparse
import time

from expdioph import kernels
from expdioph.arith import gcd
from expdioph.system import brute_force_union


def census(impl, box=30, height=10 ** 12):
    out = []
    for a in range(2, box + 1):
        for b in range(2, box + 1):
            if gcd(a, b) != 1:
                continue
            for c in range(2, box + 1):
                if gcd(a, c) == 1 and gcd(b, c) == 1:
                    s = impl.eq1_solutions(a, b, c, height)
                    if len(s) >= 2:
                        out.append((a, b, c, tuple(s)))
    return out


WORKLOADS = {
    "eq1 census a,b,c<=30 H=1e12": lambda name: census(kernels.get_backend(name)),
    "system oracle c<=200 a<=1e4 z<=40": lambda name: brute_force_union(200, backend=name),
}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    names = kernels.available_backends()
    print(f"backends: {names} (default {kernels.BACKEND})")
    for label, fn in WORKLOADS.items():
        best, results = {}, {}
        for name in names:
            times = []
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                results[name] = fn(name)
                times.append(time.perf_counter() - t0)
            best[name] = min(times)
        first = next(iter(results.values()))
        assert all(r == first for r in results.values()), f"backends disagree on {label}"
        cols = "  ".join(f"{n}={best[n]:.3f}s" for n in names)
        speed = ""
        if "compiled" in best:
            speed = f"  speedup x{best['python'] / best['compiled']:.1f}"
        print(f"{label:38s} {cols}{speed}")


if __name__ == "__main__":
    main()
