"""Compare the compiled bit-twiddling kernels against the pure-Python fallback.

Run:  python3 benchmarks/bench_kernels.py [repeats]

Times the hot paths on representative inputs and prints one line per kernel
with both timings and the speedup factor.
"""

import sys
import time

from matrofan import _purekernels as pure
from matrofan import constructions as cs
from matrofan import kernels
from matrofan.core import flats_by_rank

try:
    from matrofan import _fastkernels as fast
except ImportError:
    fast = None


def clock(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    if fast is None:
        print("compiled extension not available; nothing to compare")
        return 1

    vamos = cs.named("vamos")
    pappus = cs.named("pappus")
    v_bases = list(vamos.bases)
    p_bases = list(pappus.bases)
    v_table = kernels.rank_table(8, v_bases)
    p_table = kernels.rank_table(9, p_bases)
    v_flats = list(vamos.flats())

    jobs = [
        ("rank_table n=9", (9, p_bases)),
        ("validate_bases n=9", (9, p_bases)),
        ("rank_size_counts n=9", (9, p_table)),
        ("flats_from_table n=9", (9, p_table)),
        ("canonical_form n=8", (8, v_bases)),
        ("ingleton_scan vamos", (v_flats, v_table)),
    ]
    names = ["rank_table", "validate_bases", "rank_size_counts",
             "flats_from_table", "canonical_form", "ingleton_scan"]

    print(f"{'kernel':<24} {'compiled':>12} {'pure':>12} {'speedup':>9}")
    for (label, args), name in zip(jobs, names):
        tc = clock(getattr(fast, name), args, repeats)
        tp = clock(getattr(pure, name), args, repeats)
        print(f"{label:<24} {tc * 1e3:>10.2f}ms {tp * 1e3:>10.2f}ms {tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
