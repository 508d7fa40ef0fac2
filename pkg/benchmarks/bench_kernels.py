"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from stiefeldeg import kernels
from stiefeldeg.degree import count_nilp_bruteforce, path_config
from stiefeldeg.gt import count_invariants

CHAIN_CASES = [
    ("GT count SO(7)>SO(3), 60*(3,2,1)", (7, (180, 120, 60), 3)),
    ("GT count SO(6)>SO(2), 60*(3,2,1)", (6, (180, 120, 60), 2)),
    ("GT count SO(8)>SO(1), (8,6,4,2)", (8, (8, 6, 4, 2), 1)),
]
NILP_CASES = [(5, 6), (5, 7), (6, 8)]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.HAVE_COMPILED:
        print("compiled kernels not built; only the Python backend is available")
    cases = [(name, lambda b, a=a: count_invariants(*a, backend=b)) for name, a in CHAIN_CASES]
    cases += [(f"path tuples St{kn}", lambda b, kn=kn: count_nilp_bruteforce(path_config(*kn), backend=b))
              for kn in NILP_CASES]
    print(f"{'case':40} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, fn in cases:
        tp, vp = best_of(lambda: fn("python"), args.repeat)
        if kernels.HAVE_COMPILED:
            tc, vc = best_of(lambda: fn("compiled"), args.repeat)
            assert vp == vc, (name, vp, vc)
            print(f"{name:40} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")
        else:
            print(f"{name:40} {tp:10.4f} {'-':>11} {'-':>8}")


if __name__ == "__main__":
    main()
