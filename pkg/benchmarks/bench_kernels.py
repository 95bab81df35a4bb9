"""Compare the compiled and pure-Python kernels on fixed workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each workload runs on both backends; node counts must agree, and the
reported time is the best of ``--repeat`` runs.
"""

import argparse
import random
import time
from array import array

from colorpaths import kernels
from colorpaths.search import _triple_masks


def dp_workload(mod):
    rng = random.Random(0)
    N = 60
    flat = array("i", [rng.randint(1, 3) for _ in range(N * (N - 1) // 2)])
    for _ in range(50):
        mod.color_dp(flat, N, 3, False)
    return None


def f_workload(mod):
    # refuting f(7) <= 3 is a full search at this target
    _, nodes, _ = mod.f_search(7, 4, [], 10**12, 0.0)
    return nodes


def chain_workload(mod):
    verts, succ, families = _triple_masks(4)
    full = (1 << len(verts)) - 1
    _, nodes, _ = mod.max_chain(succ, families, [], full, 0, 10**12, 0.0)
    return nodes


WORKLOADS = [
    ("avoidance DP, N=60 x50", dp_workload),
    ("f decision, N=7 target 4", f_workload),
    ("triple chain, n=4", chain_workload),
]


def best_time(fn, mod, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(mod)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    mods = kernels.backends()
    if "cython" not in mods:
        print("compiled extension not built; timing the pure backend only")
    print(f"{'workload':30s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn in WORKLOADS:
        tp, np_ = best_time(fn, mods["python"], args.repeat)
        if "cython" in mods:
            tc, nc = best_time(fn, mods["cython"], args.repeat)
            if np_ != nc:
                raise SystemExit(f"{name}: node counts differ ({np_} vs {nc})")
            print(f"{name:30s} {tp:9.3f}s {tc:9.3f}s {tp / tc:7.1f}x")
        else:
            print(f"{name:30s} {tp:9.3f}s {'-':>10s}")


if __name__ == "__main__":
    main()
