#!/usr/bin/env python3
"""Compare the compiled closure kernels against the pure-Python fallback.

Runs the full closed-set walk and the brute fixed-point scan on a few
mid-sized polygon specs with both backends and prints a timing table.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import os
import time

# force-reimport guard: choose backend per call, so just toggling the env
# var between timed sections is enough.
from ncotor import kernels
from ncotor.closure import closed_sets
from ncotor.polygon import PolygonSpec, n_diagonals

WALK_SPECS = [(1, 4), (2, 3), (3, 2), (2, 4)]
BRUTE_SPECS = [(1, 3), (2, 2), (3, 1), (2, 3)]


def time_walk(spec: PolygonSpec, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        count = sum(1 for _ in closed_sets(spec))
        best = min(best, time.perf_counter() - t0)
    return best, count


def time_brute(spec: PolygonSpec, repeat: int) -> float:
    diags = n_diagonals(spec)
    avec = [d.a for d in diags]
    bvec = [d.b for d in diags]
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fixed = kernels.brute_fixed_points(avec, bvec)
        best = min(best, time.perf_counter() - t0)
    return best, len(fixed)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not kernels.HAVE_COMPILED:
        print("compiled backend unavailable; showing pure numbers only")

    rows = []
    for label, specs, fn in [("closed-set walk", WALK_SPECS, time_walk),
                             ("brute fixed-point scan", BRUTE_SPECS, time_brute)]:
        for n, m in specs:
            spec = PolygonSpec(n, m)
            d = len(n_diagonals(spec))
            os.environ["NCOTOR_PURE"] = "1"
            pure_t, pure_count = fn(spec, args.repeat)
            os.environ.pop("NCOTOR_PURE", None)
            fast_t, fast_count = fn(spec, args.repeat)
            assert pure_count == fast_count, (label, n, m)
            speedup = pure_t / fast_t if fast_t > 0 else float("inf")
            rows.append((label, f"spec({n},{m})", d, fast_count,
                         pure_t * 1e3, fast_t * 1e3, speedup))

    header = f"{'benchmark':<24}{'spec':<12}{'d':>4}{'results':>9}{'pure ms':>10}{'fast ms':>10}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, name, d, count, pure_ms, fast_ms, speedup in rows:
        print(f"{label:<24}{name:<12}{d:>4}{count:>9}{pure_ms:>10.2f}{fast_ms:>10.2f}{speedup:>8.1f}x")


if __name__ == "__main__":
    main()
