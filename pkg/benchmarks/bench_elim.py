#!/usr/bin/env python3
"""Benchmark: compiled elimination kernel vs the pure-Python twin.

Three workloads:
  * raw rank calls on synthetic integer matrices of increasing size
    (small entries; larger sizes overflow 64 bits mid-elimination and
    hand off to object arithmetic, which is why the edge fades);
  * catalecticant Hilbert functions for a batch of seeded socles;
  * full betti tables for a batch of seeded socles.

Run from the repository root after `python setup.py build_ext --inplace`:

    python benchmarks/bench_elim.py
"""

import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))


def bench_kernel(fn, nrows, ncols, reps):
    rng = random.Random(7)
    rows = [[rng.randint(-9, 9) for _ in range(ncols)] for _ in range(nrows)]
    best = None
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(reps):
            fn(rows, ncols)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_workloads():
    from soclekit._kernels import BACKEND, fraction_free_rank
    from soclekit.apolarity import hilbert_function, random_socle
    from soclekit.resolution import koszul_betti

    print(f"backend: {BACKEND}")
    for nrows, ncols, reps in [(10, 15, 3000), (20, 30, 500), (40, 60, 100)]:
        dt = bench_kernel(fraction_free_rank, nrows, ncols, reps)
        print(f"rank {nrows}x{ncols} x{reps}: {dt:.3f}s")

    rng = random.Random(11)
    socles = [random_socle(rng, 2, 4) for _ in range(120)]
    t0 = time.perf_counter()
    for g in socles:
        hilbert_function(g)
    print(f"hilbert functions, 120 plane quartics: {time.perf_counter() - t0:.3f}s")

    rng = random.Random(12)
    socles = [random_socle(rng, 3, 4) for _ in range(20)]
    t0 = time.perf_counter()
    for g in socles:
        koszul_betti(g)
    print(f"betti tables, 20 socles at (n, d) = (3, 4): {time.perf_counter() - t0:.3f}s")


def main():
    if os.environ.get("SOCLEKIT_BENCH_CHILD"):
        bench_workloads()
        return
    for env_value, label in (("", "compiled (if built)"), ("1", "pure python")):
        print(f"--- {label} ---", flush=True)
        env = dict(os.environ, SOCLEKIT_BENCH_CHILD="1")
        if env_value:
            env["SOCLEKIT_PURE"] = env_value
        else:
            env.pop("SOCLEKIT_PURE", None)
        subprocess.run([sys.executable, os.path.abspath(__file__)], env=env, check=True)


if __name__ == "__main__":
    main()
