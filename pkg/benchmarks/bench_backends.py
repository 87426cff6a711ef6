#!/usr/bin/env python3
"""Benchmark the batch-evaluation kernels: numba vs pure numpy.

Times the hot path of the scans (defining-function and Levi-entry batch
evaluation over many sample points) under both backends.

Usage: python benchmarks/bench_backends.py [--points 200000] [--repeats 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from levilab._kernels_numba import eval_program as numba_kernel
from levilab._kernels_numpy import eval_program as numpy_kernel
from levilab.catalog import thm1_rho, thm2_rho
from levilab.fasteval import ExprProgram


def run_kernel(kernel, prog, Z):
    return kernel(
        prog.coeffs, prog.expos, prog.rad_ptr, prog.rad_idx, prog.rad_s2,
        prog.rad_d2, prog.base_coeffs, prog.base_expos, prog.base_ptr, Z,
    )


def bench(name, expr, n, points, repeats):
    prog = ExprProgram(expr)
    rng = np.random.default_rng(0)
    Z = (rng.normal(size=(points, n)) + 1j * rng.normal(size=(points, n))) * 0.4
    run_kernel(numba_kernel, prog, Z[:16])  # JIT warmup
    rows = []
    for label, kernel in (("numpy", numpy_kernel), ("numba", numba_kernel)):
        best = np.inf
        for _ in range(repeats):
            t0 = time.perf_counter()
            out = run_kernel(kernel, prog, Z)
            best = min(best, time.perf_counter() - t0)
        rows.append((label, best, out))
    drift = np.max(np.abs(rows[0][2] - rows[1][2]))
    speedup = rows[0][1] / rows[1][1]
    print(f"{name:24s} terms={len(expr.terms):3d} "
          f"numpy={rows[0][1] * 1e3:8.2f} ms  numba={rows[1][1] * 1e3:8.2f} ms  "
          f"speedup={speedup:5.2f}x  max|diff|={drift:.2e}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=200_000)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    print(f"batch evaluation over {args.points} points (best of {args.repeats})")
    rho3 = thm1_rho(3)
    phi = thm2_rho()
    bench("circular-domain rho", rho3, 3, args.points, args.repeats)
    bench("slit-quartic phi", phi, 2, args.points, args.repeats)
    # second Levi-type derivative of phi: the densest expression in the scans
    lev = phi.wirtinger(1, "holo").wirtinger(1, "anti")
    bench("phi Levi entry (2,2)", lev, 2, args.points, args.repeats)


if __name__ == "__main__":
    main()
