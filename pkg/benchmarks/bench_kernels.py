#!/usr/bin/env python3
"""Benchmark the numba and numpy lanes of the Fourier product kernels.

The workload mirrors the completeness probes: transform values over the
frequency batch of a level-k truncation shifted across a grid.  Run as

    python benchmarks/bench_kernels.py [--level 6] [--grid 25] [--repeat 5]

Lane agreement is verified before timing.  The active-lane selection of the
package itself is not changed here; both lanes are invoked explicitly.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from speigen import _kernels, build_instance, spectrum_level
from speigen._kernels import fourier_products_numpy
from speigen.measure import _numeric_params


def build_workload(level: int, grid_size: int) -> tuple:
    inst = build_instance(2, 3, 2, [1])
    elements = np.array(spectrum_level(inst, 1, level).elements, dtype=np.float64)
    grid = np.arange(grid_size, dtype=np.float64) / grid_size
    xs = (grid[:, None] - elements[None, :]).ravel()
    return inst, xs


def time_lane(fn, xs, params, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(xs, *params)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--level", type=int, default=6, help="truncation level of the frequency batch")
    parser.add_argument("--grid", type=int, default=25, help="number of grid shifts")
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions (best is reported)")
    parser.add_argument("--tol", type=float, default=1e-12)
    args = parser.parse_args()

    inst, xs = build_workload(args.level, args.grid)
    n_base, scales, m_scale, max_digit = _numeric_params(inst)
    params = (scales, n_base, m_scale, max_digit, args.tol)

    print(f"workload: {xs.size} frequencies (level {args.level} x {args.grid} grid points)")
    reference = fourier_products_numpy(xs, *params)
    print(f"numpy lane available: yes; numba lane available: {_kernels.HAVE_NUMBA}")

    numpy_time = time_lane(fourier_products_numpy, xs, params, args.repeat)
    print(f"numpy lane: {numpy_time * 1e3:9.2f} ms  ({xs.size / numpy_time / 1e6:.2f} M freq/s)")

    if _kernels.HAVE_NUMBA:
        from speigen._kernels import fourier_products_jit

        fourier_products_jit(xs[:8], *params)  # compile outside the timed region
        jit_values = fourier_products_jit(xs, *params)
        worst = float(np.max(np.abs(jit_values - reference)))
        print(f"lane agreement: max |numba - numpy| = {worst:.3e}")
        assert worst <= 5e-12
        numba_time = time_lane(fourier_products_jit, xs, params, args.repeat)
        print(f"numba lane: {numba_time * 1e3:9.2f} ms  ({xs.size / numba_time / 1e6:.2f} M freq/s)")
        print(f"speedup (numpy / numba): {numpy_time / numba_time:.2f}x")
    else:
        print("numba lane unavailable (not importable or disabled via SPEIGEN_NO_NUMBA)")


if __name__ == "__main__":
    main()
