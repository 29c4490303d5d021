#!/usr/bin/env python3
"""One-time extended-precision calibration of the completeness-probe floors.

Recomputes, with mpmath at 30 significant digits and a direct digit-sum
transform (no per-block shortcut), the level-6 Q values of the model
spectrum of the N=2, R=3, q=2, p=[1] instance on the standard 25-point
grid, plus the single reference value Q_6(0.5).  The printed constants are
frozen into the test suite; rerun this script only to re-derive them.

Usage: python tools/calibrate_q_reference.py
"""

from __future__ import annotations

import time

from mpmath import mp, mpf, fabs

import speigen as sp

mp.dps = 30

TAIL_TARGET = mpf("1e-22")


def transform_oracle(inst, x: mpf) -> complex:
    """Truncated transform via direct digit sums, tail bound < TAIL_TARGET."""
    m_scale = inst.M
    max_d = inst.D[-1]
    tail = 2 * mp.pi * max_d * fabs(x) / (m_scale - 1)
    acc = mp.mpc(1)
    y = x
    while tail >= TAIL_TARGET:
        y = y / m_scale
        z = mp.expjpi(2 * y)  # e^(2 pi i y)
        total = mp.mpc(0)
        power = mp.mpc(1)
        prev = 0
        for d in inst.D:
            power *= z ** (d - prev)
            prev = d
            total += power
        acc *= total / len(inst.D)
        tail = tail / m_scale
    return acc


def q_oracle(inst, elements, xi: mpf) -> mpf:
    total = mpf(0)
    for lam in elements:
        value = transform_oracle(inst, xi - lam)
        total += (value.real**2 + value.imag**2)
    return total


def main() -> None:
    inst = sp.build_instance(2, 3, 2, [1])
    level6 = sp.spectrum_level(inst, 1, 6).elements
    grid = [mpf(i) / 25 for i in range(25)]

    print(f"# instance {inst.describe()}, level-6 truncation, {len(level6)} elements")
    t0 = time.perf_counter()
    values = []
    for i, xi in enumerate(grid):
        q = q_oracle(inst, level6, xi)
        values.append(q)
        fast = sp.q_function(inst, level6, float(xi), tol=1e-12)
        print(f"xi = {i:>2}/25: Q6 = {mp.nstr(q, 20)}   (fast path {fast!r}, diff {mp.nstr(fabs(q - fast), 3)})")
    elapsed = time.perf_counter() - t0
    minimum = min(values)
    q_half = q_oracle(inst, level6, mpf(1) / 2)

    print(f"# oracle wall time: {elapsed:.1f}s")
    print()
    print("# ---- frozen constants for the test suite ----")
    print(f"Q6_GRID_MIN_ORACLE = {mp.nstr(minimum, 18)}")
    print(f"Q6_FLOOR = {mp.nstr(minimum - mpf('1e-9'), 12)}   # oracle min minus safety margin")
    print(f"Q6_AT_HALF_ORACLE = {mp.nstr(q_half, 18)}")


if __name__ == "__main__":
    main()
