"""Independent validation of decisions: exact orthogonality and Q probes.

The exact side checks that all pairwise differences of a candidate
orthogonal set lie in the zero set of the transform.  The numeric side
evaluates the completeness functional ``Q(xi) = sum_l |mu_hat(xi - l)|**2``
over nested truncations: for an orthonormal family it is nondecreasing in
the truncation level and bounded by 1 (Bessel), and it tends to 1 exactly
when the family is complete.  Q is corroboration only; certification always
comes from the exact criteria.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .eigen import EigenDecision
from .instance import ProblemInstance
from .measure import fourier_values, zero_set_contains
from .spectra import SpectrumTruncation, spectrum_level

DEFAULT_GRID_SIZE = 25
MONOTONE_SLACK = 1e-12


@dataclass(frozen=True)
class ValidationReport:
    orthogonal: bool
    failing_pair: Optional[tuple[int, int]] = None
    q_samples: tuple[tuple[float, int, float], ...] = ()  # (xi, level, Q_level(xi))
    missing_frequency_check: Optional[tuple[int, bool]] = None
    violations: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        out: dict = {"orthogonal": self.orthogonal}
        if self.failing_pair is not None:
            out["failing_pair"] = [str(x) for x in self.failing_pair]
        out["q_samples"] = [
            {"xi": xi, "level": level, "q": value} for xi, level, value in self.q_samples
        ]
        if self.missing_frequency_check is not None:
            d, confirmed = self.missing_frequency_check
            out["missing_frequency_check"] = {"d": str(d), "confirmed": confirmed}
        out["violations"] = list(self.violations)
        return out


def check_orthogonal_set(inst: ProblemInstance, elements: Sequence[int]) -> ValidationReport:
    """Exact pairwise orthogonality of the exponentials at the given frequencies.

    Distinct difference values are tested once; on failure the first failing
    pair in ascending (smaller, larger) order is reported.
    """
    ordered = sorted(elements)
    if len(set(ordered)) != len(ordered):
        raise ValueError("elements must be duplicate-free")
    diffs = {b - a for i, a in enumerate(ordered) for b in ordered[i + 1 :]}
    bad = {d for d in diffs if not zero_set_contains(inst, d)}
    if not bad:
        return ValidationReport(orthogonal=True)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if b - a in bad:
                return ValidationReport(orthogonal=False, failing_pair=(a, b))
    raise AssertionError("failing difference without failing pair")


def q_function(inst: ProblemInstance, elements: Sequence[int], xi: float, tol: float = 1e-9) -> float:
    """Completeness functional over a finite frequency list at the point xi."""
    xs = np.array([float(xi) - float(lam) for lam in elements], dtype=np.float64)
    values = fourier_values(inst, xs, tol=tol)
    return float(np.sum(np.abs(values) ** 2))


def completeness_probe(
    inst: ProblemInstance,
    trunc: SpectrumTruncation,
    grid: Sequence[float],
    tol: float = 1e-9,
    decision: Optional[EigenDecision] = None,
) -> ValidationReport:
    """Q over all levels up to the truncation's, at every grid point.

    Records monotonicity or Bessel violations instead of raising.  When the
    associated decision carries a missing frequency, its Q is additionally
    confirmed to vanish exactly, term by term, through zero-set membership.
    """
    if not grid:
        raise ValueError("grid must be nonempty")
    levels = list(range(1, trunc.level + 1))
    per_level = {
        k: spectrum_level(inst, trunc.t, k, trunc.omega).elements for k in levels
    }
    samples: list[tuple[float, int, float]] = []
    violations: list[str] = []
    for xi in grid:
        previous = None
        for k in levels:
            value = q_function(inst, per_level[k], xi, tol=tol)
            samples.append((float(xi), k, value))
            if value > 1.0 + tol:
                violations.append(f"Q_{k}({xi}) = {value} exceeds Bessel bound 1 + {tol}")
            if previous is not None and value < previous - MONOTONE_SLACK:
                violations.append(f"Q_{k}({xi}) = {value} decreased below Q_{k - 1}({xi}) = {previous}")
            previous = value

    missing_check = None
    if decision is not None and decision.missing_frequency is not None:
        d = decision.missing_frequency
        confirmed = all(zero_set_contains(inst, d - lam) for lam in trunc.elements)
        missing_check = (d, confirmed)
        if not confirmed:
            violations.append(f"missing frequency {d} fails exact orthogonality against the truncation")

    return ValidationReport(
        orthogonal=True,
        q_samples=tuple(samples),
        missing_frequency_check=missing_check,
        violations=tuple(violations),
    )


def default_grid(decision: Optional[EigenDecision] = None, size: int = DEFAULT_GRID_SIZE) -> list[float]:
    """Equispaced points in [0, 1), plus the missing frequency when present."""
    grid = [i / size for i in range(size)]
    if decision is not None and decision.missing_frequency is not None:
        grid.append(float(decision.missing_frequency))
    return grid
