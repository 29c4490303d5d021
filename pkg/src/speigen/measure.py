"""Mask polynomial, Fourier transform, exact zero-set and Hadamard checks.

The measure attached to an instance is the infinite convolution of uniform
digit measures ``M**-k * D``; its transform is ``prod_k m_D(M**-k * xi)``
where ``m_D`` is the normalized exponential sum over ``D``.  Orthogonality
arguments never go through floats: membership in the zero set of the
transform is decided exactly on rationals, and the numeric routines here are
corroboration only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import SizeMismatch, ZeroScaling
from .instance import ProblemInstance

_FLOAT_EXACT_LIMIT = 2**53


def _float_exact(n: int, what: str) -> float:
    if abs(n) > _FLOAT_EXACT_LIMIT:
        raise ValueError(f"{what} = {n} exceeds exact float64 range (2**53)")
    return float(n)


@lru_cache(maxsize=None)
def _numeric_params(inst: ProblemInstance) -> tuple[int, np.ndarray, float, float]:
    """(N, block scales N**p_j, float M, float max(D)) for the numeric kernels."""
    scales = np.array(
        [_float_exact(inst.N**pj, "digit block scale N**p_j") for pj in (0, *inst.p)],
        dtype=np.float64,
    )
    return inst.N, scales, _float_exact(inst.M, "M"), _float_exact(inst.D[-1], "max(D)")


def _digit_factor(y: float, n_base: int) -> complex:
    # One block of the mask: (1/N) * sum_{d<N} e^(2 pi i d y), via the
    # Dirichlet kernel form; the sum is 1-periodic so y is reduced first.
    r = y - round(y)
    if r == 0.0:
        return 1.0 + 0.0j
    num = math.sin(math.pi * n_base * r)
    den = n_base * math.sin(math.pi * r)
    phase = math.pi * (n_base - 1) * r
    return complex(math.cos(phase), math.sin(phase)) * (num / den)


def mask_value(inst: ProblemInstance, x: float) -> complex:
    """Normalized exponential sum of D at x, computed block by block.

    Equals the direct sum ``(1/#D) * sum_{d in D} e^(2 pi i d x)`` because D
    splits into independent digit blocks; the product form costs ``s + 1``
    geometric sums instead of ``#D`` exponentials.
    """
    n_base, scales, _, _ = _numeric_params(inst)
    x = float(x)
    acc = 1.0 + 0.0j
    for scale in scales:
        acc *= _digit_factor(x * scale, n_base)
    return acc


def fourier_value(inst: ProblemInstance, xi: float, tol: float = 1e-12) -> complex:
    """Transform of the measure at xi, truncated once the tail bound drops below tol.

    The factor at level k differs from 1 by at most ``2 pi max(D) |xi| M**-k``,
    so the product over the discarded levels differs from 1 by at most
    ``tol * e``; the returned value carries that absolute error guarantee.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n_base, scales, m_scale, max_digit = _numeric_params(inst)
    x = float(xi)
    tail = 2.0 * math.pi * max_digit * abs(x) / (m_scale - 1.0)
    acc = 1.0 + 0.0j
    y = x
    while tail >= tol:
        y /= m_scale
        for scale in scales:
            acc *= _digit_factor(y * scale, n_base)
        tail /= m_scale
    return acc


def fourier_values(inst: ProblemInstance, xs, tol: float = 1e-12) -> np.ndarray:
    """Vectorized :func:`fourier_value` over a batch of frequencies."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    from . import _kernels

    n_base, scales, m_scale, max_digit = _numeric_params(inst)
    return _kernels.fourier_products(xs, scales, n_base, m_scale, max_digit, tol)


# --------------------------------------------------------------------------
# Exact zero-set membership
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ZeroSetWitness:
    """Decomposition xi = c * M**k * N**e * l with N not dividing l.

    ``j`` indexes the block exponent ``e = p_s - p_j`` in
    ``ProblemInstance.exponents``; the decomposition is unique because the
    exponents are distinct residues below q and gcd(R, N) = 1.
    """

    k: int
    j: int
    l: int


def nadic_split(n: int, base: int) -> tuple[int, int]:
    """Largest v with base**v dividing n, plus the cofactor n // base**v (n != 0)."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    v = 0
    while n % base == 0:
        n //= base
        v += 1
    return v, n


def _exact_ratio(xi, c: int) -> int | None:
    """xi / c when that is an integer, else None; floats are rejected."""
    if isinstance(xi, bool):
        raise TypeError("frequency must be an exact integer or Fraction")
    if isinstance(xi, int):
        return xi // c if xi % c == 0 else None
    if isinstance(xi, Fraction):
        ratio = xi / c
        return int(ratio) if ratio.denominator == 1 else None
    raise TypeError(f"frequency must be an exact integer or Fraction, not {type(xi).__name__}")


def zero_set_decompose(inst: ProblemInstance, xi) -> ZeroSetWitness | None:
    """Exact witness that xi lies in the zero set of the transform, or None.

    The zero set is ``c * union_k M**k { N**(p_s - p_j) * l : N does not
    divide l }``.  Given ``zeta = xi / c`` (must be a nonzero integer), its
    N-adic valuation v pins the only admissible block exponent ``e = v mod q``
    and level ``k = (v - e) / q``; membership then reduces to ``R**k``
    dividing the N-free part of zeta.
    """
    zeta = _exact_ratio(xi, inst.c)
    if not zeta:
        return None
    sign = 1 if zeta > 0 else -1
    v, unit = nadic_split(abs(zeta), inst.N)
    e_target = v % inst.q
    try:
        j = inst.exponents.index(e_target)
    except ValueError:
        return None
    k = (v - e_target) // inst.q
    r_power = inst.R**k
    if unit % r_power:
        return None
    return ZeroSetWitness(k=k, j=j, l=sign * (unit // r_power))


def zero_set_contains(inst: ProblemInstance, xi) -> bool:
    """Exact membership of the rational xi in the zero set of the transform."""
    return zero_set_decompose(inst, xi) is not None


# --------------------------------------------------------------------------
# Hadamard pair checks
# --------------------------------------------------------------------------

def hadamard_check_numeric(b: int, Dset, Cset, tol: float = 1e-9) -> bool:
    """Unitarity of H = (1/sqrt(n)) [e^(2 pi i d c / b)] up to tol in max norm.

    Phases are reduced exactly (``d*c mod b``) before float conversion, so
    huge digit products lose no precision.
    """
    Dset = list(Dset)
    Cset = list(Cset)
    if len(Dset) != len(Cset):
        raise SizeMismatch(f"digit sets differ in size: {len(Dset)} vs {len(Cset)}")
    n = len(Dset)
    if n < 2:
        raise ValueError("Hadamard pair needs at least 2 digits")
    if b < 2:
        raise ValueError("modulus b must be at least 2")
    _float_exact(b, "modulus b")
    phases = np.array([[(d * c) % b for c in Cset] for d in Dset], dtype=np.float64) / float(b)
    H = np.exp(2j * math.pi * phases) / math.sqrt(n)
    gram = H.conj().T @ H
    return bool(np.max(np.abs(gram - np.eye(n))) <= tol)


@lru_cache(maxsize=None)
def _companion_positive_diffs(inst: ProblemInstance) -> tuple[int, ...]:
    diffs = {b1 - b2 for b1 in inst.B for b2 in inst.B if b1 > b2}
    return tuple(sorted(diffs))


def hadamard_check_exact(inst: ProblemInstance, t: int) -> bool:
    """Exact compatibility of the scaled frequency digits t*L with M**-1 * D.

    Every pairwise difference of distinct elements of ``t*L`` equals
    ``c * t * (b - b')`` for distinct companion digits; it lies in the level-0
    slice of the zero set exactly when the N-adic valuation of ``t*(b - b')``
    is one of the block exponents.  No tolerances are involved.
    """
    if t == 0:
        raise ZeroScaling("scaling t must be nonzero")
    t = abs(t)
    allowed = set(inst.exponents)
    for diff in _companion_positive_diffs(inst):
        v, _ = nadic_split(t * diff, inst.N)
        if v not in allowed:
            return False
    return True
