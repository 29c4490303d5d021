"""Finite truncations of the model spectrum, its scalings and sign twists.

Level-k truncations enumerate ``t * sum_{j<=k} l_j w_j M**(j-1)`` over all
digit choices ``l_j in L``, where ``w`` is an optional periodic sign word
(all ones when absent).  Digit expansions in base M are unique, so every
truncation has exactly ``(#L)**k`` elements; the enumeration asserts this
rather than assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceeded, ZeroScaling
from .instance import ProblemInstance

DEFAULT_ELEMENT_BUDGET = 10**6


@dataclass(frozen=True)
class SignWord:
    """Periodic word of signs; ``pattern`` repeats forever."""

    pattern: tuple[int, ...]

    def __post_init__(self):
        if len(self.pattern) < 1:
            raise ValueError("sign word needs period at least 1")
        if any(entry not in (-1, 1) for entry in self.pattern):
            raise ValueError("sign word entries must be -1 or +1")
        object.__setattr__(self, "pattern", tuple(self.pattern))

    @property
    def r(self) -> int:
        return len(self.pattern)

    def sign_at(self, j: int) -> int:
        """Sign at 1-based position j of the infinite word."""
        return self.pattern[(j - 1) % len(self.pattern)]

    @classmethod
    def all_ones(cls, r: int) -> "SignWord":
        return cls((1,) * r)

    @classmethod
    def from_bits(cls, r: int, bits: int) -> "SignWord":
        """Pattern number ``bits`` of period r: binary MSB-first, bit 1 -> -1."""
        if not 0 <= bits < 2**r:
            raise ValueError("bits out of range for period r")
        return cls(tuple(-1 if (bits >> (r - 1 - i)) & 1 else 1 for i in range(r)))

    @classmethod
    def parse(cls, text: str) -> "SignWord":
        return cls(tuple(int(tok) for tok in text.split(",") if tok.strip()))


@dataclass(frozen=True)
class SpectrumTruncation:
    instance: ProblemInstance
    t: int
    omega: Optional[SignWord]
    level: int
    elements: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "t": str(self.t),
            "omega": list(self.omega.pattern) if self.omega else None,
            "level": self.level,
            "elements": [str(x) for x in self.elements],
        }


def _signed_sums(inst: ProblemInstance, k: int, omega: Optional[SignWord]) -> list[int]:
    sums = [0]
    weight = 1
    for j in range(1, k + 1):
        sign = omega.sign_at(j) if omega else 1
        step = sign * weight
        sums = [x + step * l for x in sums for l in inst.L]
        weight *= inst.M
    return sums


def spectrum_level(
    inst: ProblemInstance,
    t: int,
    k: int,
    omega: Optional[SignWord] = None,
    element_budget: int = DEFAULT_ELEMENT_BUDGET,
) -> SpectrumTruncation:
    """Exact level-k slice of the (optionally sign-twisted) scaled spectrum."""
    if t == 0:
        raise ZeroScaling("scaling t must be nonzero")
    if k < 1:
        raise ValueError("level k must be at least 1")
    expected = len(inst.L) ** k
    if expected > element_budget:
        raise BudgetExceeded("spectrum truncation elements", expected, element_budget)
    sums = _signed_sums(inst, k, omega)
    if len(set(sums)) != expected:
        raise AssertionError("digit expansion collision: truncation is not injective")
    elements = tuple(sorted(t * x for x in sums))
    return SpectrumTruncation(instance=inst, t=t, omega=omega, level=k, elements=elements)


def block_digit_set(
    inst: ProblemInstance,
    omega: SignWord,
    t: int,
    element_budget: int = DEFAULT_ELEMENT_BUDGET,
) -> tuple[int, ...]:
    """Scaled block digits t * { sum_{k<=r} l_k w_k M**(k-1) } for one period of omega."""
    return spectrum_level(inst, t, omega.r, omega, element_budget=element_budget).elements
