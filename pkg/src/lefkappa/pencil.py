"""Topological Lefschetz pencils described by pairings.

A pencil is recorded as (k, A, B) with A = h.h, B the singular points and
``k_dot_h`` the pairing K(X, f).h; no cohomology ring is modeled.

The singular-point count comes in two conventions. ``PAPER_LITERAL`` is
``B = chi + A + 2 K.h`` as usually quoted; ``EULER_CONSISTENT`` is
``B = chi + 3A + 2 K.h``, the only value compatible with the Euler
characteristic of the blow-up at the A base points (a genus-k fibration over
the sphere with B singular fibers). The literal form already fails on the
pencil of lines in the projective plane.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DivisibilityViolation,
    InconsistentPairing,
    NegativeCount,
    NegativeGenus,
    ParityViolation,
)
from .invariants import KodairaDim


class ConventionMode(enum.Enum):
    PAPER_LITERAL = "paper-literal"
    EULER_CONSISTENT = "euler"

    def __str__(self) -> str:
        return self.value


DEFAULT_MODE = ConventionMode.EULER_CONSISTENT


@dataclass(frozen=True)
class PencilData:
    k: int
    A: int
    B: int
    chi: int
    sigma: int
    k_dot_h: int

    def __post_init__(self):
        if self.A < 1:
            raise ValueError(f"a pencil has at least one base point, got A={self.A}")
        if self.B < 0:
            raise ValueError(f"B must be nonnegative, got {self.B}")
        if (self.A + self.k_dot_h) % 2:
            raise ParityViolation(f"A + K.h = {self.A + self.k_dot_h} is odd")

    @classmethod
    def from_genus(cls, k: int, A: int, B: int, chi: int, sigma: int) -> PencilData:
        return cls(k, A, B, chi, sigma, canonical_dot_h(k, A))


@dataclass(frozen=True)
class SingularCount:
    value: int
    mode: ConventionMode


def pencil_genus(A: int, k_dot_h: int) -> int:
    if A < 1:
        raise ValueError(f"A must be >= 1, got {A}")
    twice = A + k_dot_h + 2
    if twice % 2:
        raise ParityViolation(f"A + K.h = {A + k_dot_h} is odd")
    if twice < 0:
        raise NegativeGenus(f"fiber genus {Fraction(twice, 2)} is negative")
    return twice // 2


def canonical_dot_h(k: int, A: int) -> int:
    return 2 * k - 2 - A


def singular_fiber_count(
    chi: int, A: int, k_dot_h: int, mode: ConventionMode = DEFAULT_MODE
) -> SingularCount:
    if A < 1:
        raise ValueError(f"A must be >= 1, got {A}")
    if mode is ConventionMode.PAPER_LITERAL:
        value = chi + A + 2 * k_dot_h
    else:
        value = chi + 3 * A + 2 * k_dot_h
    if value < 0:
        raise NegativeCount(value, mode.value)
    return SingularCount(value, mode)


def blowup_euler_holds(chi: int, A: int, k: int, B: int) -> bool:
    """chi(X # A CP2-bar) = chi(fiber) * chi(S^2) + B."""
    return chi + A == (2 - 2 * k) * 2 + B


def pencil_consistency(p: PencilData) -> bool:
    try:
        k = pencil_genus(p.A, p.k_dot_h)
    except (ParityViolation, NegativeGenus):
        return False
    return blowup_euler_holds(p.chi, p.A, k, p.B)


def kappa_pencil(k: int, A: int, chi: int, sigma: int) -> KodairaDim:
    """Combinatorial Kodaira dimension from the signs of 2k-2-A and 3 sigma + 2 chi."""
    u = 2 * k - 2 - A
    v = 3 * sigma + 2 * chi
    if u < 0 or v < 0:
        return KodairaDim.MINUS_INFINITY
    if u == 0:
        if v > 0:
            raise InconsistentPairing(f"K.h = 0 with K^2 = {v} > 0 is impossible")
        return KodairaDim.ZERO
    return KodairaDim.ONE if v == 0 else KodairaDim.TWO


def fibration_to_pencil_genus(
    g: int,
    h: int,
    B_prime: int,
    A: int,
    B: int,
    mode: ConventionMode = DEFAULT_MODE,
) -> int:
    """Genus of a pencil on the total space of a (g, h, B') Lefschetz fibration."""
    if A < 1:
        raise ValueError(f"A must be >= 1, got {A}")
    if min(g, h, B_prime, B) < 0:
        raise ValueError("genera and counts must be nonnegative")
    chi = (2 - 2 * g) * (2 - 2 * h) + B_prime
    if mode is ConventionMode.PAPER_LITERAL:
        numerator = A + B - B_prime
        value = Fraction(numerator, 4) - g * h + g + h
    else:
        numerator = B - A - chi + 4
        value = Fraction(numerator, 4)
    if value.denominator != 1:
        raise DivisibilityViolation("pencil genus", value)
    if value < 0:
        raise NegativeGenus(f"pencil genus {value} is negative")
    return value.numerator


def fibration_from_pencil(k: int, B: int) -> tuple[int, int, int]:
    """The (k, 0, B) Lefschetz fibration on the blow-up at the base points."""
    return (k, 0, B)


def kappa0_pencil_constraints(k: int, A: int, B: int, chi: int) -> list[str]:
    """Necessary conditions on a pencil of a minimal symplectic manifold with kappa = 0."""
    violations = []
    if A % 2:
        violations.append("A odd")
    if B % 2:
        violations.append("B odd")
    if k < 2:
        violations.append("k < 2")
    if chi not in (0, 12, 24):
        violations.append("chi not in {0, 12, 24}")
    return violations
