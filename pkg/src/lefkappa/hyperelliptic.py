"""Endo's signature formula for hyperelliptic (g, 1) Lefschetz fibrations.

Vanishing cycles come as ``a`` nonseparating ones plus ``s[j-1]`` separating
ones that cut off a genus-``j`` piece, ``1 <= j <= g // 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import KSquaredNotPositive, NonIntegerSignature, WrongBase
from .invariants import KodairaDim, KodairaVerdict, Provenance, euler_characteristic

# Base genera for which the signature formula is enabled. Extending this is a
# deliberate act; the formula is only known to us over a torus base.
ENDO_BASE_GENERA = frozenset({1})


@dataclass(frozen=True)
class FibrationData:
    g: int
    h: int
    a: int
    s: tuple[int, ...] = ()
    hyperelliptic: bool = False
    spin: bool = False
    complex: bool = False
    minimal: bool = True

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(int(x) for x in self.s))
        if self.g < 0 or self.h < 0:
            raise ValueError("genera must be nonnegative")
        if self.a < 0 or any(x < 0 for x in self.s):
            raise ValueError("vanishing cycle counts must be nonnegative")
        if len(self.s) != self.g // 2:
            raise ValueError(
                f"s must have exactly g//2 = {self.g // 2} entries, got {len(self.s)}"
            )

    @property
    def n(self) -> int:
        return self.a + sum(self.s)

    @property
    def chi(self) -> int:
        return euler_characteristic(self.g, self.h, self.n)


def nonseparating_coefficient(g: int) -> Fraction:
    return Fraction(-(g + 1), 2 * g + 1)


def separating_coefficient(g: int, j: int) -> Fraction:
    return Fraction(4 * j * (g - j), 2 * g + 1) - 1


def k_squared_nonseparating_coefficient(g: int) -> Fraction:
    return Fraction(g - 1, 2 * g + 1)


def k_squared_separating_coefficient(g: int, j: int) -> Fraction:
    # printed form; equals (12jg - 12j^2 - 2g - 1) / (2g + 1)
    return Fraction(6 * j * (g - 2 * j) + 2 * g * (j - 1) + (4 * g * j - 1), 2 * g + 1)


def _check_domain(d: FibrationData, bases=ENDO_BASE_GENERA) -> None:
    if d.g < 2:
        raise ValueError(f"signature formula needs fiber genus >= 2, got {d.g}")
    if d.h not in bases:
        raise WrongBase(f"signature formula is stated for base genus 1, got h={d.h}")
    if not d.hyperelliptic:
        raise ValueError("fibration is not flagged hyperelliptic")


def endo_signature_exact(d: FibrationData, bases=ENDO_BASE_GENERA) -> Fraction:
    """The exact rational value of the signature sum, integral or not."""
    _check_domain(d, bases)
    total = nonseparating_coefficient(d.g) * d.a
    for j, count in enumerate(d.s, start=1):
        total += separating_coefficient(d.g, j) * count
    return total


def endo_signature(d: FibrationData, bases=ENDO_BASE_GENERA) -> int:
    value = endo_signature_exact(d, bases)
    if value.denominator != 1:
        raise NonIntegerSignature(value)
    return value.numerator


def hyperelliptic_k_squared(d: FibrationData, bases=ENDO_BASE_GENERA) -> int:
    """K^2 from the expanded closed form (not via 3*sigma + 2*chi)."""
    endo_signature(d, bases)
    total = k_squared_nonseparating_coefficient(d.g) * d.a
    for j, count in enumerate(d.s, start=1):
        total += k_squared_separating_coefficient(d.g, j) * count
    if total.denominator != 1:
        # cannot happen when the signature is integral; kept loud on purpose
        raise NonIntegerSignature(total)
    return total.numerator


def prop_he_verdict(d: FibrationData) -> KodairaVerdict:
    if d.n <= 0:
        raise ValueError("hyperelliptic verdict needs at least one singular fiber")
    sigma = endo_signature(d)
    k2 = hyperelliptic_k_squared(d)
    if k2 <= 0:
        raise KSquaredNotPositive(
            f"internal consistency failure: K^2={k2} <= 0 for hyperelliptic data {d}"
        )
    return KodairaVerdict(
        KodairaDim.TWO,
        Provenance.obstruction("hyperelliptic-Endo"),
        (f"sigma={sigma}", f"K^2={k2}"),
    )


def xiao_slope_holds(k_squared: int, chi_h: Fraction, g: int, h: int) -> bool:
    """Slope inequality K^2 - 8(g-1)(h-1) >= (4 - 4/g)(chi_h - (h-1)(g-1)), g >= 2."""
    if g < 2:
        raise ValueError("slope inequality needs g >= 2")
    lhs = Fraction(k_squared - 8 * (g - 1) * (h - 1))
    rhs = (4 - Fraction(4, g)) * (Fraction(chi_h) - (h - 1) * (g - 1))
    return lhs >= rhs


def signature_lower_bound(g: int, chi: int) -> Fraction:
    """Signature lower bound -(g+1)/(2g+1) * chi for holomorphic (g, 1) fibrations."""
    return Fraction(-(g + 1), 2 * g + 1) * chi
