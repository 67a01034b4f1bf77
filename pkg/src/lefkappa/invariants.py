"""Exact arithmetic helpers, Kodaira dimension values and basic 4-manifold invariants.

All evaluation goes through :class:`fractions.Fraction`; Python integers are
arbitrary precision so no overflow checks are needed on this path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import ImpossibleCanonicalData, NonAlmostComplex, NotIntegral

Rational = Fraction

__all__ = [
    "Rational",
    "KodairaDim",
    "Provenance",
    "KodairaVerdict",
    "ManifoldInvariants",
    "exact_int",
    "surface_kappa",
    "euler_characteristic",
    "compute_invariants",
    "kodaira_from_canonical",
    "plurigenus_general_type",
]


def exact_int(value: Fraction | int, what: str = "value") -> int:
    """Return ``value`` as an int, raising :class:`NotIntegral` instead of rounding."""
    value = Fraction(value)
    if value.denominator != 1:
        raise NotIntegral(what, value)
    return value.numerator


class KodairaDim(enum.Enum):
    """Kodaira dimension in the extended range {-inf, 0, 1, 2}.

    Ordered, and comparable with plain ints (``-inf`` lies below every int).
    Addition is extended addition: ``-inf`` absorbs, finite values add as
    integers. Finite sums are returned as ``int`` since they can leave the
    {0, 1, 2} range; a sum involving ``-inf`` is ``MINUS_INFINITY``.
    """

    MINUS_INFINITY = "-inf"
    ZERO = "0"
    ONE = "1"
    TWO = "2"

    @property
    def finite(self) -> int | None:
        return None if self is KodairaDim.MINUS_INFINITY else int(self.value)

    @classmethod
    def from_int(cls, value: int) -> KodairaDim:
        return cls(str(value))

    @classmethod
    def parse(cls, text: str) -> KodairaDim:
        return cls(text)

    def _key(self):
        return _ext_key(self)

    def __lt__(self, other):
        if not isinstance(other, (KodairaDim, int)):
            return NotImplemented
        return _ext_key(self) < _ext_key(other)

    def __le__(self, other):
        if not isinstance(other, (KodairaDim, int)):
            return NotImplemented
        return _ext_key(self) <= _ext_key(other)

    def __gt__(self, other):
        if not isinstance(other, (KodairaDim, int)):
            return NotImplemented
        return _ext_key(self) > _ext_key(other)

    def __ge__(self, other):
        if not isinstance(other, (KodairaDim, int)):
            return NotImplemented
        return _ext_key(self) >= _ext_key(other)

    def __add__(self, other):
        if not isinstance(other, (KodairaDim, int)):
            return NotImplemented
        return extended_add(self, other)

    __radd__ = __add__

    def __str__(self) -> str:
        return self.value


ExtendedInt = Union[KodairaDim, int]


def _ext_key(x: ExtendedInt) -> tuple[int, int]:
    if isinstance(x, KodairaDim):
        if x is KodairaDim.MINUS_INFINITY:
            return (0, 0)
        return (1, int(x.value))
    return (1, x)


def extended_add(a: ExtendedInt, b: ExtendedInt) -> ExtendedInt:
    if a is KodairaDim.MINUS_INFINITY or b is KodairaDim.MINUS_INFINITY:
        return KodairaDim.MINUS_INFINITY
    return _ext_key(a)[1] + _ext_key(b)[1]


@dataclass(frozen=True)
class Provenance:
    """Where a Kodaira dimension value comes from.

    ``kind`` is one of ``definitional``, ``proven``, ``conjectural`` or
    ``obstruction``; obstruction provenance carries the obstruction name.
    """

    kind: str
    name: str | None = None

    KINDS = ("definitional", "proven", "conjectural", "obstruction")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown provenance kind {self.kind!r}")
        if (self.kind == "obstruction") != (self.name is not None):
            raise ValueError("obstruction provenance needs a name, and only it")

    @classmethod
    def definitional(cls) -> Provenance:
        return cls("definitional")

    @classmethod
    def proven(cls) -> Provenance:
        return cls("proven")

    @classmethod
    def conjectural(cls) -> Provenance:
        return cls("conjectural")

    @classmethod
    def obstruction(cls, name: str) -> Provenance:
        return cls("obstruction", name)

    def __str__(self) -> str:
        return f"obstruction:{self.name}" if self.name else self.kind


@dataclass(frozen=True)
class KodairaVerdict:
    dim: KodairaDim
    provenance: Provenance
    notes: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class ManifoldInvariants:
    """Euler characteristic and signature plus the quantities derived from them."""

    chi: int
    sigma: int

    @property
    def k_squared(self) -> int:
        return 2 * self.chi + 3 * self.sigma

    @property
    def chi_h(self) -> Fraction:
        return Fraction(self.chi + self.sigma, 4)

    @property
    def almost_complex_admissible(self) -> bool:
        return (self.chi + self.sigma) % 4 == 0


def surface_kappa(genus: int) -> KodairaDim:
    if genus < 0:
        raise ValueError(f"genus must be nonnegative, got {genus}")
    if genus == 0:
        return KodairaDim.MINUS_INFINITY
    if genus == 1:
        return KodairaDim.ZERO
    return KodairaDim.ONE


def euler_characteristic(g: int, h: int, n: int) -> int:
    """Euler characteristic of a (g, h) Lefschetz fibration with ``n`` singular points."""
    if min(g, h, n) < 0:
        raise ValueError("g, h and n must be nonnegative")
    return (2 - 2 * g) * (2 - 2 * h) + n


def compute_invariants(chi: int, sigma: int) -> ManifoldInvariants:
    return ManifoldInvariants(int(chi), int(sigma))


def kodaira_from_canonical(
    minimal: bool, rational_or_ruled: bool, k_torsion: bool, k_squared: int
) -> KodairaDim:
    """Classify a minimal symplectic 4-manifold from its canonical class data."""
    if not minimal:
        raise ValueError("classifier requires minimal data; blow down first")
    if rational_or_ruled:
        return KodairaDim.MINUS_INFINITY
    if k_torsion:
        if k_squared != 0:
            raise ImpossibleCanonicalData(
                f"torsion canonical class with K^2={k_squared} != 0"
            )
        return KodairaDim.ZERO
    if k_squared < 0:
        raise ImpossibleCanonicalData(
            f"impossible minimal data: K^2={k_squared} < 0 on a non rational/ruled manifold"
        )
    return KodairaDim.ONE if k_squared == 0 else KodairaDim.TWO


def plurigenus_general_type(n: int, k_squared: int, b1: int, b_plus: int) -> int:
    """n-th plurigenus of a minimal surface of general type, valid for n >= 2."""
    if n < 2:
        raise ValueError(f"formula holds for n >= 2, got n={n}")
    if k_squared <= 0:
        raise ValueError(f"general type requires K^2 > 0, got {k_squared}")
    if (1 - b1 + b_plus) % 2:
        raise NonAlmostComplex(
            f"non-almost-complex Betti data: 1 - b1 + b+ = {1 - b1 + b_plus} is odd"
        )
    value = Fraction(n * (n - 1), 2) * k_squared + Fraction(1 - b1 + b_plus, 2)
    return exact_int(value, "plurigenus")
