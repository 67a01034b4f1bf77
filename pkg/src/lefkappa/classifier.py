"""Kodaira dimension of Lefschetz fibrations over a positive-genus base.

Covers the (g, h, n) table, subadditivity, elliptic fibrations, the
Enriques-Kodaira lookup and the obstructions that force dimension 2 in the
(g > 2, 1, n >= 1) case.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import BaseIsSphere, LefkappaError, WrongBase
from .hyperelliptic import FibrationData, prop_he_verdict
from .invariants import (
    KodairaDim,
    KodairaVerdict,
    ManifoldInvariants,
    Provenance,
    surface_kappa,
)

M_INF = KodairaDim.MINUS_INFINITY
ZERO = KodairaDim.ZERO
ONE = KodairaDim.ONE
TWO = KodairaDim.TWO


def _lefschetz_dim(g: int, h: int, n: int) -> KodairaDim:
    if g == 0:
        return M_INF
    if g == 1:
        return ZERO if (h, n) == (1, 0) else ONE
    if h == 1 and n == 0:
        return ONE
    return TWO


def is_exceptional(g: int, h: int, n: int) -> bool:
    """The (g > 2, 1, n >= 1) triples where equivalence with kappa^s is open."""
    return g > 2 and h == 1 and n >= 1


def kappa_lefschetz(g: int, h: int, n: int) -> KodairaVerdict:
    if min(g, h, n) < 0:
        raise ValueError("g, h and n must be nonnegative")
    if h == 0:
        raise BaseIsSphere("base genus 0: use the pencil module for fibrations over the sphere")
    dim = _lefschetz_dim(g, h, n)
    if is_exceptional(g, h, n):
        return KodairaVerdict(dim, Provenance.conjectural(), ("exceptional case (>2,1,>0)",))
    return KodairaVerdict(dim, Provenance.proven())


def subadditivity_holds(kappa_m: KodairaDim, g: int, h: int) -> bool:
    return kappa_m >= surface_kappa(g) + surface_kappa(h)


@dataclass(frozen=True)
class EllipticDescriptor:
    """Either a torus bundle over a genus-``h`` surface or E(n, h)."""

    kind: str
    h: int
    n: int | None = None

    def __post_init__(self):
        if self.kind not in ("torusbundle", "enh"):
            raise ValueError(f"unknown elliptic kind {self.kind!r}")
        if self.h < 0:
            raise ValueError("base genus must be nonnegative")
        if self.kind == "enh":
            if self.n is None or self.n < 1:
                raise ValueError("E(n, h) needs n >= 1")
        elif self.n is not None:
            raise ValueError("torus bundles take no n")

    @classmethod
    def torus_bundle(cls, h: int) -> EllipticDescriptor:
        return cls("torusbundle", h)

    @classmethod
    def enh(cls, n: int, h: int = 0) -> EllipticDescriptor:
        return cls("enh", h, n)


def elliptic_kappa(d: EllipticDescriptor) -> KodairaDim:
    if d.kind == "torusbundle":
        return surface_kappa(d.h)
    if d.h >= 1:
        return ONE
    return {1: M_INF, 2: ZERO}.get(d.n, ONE)


def elliptic_invariants(d: EllipticDescriptor) -> ManifoldInvariants:
    """chi and sigma: torus bundles have both zero; E(n, h) has chi = 12n, sigma = -8n."""
    if d.kind == "torusbundle":
        return ManifoldInvariants(0, 0)
    # fiber sum along a torus adds chi and sigma; Sigma_h x T^2 contributes zero
    return ManifoldInvariants(12 * d.n, -8 * d.n)


def torus_bundle_kappa(g: int) -> KodairaDim:
    """A (g, 1) or (1, g) surface bundle with g >= 2: sigma = 0 forces K^2 = 0."""
    if g < 2:
        raise ValueError(f"needs g >= 2, got {g}")
    return ONE


ENRIQUES_KODAIRA = {
    1: frozenset({M_INF, ZERO, ONE, TWO}),  # algebraic, p_g = 0
    2: frozenset({ZERO}),  # K3
    3: frozenset({ZERO}),  # complex tori
    4: frozenset({ZERO, ONE}),  # elliptic, b_1 even, p_g >= 1, c_1 != 0
    5: frozenset({TWO}),  # algebraic, p_g >= 1, c_1^2 > 0
    6: frozenset({ZERO, ONE}),  # elliptic, b_1 odd, p_g >= 1
    7: frozenset({M_INF}),  # b_1 = q = 1, p_g = 0
}


def enriques_class_kappa(class_id: int) -> frozenset[KodairaDim]:
    try:
        return ENRIQUES_KODAIRA[class_id]
    except KeyError:
        raise ValueError(f"Enriques-Kodaira class must be in 1..7, got {class_id}") from None


@dataclass(frozen=True)
class ObstructionReport:
    fired: tuple[tuple[str, KodairaDim], ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def undetermined(self) -> bool:
        return not self.fired

    @property
    def contradictory(self) -> bool:
        return len({dim for _, dim in self.fired}) > 1

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.fired)


def conjecture_obstructions(d: FibrationData) -> ObstructionReport:
    """Run every obstruction that rules out K^2 = 0 for a (g >= 2, 1, n >= 1) fibration.

    Over a torus base chi = n, so each obstruction is a divisibility test on n.
    """
    if d.h != 1:
        raise WrongBase(f"obstructions are only stated for base genus 1, got h={d.h}")
    if d.g < 2 or d.n < 1:
        raise ValueError("obstructions need g >= 2 and n >= 1")
    n = d.n
    fired = []
    notes = []
    if n % 3:
        fired.append(("mod3", TWO))
    if d.spin and n % 24:
        fired.append(("spin-rokhlin", TWO))
    if d.complex and n % 12:
        fired.append(("complex-12", TWO))
    if d.hyperelliptic:
        try:
            verdict = prop_he_verdict(d)
        except LefkappaError as exc:
            notes.append(f"hyperelliptic skipped: {exc}")
        else:
            fired.append(("hyperelliptic", verdict.dim))
    return ObstructionReport(tuple(fired), tuple(notes))


def fibration_verdict(d: FibrationData) -> KodairaVerdict:
    """kappa^l of a fibration, upgraded from conjectural when an obstruction fires."""
    verdict = kappa_lefschetz(d.g, d.h, d.n)
    if verdict.provenance.kind != "conjectural":
        return verdict
    report = conjecture_obstructions(d)
    if report.contradictory:
        raise LefkappaError(f"contradictory obstructions: {report.fired}")
    notes = verdict.notes + report.notes
    if report.undetermined:
        return replace(verdict, notes=notes + ("no obstruction fired",))
    name, dim = report.fired[0]
    if dim is not verdict.dim:
        raise LefkappaError(f"obstruction {name} gives {dim}, table gives {verdict.dim}")
    others = [f"also fired: {other}" for other in report.names[1:]]
    return KodairaVerdict(dim, Provenance.obstruction(name), notes + tuple(others))


def fiber_sum_kappa_bound(k1: KodairaDim, k2: KodairaDim, k_fiber: KodairaDim) -> KodairaDim:
    """Lower bound (not the value) for kappa of a symplectic fiber sum."""
    return max(k1, k2, k_fiber)
