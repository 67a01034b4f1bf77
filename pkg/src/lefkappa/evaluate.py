"""Turn parsed dataset records into report rows.

Per-record domain errors are collected on the row, never raised, so one bad
record cannot hide the others.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .classifier import (
    elliptic_invariants,
    elliptic_kappa,
    fibration_verdict,
    kappa_lefschetz,
    subadditivity_holds,
)
from .dataset import DatasetRecord, format_record
from .errors import LefkappaError
from .hyperelliptic import endo_signature, hyperelliptic_k_squared
from .invariants import (
    KodairaDim,
    KodairaVerdict,
    Provenance,
    compute_invariants,
    euler_characteristic,
)
from .oracle import EnumerationReport
from .pencil import (
    DEFAULT_MODE,
    ConventionMode,
    canonical_dot_h,
    fibration_to_pencil_genus,
    kappa_pencil,
    pencil_consistency,
    pencil_genus,
    singular_fiber_count,
)


@dataclass
class ResultRow:
    id: str | None
    kind: str
    inputs: str
    chi: int | None = None
    sigma: int | None = None
    kappa: KodairaDim | None = None
    provenance: Provenance | None = None
    notes: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    mode: ConventionMode | None = None
    derived: str = ""

    @property
    def k_squared(self) -> int | None:
        if self.chi is None or self.sigma is None:
            return None
        return compute_invariants(self.chi, self.sigma).k_squared

    @property
    def chi_h(self) -> Fraction | None:
        if self.chi is None or self.sigma is None:
            return None
        return compute_invariants(self.chi, self.sigma).chi_h

    @property
    def ok(self) -> bool:
        return not self.errors

    def set_verdict(self, verdict: KodairaVerdict) -> None:
        self.kappa = verdict.dim
        self.provenance = verdict.provenance
        self.notes.extend(verdict.notes)


def _inputs(record: DatasetRecord) -> str:
    # canonical line minus the kind and id prefix
    words = format_record(record).split()[1:]
    return " ".join(w for w in words if not w.startswith("id="))


def _flag_almost_complex(row: ResultRow) -> None:
    if row.chi is not None and row.sigma is not None:
        if not compute_invariants(row.chi, row.sigma).almost_complex_admissible:
            row.notes.append("chi+sigma not divisible by 4: no almost complex structure")


def _row(record: DatasetRecord) -> ResultRow:
    return ResultRow(record.id, record.kind, _inputs(record))


def _classify_triple(record, row, mode):
    t = record.payload
    row.chi = euler_characteristic(t.g, t.h, t.n)
    verdict = kappa_lefschetz(t.g, t.h, t.n)
    row.set_verdict(verdict)
    if not subadditivity_holds(verdict.dim, t.g, t.h):
        row.errors.append("subadditivity violated")


def _classify_fibration(record, row, mode):
    d = record.payload
    row.chi = d.chi
    if not d.minimal:
        raise LefkappaError("non-minimal fibration: classifiers need minimal data")
    if d.hyperelliptic and d.h == 1 and d.g >= 2:
        row.sigma = endo_signature(d)
        k2 = hyperelliptic_k_squared(d)
        if k2 != row.k_squared:
            row.errors.append(f"dual-path K^2 mismatch: {k2} != {row.k_squared}")
    verdict = fibration_verdict(d)
    row.set_verdict(verdict)
    if d.hyperelliptic and d.h == 1 and d.g >= 2 and d.n > 0:
        row.notes.append(f"K^2={row.k_squared}>0")
    if not subadditivity_holds(verdict.dim, d.g, d.h):
        row.errors.append("subadditivity violated")


def _classify_pencil(record, row, mode):
    entry = record.payload
    p = entry.data
    mode = entry.mode or mode
    row.mode = mode
    row.chi, row.sigma = p.chi, p.sigma
    k_fact = pencil_genus(p.A, p.k_dot_h)
    if k_fact != p.k:
        row.errors.append(f"fiber genus k={p.k} but A and kdh give k={k_fact}")
    count = singular_fiber_count(p.chi, p.A, p.k_dot_h, mode)
    row.derived = f"B={count.value}"
    if count.value != p.B:
        row.errors.append(f"B={p.B} but the {mode.value} count gives B={count.value}")
    if not pencil_consistency(p):
        row.errors.append("blow-up Euler identity fails")
    if not entry.minimal:
        raise LefkappaError("non-minimal pencil: kappa^p needs a minimal manifold")
    row.kappa = kappa_pencil(p.k, p.A, p.chi, p.sigma)
    row.provenance = Provenance.definitional()


def _classify_elliptic(record, row, mode):
    d = record.payload
    inv = elliptic_invariants(d)
    row.chi, row.sigma = inv.chi, inv.sigma
    row.kappa = elliptic_kappa(d)
    row.provenance = Provenance.proven()


_CLASSIFIERS = {
    "triple": _classify_triple,
    "fibration": _classify_fibration,
    "pencil": _classify_pencil,
    "elliptic": _classify_elliptic,
}


def classify_record(record: DatasetRecord, mode: ConventionMode = DEFAULT_MODE) -> ResultRow:
    row = _row(record)
    try:
        _CLASSIFIERS[record.kind](record, row, mode)
    except LefkappaError as exc:
        row.errors.append(f"{type(exc).__name__}: {exc}")
    _flag_almost_complex(row)
    return row


def classify_records(records, mode: ConventionMode = DEFAULT_MODE) -> list[ResultRow]:
    return [classify_record(r, mode) for r in records]


def invariants_record(record: DatasetRecord, mode: ConventionMode = DEFAULT_MODE) -> ResultRow:
    """chi and sigma only, no Kodaira dimension."""
    row = _row(record)
    p = record.payload
    try:
        if record.kind == "triple":
            row.chi = euler_characteristic(p.g, p.h, p.n)
        elif record.kind == "fibration":
            row.chi = p.chi
            if p.hyperelliptic and p.h == 1 and p.g >= 2:
                row.sigma = endo_signature(p)
        elif record.kind == "pencil":
            row.chi, row.sigma = p.data.chi, p.data.sigma
        else:
            inv = elliptic_invariants(p)
            row.chi, row.sigma = inv.chi, inv.sigma
    except LefkappaError as exc:
        row.errors.append(f"{type(exc).__name__}: {exc}")
    _flag_almost_complex(row)
    return row


def convert_records(records, mode: ConventionMode = DEFAULT_MODE) -> list[ResultRow]:
    """Pencil <-> fibration conversions.

    Every pencil yields the (k, 0, B) fibration on its blow-up. A fibration or
    triple sharing an id with a pencil yields the pencil genus predicted from
    the fibration, compared against the pencil's own k.
    """
    pencils = {}
    for r in records:
        if r.kind == "pencil" and r.id is not None:
            pencils.setdefault(r.id, []).append(r)
    rows = []
    for r in records:
        row = _row(r)
        if r.kind == "pencil":
            entry = r.payload
            p = entry.data
            row.mode = entry.mode or mode
            row.chi, row.sigma = p.chi + p.A, p.sigma - p.A
            row.derived = f"triple g={p.k} h=0 n={p.B}"
            row.notes.append(f"blow-up at {p.A} base points")
            if canonical_dot_h(p.k, p.A) != p.k_dot_h:
                row.errors.append("kdh disagrees with 2k-2-A")
            if not pencil_consistency(p):
                row.errors.append("blow-up Euler identity fails")
        elif r.kind in ("fibration", "triple"):
            g, h, n = r.payload.g, r.payload.h, r.payload.n
            row.chi = euler_characteristic(g, h, n)
            partners = pencils.get(r.id, []) if r.id is not None else []
            if not partners:
                row.notes.append("no pencil shares this id")
            derived = []
            for partner in partners:
                entry = partner.payload
                pmode = entry.mode or mode
                row.mode = pmode
                try:
                    k = fibration_to_pencil_genus(g, h, n, entry.data.A, entry.data.B, pmode)
                except LefkappaError as exc:
                    row.errors.append(f"{type(exc).__name__}: {exc}")
                    continue
                derived.append(f"k={k}")
                if k != entry.data.k:
                    row.errors.append(
                        f"predicted pencil genus k={k} but pencil line {partner.source_line} has k={entry.data.k}"
                    )
            row.derived = " ".join(derived)
        else:
            row.notes.append("no conversion for elliptic descriptors")
        rows.append(row)
    return rows


@dataclass
class DatasetReport:
    rows: list[ResultRow]
    failures: list[str]


def verify_dataset(records, mode: ConventionMode = DEFAULT_MODE) -> DatasetReport:
    """Classify every record and require equal kappa across records sharing an id."""
    rows = classify_records(records, mode)
    failures = []
    for row in rows:
        failures.extend(f"{row.kind} {row.inputs}: {e}" for e in row.errors)
    by_id = {}
    for row in rows:
        if row.id is not None and row.kappa is not None:
            by_id.setdefault(row.id, []).append(row)
    for ident, group in by_id.items():
        values = {row.kappa for row in group}
        if len(values) > 1:
            shown = ", ".join(sorted(str(v) for v in values))
            message = f"cross-presentation mismatch for id={ident}: kappa in {{{shown}}}"
            failures.append(message)
            for row in group:
                row.errors.append(message)
    return DatasetReport(rows, failures)


def enumeration_rows(report: EnumerationReport) -> list[ResultRow]:
    rows = []
    for rec in report.records:
        d = rec.data
        s = "[" + ",".join(str(x) for x in d.s) + "]"
        row = ResultRow(
            f"g{d.g}-a{d.a}-s" + "-".join(str(x) for x in d.s),
            "fibration",
            f"g={d.g} h=1 a={d.a} s={s} n={d.n}",
            chi=d.chi,
            sigma=rec.sigma,
        )
        row.set_verdict(rec.verdict)
        row.derived = f"K^2={rec.k_squared_direct}"
        _flag_almost_complex(row)
        rows.append(row)
    return rows
