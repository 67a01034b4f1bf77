"""Line-oriented dataset format.

One record per line, ``<kind> key=value ...``; blank lines and ``#``
comments are skipped. An optional ``# lefkappa-format: 1`` header pins the
format version. Kinds and their keys::

    fibration g h a [s=[..]] [id] [hyperelliptic] [spin] [complex] [minimal]
    pencil    k A B chi sigma [kdh] [id] [minimal] [mode=euler|paper-literal]
    triple    g h n [id]
    elliptic  kind=torusbundle h [id]  |  kind=enh n h [id]

Errors are collected per line and parsing continues with the next line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .classifier import EllipticDescriptor
from .hyperelliptic import FibrationData
from .pencil import ConventionMode, PencilData, canonical_dot_h

FORMAT_VERSION = 1
HEADER = f"# lefkappa-format: {FORMAT_VERSION}"
_HEADER_RE = re.compile(r"#\s*lefkappa-format:\s*(\S+)\s*$")
_INT_RE = re.compile(r"-?[0-9]+")
_ID_RE = re.compile(r"[A-Za-z0-9_.:\-]+")


@dataclass(frozen=True)
class LefschetzTriple:
    g: int
    h: int
    n: int


@dataclass(frozen=True)
class PencilEntry:
    data: PencilData
    minimal: bool = True
    mode: ConventionMode | None = None


Payload = Union[FibrationData, PencilEntry, LefschetzTriple, EllipticDescriptor]


@dataclass(frozen=True)
class DatasetRecord:
    kind: str
    payload: Payload
    id: str | None = None
    source_line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line}: {self.message}"


class _LineError(Exception):
    pass


_KEYS = {
    "fibration": (("g", "h", "a"), ("s", "id", "hyperelliptic", "spin", "complex", "minimal")),
    "pencil": (("k", "A", "B", "chi", "sigma"), ("kdh", "id", "minimal", "mode")),
    "triple": (("g", "h", "n"), ("id",)),
    "elliptic": (("kind",), ("h", "n", "id")),
}


def _int(fields, key, minimum=None):
    token = fields[key]
    if not _INT_RE.fullmatch(token):
        raise _LineError(f"expected integer for {key}, got {token!r}")
    value = int(token)
    if minimum is not None and value < minimum:
        raise _LineError(f"{key} must be >= {minimum}, got {value}")
    return value


def _bool(fields, key, default):
    if key not in fields:
        return default
    token = fields[key]
    if token not in ("true", "false"):
        raise _LineError(f"expected true or false for {key}, got {token!r}")
    return token == "true"


def _int_list(token, key):
    if not (token.startswith("[") and token.endswith("]")):
        raise _LineError(f"expected bracketed list like [1,0] for {key}, got {token!r}")
    body = token[1:-1].strip()
    if not body:
        return []
    items = [item.strip() for item in body.split(",")]
    for item in items:
        if not _INT_RE.fullmatch(item) or int(item) < 0:
            raise _LineError(f"expected nonnegative integers in {key}, got {token!r}")
    return [int(item) for item in items]


def _tokenize(line):
    kind, *rest = line.split()
    if kind not in _KEYS:
        raise _LineError(
            f"unknown record kind {kind!r}; expected one of fibration, pencil, triple, elliptic"
        )
    required, optional = _KEYS[kind]
    fields = {}
    for token in rest:
        key, sep, value = token.partition("=")
        if not sep or not key or not value:
            raise _LineError(f"expected key=value, got {token!r}")
        if key not in required and key not in optional:
            allowed = ", ".join(required + optional)
            raise _LineError(f"unknown key {key!r} for {kind}; expected one of {allowed}")
        if key in fields:
            raise _LineError(f"duplicate key {key!r}")
        fields[key] = value
    missing = [key for key in required if key not in fields]
    if missing:
        raise _LineError(f"missing required key(s) {', '.join(missing)} for {kind}")
    ident = fields.get("id")
    if ident is not None and not _ID_RE.fullmatch(ident):
        raise _LineError(f"invalid id {ident!r}; use letters, digits and _.:-")
    return kind, fields, ident


def _fibration(fields):
    g = _int(fields, "g", 0)
    h = _int(fields, "h", 0)
    a = _int(fields, "a", 0)
    s = _int_list(fields["s"], "s") if "s" in fields else []
    if len(s) > g // 2:
        raise _LineError(f"s has {len(s)} entries but g={g} allows at most {g // 2}")
    s = s + [0] * (g // 2 - len(s))
    return FibrationData(
        g,
        h,
        a,
        tuple(s),
        hyperelliptic=_bool(fields, "hyperelliptic", False),
        spin=_bool(fields, "spin", False),
        complex=_bool(fields, "complex", False),
        minimal=_bool(fields, "minimal", True),
    )


def _pencil(fields):
    k = _int(fields, "k", 0)
    A = _int(fields, "A", 1)
    B = _int(fields, "B", 0)
    chi = _int(fields, "chi")
    sigma = _int(fields, "sigma")
    kdh = _int(fields, "kdh") if "kdh" in fields else canonical_dot_h(k, A)
    if (A + kdh) % 2:
        raise _LineError(f"A + kdh = {A + kdh} must be even")
    mode = None
    if "mode" in fields:
        try:
            mode = ConventionMode(fields["mode"])
        except ValueError:
            raise _LineError(
                f"expected euler or paper-literal for mode, got {fields['mode']!r}"
            ) from None
    data = PencilData(k, A, B, chi, sigma, kdh)
    return PencilEntry(data, _bool(fields, "minimal", True), mode)


def _triple(fields):
    return LefschetzTriple(_int(fields, "g", 0), _int(fields, "h", 0), _int(fields, "n", 0))


def _elliptic(fields):
    kind = fields["kind"]
    if kind == "torusbundle":
        if "n" in fields:
            raise _LineError("torusbundle takes no n")
        if "h" not in fields:
            raise _LineError("missing required key h for elliptic torusbundle")
        return EllipticDescriptor.torus_bundle(_int(fields, "h", 0))
    if kind == "enh":
        if "n" not in fields or "h" not in fields:
            raise _LineError("elliptic enh needs n and h")
        return EllipticDescriptor.enh(_int(fields, "n", 1), _int(fields, "h", 0))
    raise _LineError(f"expected torusbundle or enh for kind, got {kind!r}")


_BUILDERS = {
    "fibration": _fibration,
    "pencil": _pencil,
    "triple": _triple,
    "elliptic": _elliptic,
}


def parse_line(line: str, lineno: int = 1) -> DatasetRecord | None:
    """Parse one line; returns None for blank and comment lines."""
    stripped = line.strip()
    if not stripped:
        return None
    if stripped.startswith("#"):
        match = _HEADER_RE.match(stripped)
        if match and match.group(1) != str(FORMAT_VERSION):
            raise _LineError(
                f"unsupported format version {match.group(1)!r}; expected {FORMAT_VERSION}"
            )
        return None
    kind, fields, ident = _tokenize(stripped)
    try:
        payload = _BUILDERS[kind](fields)
    except _LineError:
        raise
    except ValueError as exc:
        raise _LineError(str(exc)) from None
    return DatasetRecord(kind, payload, ident, lineno)


def parse_dataset(text: str) -> tuple[list[DatasetRecord], list[ParseDiagnostic]]:
    records, diagnostics = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        try:
            record = parse_line(line, lineno)
        except _LineError as exc:
            diagnostics.append(ParseDiagnostic(lineno, str(exc)))
            continue
        if record is not None:
            records.append(record)
    return records, diagnostics


def _fmt_bool(value: bool) -> str:
    return "true" if value else "false"


def format_record(record: DatasetRecord) -> str:
    """Canonical one-line form; reparses to an equal record."""
    p = record.payload
    parts = [record.kind]
    if record.id is not None:
        parts.append(f"id={record.id}")
    if record.kind == "fibration":
        parts += [f"g={p.g}", f"h={p.h}", f"a={p.a}"]
        if p.s:
            parts.append("s=[" + ",".join(str(x) for x in p.s) + "]")
        for flag in ("hyperelliptic", "spin", "complex"):
            if getattr(p, flag):
                parts.append(f"{flag}=true")
        if not p.minimal:
            parts.append("minimal=false")
    elif record.kind == "pencil":
        d = p.data
        parts += [f"k={d.k}", f"A={d.A}", f"B={d.B}", f"chi={d.chi}", f"sigma={d.sigma}"]
        parts.append(f"kdh={d.k_dot_h}")
        if not p.minimal:
            parts.append("minimal=false")
        if p.mode is not None:
            parts.append(f"mode={p.mode.value}")
    elif record.kind == "triple":
        parts += [f"g={p.g}", f"h={p.h}", f"n={p.n}"]
    else:
        parts.append(f"kind={p.kind}")
        if p.kind == "enh":
            parts.append(f"n={p.n}")
        parts.append(f"h={p.h}")
    return " ".join(parts)


def format_dataset(records, header: bool = True) -> str:
    lines = [HEADER] if header else []
    lines += [format_record(r) for r in records]
    return "\n".join(lines) + "\n"
