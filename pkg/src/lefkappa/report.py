"""Text and json renderings of result rows. Output is byte-deterministic."""

from __future__ import annotations

import json

COLUMNS = ("id", "kind", "inputs", "chi", "sigma", "K^2", "kappa", "provenance", "notes")


def _text(value) -> str:
    return "-" if value is None or value == "" else str(value)


def row_to_dict(row) -> dict:
    chi_h = row.chi_h
    return {
        "id": row.id,
        "kind": row.kind,
        "inputs": row.inputs,
        "chi": row.chi,
        "sigma": row.sigma,
        "k_squared": row.k_squared,
        "chi_h": None if chi_h is None else str(chi_h),
        "kappa": None if row.kappa is None else row.kappa.value,
        "provenance": None if row.provenance is None else str(row.provenance),
        "notes": list(row.notes),
        "errors": list(row.errors),
        "mode": None if row.mode is None else row.mode.value,
        "derived": row.derived,
    }


def _notes_cell(row) -> str:
    items = list(row.notes)
    if row.derived:
        items.insert(0, row.derived)
    items += [f"ERROR {e}" for e in row.errors]
    return "; ".join(items)


def emit_text(rows) -> str:
    table = [COLUMNS]
    for row in rows:
        table.append(
            (
                _text(row.id),
                row.kind,
                row.inputs,
                _text(row.chi),
                _text(row.sigma),
                _text(row.k_squared),
                _text(row.kappa),
                _text(row.provenance),
                _text(_notes_cell(row)),
            )
        )
    widths = [max(len(r[i]) for r in table) for i in range(len(COLUMNS))]
    lines = []
    for r in table:
        cells = [c.ljust(w) for c, w in zip(r[:-1], widths)] + [r[-1]]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def emit_json(rows) -> str:
    return json.dumps([row_to_dict(r) for r in rows], indent=2) + "\n"


def emit_report(rows, fmt: str = "text") -> str:
    if fmt == "text":
        return emit_text(rows)
    if fmt == "json":
        return emit_json(rows)
    raise ValueError(f"unknown format {fmt!r}")
