"""Exhaustive enumeration of hyperelliptic (g, 1) data and property checks.

The integer kernel in :mod:`lefkappa._kernels` filters candidates; every kept
row is then re-evaluated on the exact rational path, so the two routes check
each other.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import _kernels
from .classifier import conjecture_obstructions, kappa_lefschetz, subadditivity_holds
from .errors import LefkappaError, ResourceLimitExceeded
from .hyperelliptic import (
    FibrationData,
    endo_signature,
    endo_signature_exact,
    hyperelliptic_k_squared,
    prop_he_verdict,
)
from .invariants import KodairaVerdict

DEFAULT_LIMIT = 10**7


@dataclass(frozen=True)
class EnumerationRecord:
    data: FibrationData
    sigma: int
    k_squared: int
    k_squared_direct: int
    verdict: KodairaVerdict


@dataclass(frozen=True)
class EnumerationReport:
    parameters: tuple[int, int, int]
    admissible_count: int
    visited: int
    records: tuple[EnumerationRecord, ...]
    failures: tuple[str, ...] = field(default=())


def candidate_count(g: int, n_max: int) -> int:
    """Rows (a, s_1..s_{g//2}) of nonnegative ints with sum <= n_max (stars and bars)."""
    parts = g // 2 + 1
    return math.comb(n_max + parts, parts)


def grid_size(g_min: int, g_max: int, n_max: int) -> int:
    return sum(candidate_count(g, n_max) for g in range(g_min, g_max + 1))


def admissible_bruteforce(g: int, n_max: int) -> list[tuple[int, ...]]:
    """Reference: itertools product over all rows, exact Fraction integrality test."""
    parts = g // 2 + 1
    found = []
    for row in itertools.product(range(n_max + 1), repeat=parts):
        if sum(row) > n_max:
            continue
        d = FibrationData(g, 1, row[0], row[1:], hyperelliptic=True)
        if endo_signature_exact(d).denominator == 1:
            found.append(row)
    return found


def _record(g: int, row) -> tuple[EnumerationRecord | None, list[str]]:
    a, *s = (int(x) for x in row)
    d = FibrationData(g, 1, a, tuple(s), hyperelliptic=True)
    label = f"g={g} a={a} s={list(s)}"
    try:
        sigma = endo_signature(d)
        k2_direct = hyperelliptic_k_squared(d)
        verdict = prop_he_verdict(d) if d.n > 0 else kappa_lefschetz(g, 1, 0)
    except LefkappaError as exc:
        return None, [f"{label}: {exc}"]
    failures = []
    k2 = 3 * sigma + 2 * d.n
    if k2 != k2_direct:
        failures.append(f"{label}: dual-path K^2 mismatch {k2} != {k2_direct}")
    if d.n > 0 and k2 <= 0:
        failures.append(f"{label}: K^2={k2} not positive")
    if d.n > 0:
        table = kappa_lefschetz(g, 1, d.n)
        if table.dim is not verdict.dim:
            failures.append(f"{label}: verdict {verdict.dim} != table {table.dim}")
        report = conjecture_obstructions(d)
        if report.contradictory:
            failures.append(f"{label}: contradictory obstructions {report.fired}")
        for name, dim in report.fired:
            if dim is not verdict.dim:
                failures.append(f"{label}: obstruction {name} gives {dim}, verdict {verdict.dim}")
    if not subadditivity_holds(verdict.dim, g, 1):
        failures.append(f"{label}: subadditivity fails")
    return EnumerationRecord(d, sigma, k2, k2_direct, verdict), failures


def _chunks(g_min: int, g_max: int, n_max: int, workers: int):
    # split each genus by ranges of a; chunking never changes the merged output
    pieces = max(1, workers)
    for g in range(g_min, g_max + 1):
        step = max(1, -(-(n_max + 1) // pieces))
        for lo in range(0, n_max + 1, step):
            yield g, lo, min(n_max, lo + step - 1)


def _run_chunk(task, n_max: int, backend):
    g, lo, hi = task
    rows, visited = _kernels.admissible_rows(g, n_max, lo, hi, backend=backend)
    records, failures = [], []
    for row in rows:
        rec, fails = _record(g, row)
        failures.extend(fails)
        if rec is not None:
            records.append(rec)
    return records, failures, visited


def enumerate_hyperelliptic(
    g_min: int,
    g_max: int,
    n_max: int,
    *,
    workers: int = 1,
    limit: int = DEFAULT_LIMIT,
    backend: str | None = None,
) -> EnumerationReport:
    """Enumerate admissible hyperelliptic (g, 1) data with g in [g_min, g_max], n <= n_max."""
    if not 2 <= g_min <= g_max:
        raise ValueError(f"need 2 <= g_min <= g_max, got {g_min}, {g_max}")
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    expected = grid_size(g_min, g_max, n_max)
    if expected > limit:
        raise ResourceLimitExceeded(expected, limit)

    tasks = list(_chunks(g_min, g_max, n_max, workers))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda t: _run_chunk(t, n_max, backend), tasks))
    else:
        results = [_run_chunk(t, n_max, backend) for t in tasks]

    records, failures, visited = [], [], 0
    for recs, fails, seen in results:
        records.extend(recs)
        failures.extend(fails)
        visited += seen
    records.sort(key=lambda r: (r.data.g, r.data.a, r.data.s))
    if visited != expected:
        failures.append(f"exhaustiveness: visited {visited} candidates, expected {expected}")
    return EnumerationReport(
        (g_min, g_max, n_max), len(records), visited, tuple(records), tuple(failures)
    )

