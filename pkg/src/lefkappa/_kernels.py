"""Admissibility kernels for the hyperelliptic enumeration.

A candidate is a row ``(a, s_1, ..., s_m)`` of nonnegative ints with sum at
most ``n_max``; it is admissible when the signature sum is an integer, i.e.
when ``-(g+1) a + sum_j (4j(g-j) - (2g+1)) s_j`` is divisible by ``2g+1``.
Everything here is int64 integer arithmetic; callers must go through
:func:`check_int64_range` first.

Two interchangeable backends produce identical arrays in lexicographic order:
a numba ``@njit`` odometer and a vectorised numpy expansion. Set
``LEFKAPPA_DISABLE_NUMBA=1`` (or lack numba) to force the numpy path.
"""

import functools
import importlib.util
import os

import numpy as np

DISABLE_ENV = "LEFKAPPA_DISABLE_NUMBA"

# numba is imported on first kernel call; importing it costs most of CLI startup
HAVE_NUMBA = importlib.util.find_spec("numba") is not None


def numba_enabled() -> bool:
    flag = os.environ.get(DISABLE_ENV, "").strip().lower()
    return HAVE_NUMBA and flag in ("", "0", "false", "no")


def signature_coefficients(g):
    """Integer numerators of the signature coefficients over the common denominator 2g+1."""
    m = g // 2
    coeffs = np.empty(m + 1, dtype=np.int64)
    coeffs[0] = -(g + 1)
    for j in range(1, m + 1):
        coeffs[j] = 4 * j * (g - j) - (2 * g + 1)
    return coeffs


def check_int64_range(g, n_max):
    """Raise OverflowError if a numerator could leave int64 on this grid."""
    bound = max(g + 1, g * g + 2 * g + 1) * max(n_max, 1)
    if bound >= 2**62:
        raise OverflowError(f"grid g={g}, n_max={n_max} exceeds int64 kernel range")


# -- numpy backend ----------------------------------------------------------


def _compositions_numpy(parts, n_max, a_lo, a_hi):
    """All rows with ``parts`` entries, sum <= n_max, first entry in [a_lo, a_hi]."""
    first = np.arange(a_lo, min(a_hi, n_max) + 1, dtype=np.int64)
    rows = first.reshape(-1, 1)
    remaining = n_max - first
    for _ in range(parts - 1):
        counts = remaining + 1
        total = int(counts.sum())
        starts = np.cumsum(counts) - counts
        values = np.arange(total, dtype=np.int64) - np.repeat(starts, counts)
        rows = np.repeat(rows, counts, axis=0)
        rows = np.column_stack([rows, values])
        remaining = np.repeat(remaining, counts) - values
    return rows


def admissible_numpy(g, n_max, a_lo, a_hi):
    coeffs = signature_coefficients(g)
    if a_lo > min(a_hi, n_max):
        return np.empty((0, coeffs.size), dtype=np.int64), 0
    rows = _compositions_numpy(coeffs.size, n_max, a_lo, a_hi)
    numerators = rows @ coeffs
    keep = numerators % (2 * g + 1) == 0
    return rows[keep], rows.shape[0]


# -- numba backend ----------------------------------------------------------


def _odometer_py(coeffs, modulus, n_max, a_lo, a_hi, out, fill):
    m = coeffs.size
    a_stop = min(a_hi, n_max)
    vec = np.zeros(m, dtype=np.int64)
    if a_lo > a_stop:
        return 0, 0
    vec[0] = a_lo
    total = a_lo
    numerator = coeffs[0] * a_lo
    kept = 0
    visited = 0
    while True:
        visited += 1
        if numerator % modulus == 0:
            if fill:
                for t in range(m):
                    out[kept, t] = vec[t]
            kept += 1
        i = m - 1
        while i >= 0:
            if total < n_max and not (i == 0 and vec[0] >= a_stop):
                vec[i] += 1
                total += 1
                numerator += coeffs[i]
                break
            total -= vec[i]
            numerator -= coeffs[i] * vec[i]
            vec[i] = 0
            i -= 1
        if i < 0:
            break
    return kept, visited


@functools.lru_cache(maxsize=None)
def _compiled_odometer():
    from numba import njit

    return njit(cache=True, nogil=True)(_odometer_py)


def admissible_numba(g, n_max, a_lo, a_hi):
    odometer = _compiled_odometer()
    coeffs = signature_coefficients(g)
    modulus = 2 * g + 1
    scratch = np.empty((0, coeffs.size), dtype=np.int64)
    kept, visited = odometer(coeffs, modulus, n_max, a_lo, a_hi, scratch, False)
    out = np.empty((kept, coeffs.size), dtype=np.int64)
    odometer(coeffs, modulus, n_max, a_lo, a_hi, out, True)
    return out, visited


def admissible_rows(g, n_max, a_lo=0, a_hi=None, backend=None):
    """Admissible rows for fiber genus ``g`` with first entry in [a_lo, a_hi].

    Returns ``(rows, visited)`` where ``visited`` counts every candidate seen.
    ``backend`` is ``"numba"``, ``"numpy"`` or None for the env-selected default.
    """
    if a_hi is None:
        a_hi = n_max
    check_int64_range(g, n_max)
    if backend is None:
        backend = "numba" if numba_enabled() else "numpy"
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        return admissible_numba(g, n_max, a_lo, a_hi)
    if backend == "numpy":
        return admissible_numpy(g, n_max, a_lo, a_hi)
    raise ValueError(f"unknown backend {backend!r}")
