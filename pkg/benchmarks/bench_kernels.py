"""Time the numba odometer against the numpy expansion.

    python benchmarks/bench_kernels.py [--repeat 5]

The first numba call includes JIT compilation (or cache load) and is reported
separately as warm-up.
"""

import argparse
import time
import timeit

import numpy as np

from lefkappa import _kernels

GRIDS = [(2, 200), (5, 60), (7, 40), (9, 24)]


def _best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if not _kernels.HAVE_NUMBA:
        print("numba not importable; only the numpy backend can run")
        return

    t0 = time.perf_counter()
    _kernels.admissible_rows(2, 3, backend="numba")
    print(f"numba warm-up: {time.perf_counter() - t0:.3f}s")

    print(f"{'g':>3} {'n_max':>6} {'visited':>10} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for g, n_max in GRIDS:
        rows_np, visited = _kernels.admissible_rows(g, n_max, backend="numpy")
        rows_nb, _ = _kernels.admissible_rows(g, n_max, backend="numba")
        assert np.array_equal(rows_np, rows_nb)
        t_np = _best(lambda: _kernels.admissible_rows(g, n_max, backend="numpy"), args.repeat)
        t_nb = _best(lambda: _kernels.admissible_rows(g, n_max, backend="numba"), args.repeat)
        print(f"{g:>3} {n_max:>6} {visited:>10} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.1f}")


if __name__ == "__main__":
    main()
