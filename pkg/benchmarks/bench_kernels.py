#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-python fallback.

Times the batched fidelity evaluation (the hot loop behind grid scans and
order certification) for a nine-pulse sequence over square error grids.

Usage:
    python benchmarks/bench_kernels.py [--sizes 101 201 401] [--repeats 5]
"""

import argparse
import math
import time

import numpy as np

from cpnot import _kernels_py
from cpnot.families import make
from cpnot.su2 import pulse_gate

try:
    from cpnot import _kernels

    HAVE_COMPILED = True
except ImportError:
    _kernels = None
    HAVE_COMPILED = False


def grid_points(size):
    eps = np.linspace(-1.0, 1.0, size)
    fs = np.linspace(-1.0, 1.0, size)
    ee, ff = np.meshgrid(eps, fs, indexing="ij")
    return np.ascontiguousarray(ee.ravel()), np.ascontiguousarray(ff.ravel())


def best_time(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[101, 201, 401])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    seq = make("sym9").sequence
    thetas = np.ascontiguousarray(seq.thetas)
    phis = np.ascontiguousarray(seq.phis)
    target = np.ascontiguousarray(pulse_gate(math.pi, 0.0))

    print(f"sequence: {seq.name} ({len(seq)} pulses)")
    print(f"compiled kernel available: {HAVE_COMPILED}")
    header = f"{'grid':>9} {'points':>9} {'numpy [ms]':>11}"
    if HAVE_COMPILED:
        header += f" {'compiled [ms]':>14} {'speedup':>8}"
    print(header)

    for size in args.sizes:
        eps, fs = grid_points(size)
        t_py = best_time(
            lambda: _kernels_py.fidelities(thetas, phis, eps, fs, target), args.repeats
        )
        row = f"{size:>4}x{size:<4} {eps.size:>9} {1e3 * t_py:>11.2f}"
        if HAVE_COMPILED:
            t_c = best_time(
                lambda: _kernels.fidelities(thetas, phis, eps, fs, target), args.repeats
            )
            match = np.max(
                np.abs(
                    _kernels.fidelities(thetas, phis, eps, fs, target)
                    - _kernels_py.fidelities(thetas, phis, eps, fs, target)
                )
            )
            assert match < 1e-14, f"kernels disagree by {match:.2e}"
            row += f" {1e3 * t_c:>14.2f} {t_py / t_c:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
