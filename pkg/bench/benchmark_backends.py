#!/usr/bin/env python3
"""Benchmark the compiled Jacobi eigensolver against the pure-Python twin.

Times both backends on random dense Hermitian matrices and checks that
their spectra agree. Run from the repository root:

    python3 bench/benchmark_backends.py [--sizes 16,64,128,256] [--repeats 3]
"""

import argparse
import time

import numpy as np

from rpelab._jacobi_py import jacobi_eigh as jacobi_python

try:
    from rpelab._jacobi import jacobi_eigh as jacobi_cython
except ImportError:
    jacobi_cython = None


def random_hermitian(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (g + g.conj().T)


def time_solver(solver, matrices, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for m in matrices:
            solver(m)
        best = min(best, (time.perf_counter() - start) / len(matrices))
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="16,64,128,256")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    rng = np.random.default_rng(args.seed)
    if jacobi_cython is None:
        print("compiled backend unavailable; timing the fallback only")

    print(f"{'n':>6} {'python (s)':>12} {'cython (s)':>12} {'speedup':>8} {'max dev':>10}")
    for n in sizes:
        matrices = [random_hermitian(rng, n) for _ in range(max(1, 256 // n))]
        t_py = time_solver(jacobi_python, matrices, args.repeats)
        if jacobi_cython is None:
            print(f"{n:>6} {t_py:>12.4f} {'-':>12} {'-':>8} {'-':>10}")
            continue
        t_cy = time_solver(jacobi_cython, matrices, args.repeats)
        dev = max(
            np.abs(np.sort(jacobi_python(m)) - np.sort(jacobi_cython(m))).max()
            for m in matrices
        )
        print(f"{n:>6} {t_py:>12.4f} {t_cy:>12.4f} {t_py / t_cy:>8.1f} {dev:>10.2e}")


if __name__ == "__main__":
    main()
