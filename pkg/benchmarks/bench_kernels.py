#!/usr/bin/env python3
"""Benchmark the compiled row-reduction kernel against the pure-Python one.

The workload is the hot path of the exact engine: restricted row reductions
over every interval of seeded random Clifford tableaux (the integer lattice)
plus the greedy maximally-local-set construction.  The same workload runs
once per backend by toggling the dispatch, so the comparison is in-process
and uses identical inputs.

Usage:
    python benchmarks/bench_kernels.py [--lengths 8,12,16] [--circuits 25]
                                       [--layers 12] [--micro]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import infolattice._kernels as kernels
from infolattice.tableau import StabilizerTableau, random_clifford_circuit


def build_tableaux(lengths: list[int], circuits: int, layers: int):
    out = []
    for L in lengths:
        for k in range(circuits):
            t = random_clifford_circuit(L, layers, 31_000 + 97 * k + L).apply_to_tableau(
                StabilizerTableau.zero_state(L)
            )
            out.append(t)
    return out


def lattice_workload(tableaux) -> float:
    total = 0.0
    for t in tableaux:
        lat = t.integer_info_lattice()
        t.maximally_local_generating_set()
        total += lat.total()
    return total


def run_backend(tableaux, force_pure: bool) -> tuple[float, float]:
    saved = kernels._core
    if force_pure:
        kernels._core = None
    try:
        start = time.perf_counter()
        checksum = lattice_workload(tableaux)
        return time.perf_counter() - start, checksum
    finally:
        kernels._core = saved


def micro_reduce(force_pure: bool, rows: int = 16, length: int = 48, reps: int = 20000) -> float:
    rng = np.random.default_rng(7)
    xs = [int(v) for v in rng.integers(0, 1 << length, size=rows)]
    zs = [int(v) for v in rng.integers(0, 1 << length, size=rows)]
    ph = [int(v) for v in rng.integers(0, 4, size=rows)]
    cols = list(range(2 * length))
    saved = kernels._core
    if force_pure:
        kernels._core = None
    try:
        start = time.perf_counter()
        for _ in range(reps):
            kernels.reduce_pauli_rows(list(xs), list(zs), list(ph), cols, length)
        return time.perf_counter() - start
    finally:
        kernels._core = saved


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lengths", default="8,12,16")
    ap.add_argument("--circuits", type=int, default=25)
    ap.add_argument("--layers", type=int, default=12)
    ap.add_argument("--micro", action="store_true", help="also run the raw kernel microbenchmark")
    args = ap.parse_args()

    lengths = [int(tok) for tok in args.lengths.split(",")]
    print(f"kernel backend built: {kernels.has_compiled()}  (active: {kernels.BACKEND})")
    tableaux = build_tableaux(lengths, args.circuits, args.layers)
    n = len(tableaux)
    print(f"workload: integer lattice + maximally local set for {n} tableaux, L in {lengths}")

    t_pure, check_pure = run_backend(tableaux, force_pure=True)
    print(f"  pure python : {t_pure:8.3f} s   ({n / t_pure:7.1f} tableaux/s)")
    if kernels.has_compiled():
        t_comp, check_comp = run_backend(tableaux, force_pure=False)
        assert check_pure == check_comp, "backends disagree"
        print(f"  compiled    : {t_comp:8.3f} s   ({n / t_comp:7.1f} tableaux/s)")
        print(f"  speedup     : {t_pure / t_comp:8.2f}x")
    else:
        print("  compiled    : not available (build the extension to compare)")

    if args.micro:
        print("raw reduction microbenchmark (16 rows x 48 sites, 20000 reps):")
        m_pure = micro_reduce(True)
        print(f"  pure python : {m_pure:8.3f} s")
        if kernels.has_compiled():
            m_comp = micro_reduce(False)
            print(f"  compiled    : {m_comp:8.3f} s")
            print(f"  speedup     : {m_pure / m_comp:8.2f}x")


if __name__ == "__main__":
    main()
