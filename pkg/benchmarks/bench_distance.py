#!/usr/bin/env python3
"""Benchmark the compiled distance kernels against the pure-Python fallback.

Workloads mirror what the acceptance suite leans on:

  exhaustive   -- the [10,7] torsion code over F_9 (9^7 ~ 4.8M codewords)
  pair-scan    -- pair-weight scan of a length-5 R-code over F_9 (9^6 words)
  colrank d=4  -- the [14,10] table row over F_9 (levels 1..4)
  colrank d=6  -- the [40,32] table row over F_9 (levels 1..6; --full only,
                  the pure fallback needs minutes here)

Usage: python benchmarks/bench_distance.py [--full]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from ringcode import _backend, _kernels_py
from ringcode.codes import code_from_exponents, field_span_rows, torsion
from ringcode.cyclo import build_cosets, poly_norm
from ringcode.distance import _worker_ranges
from ringcode.gf import get_field

try:
    from ringcode import _kernels
except ImportError:
    _kernels = None


def _tor_from_factors(F, cs, factor_strings):
    by_poly = {cs.min_polys[r]: r for r in cs.reps}
    reps = [by_poly[poly_norm(F.parse_poly(s))] for s in factor_strings]
    return torsion(code_from_exponents(cs, {r: 2 for r in reps}))


def build_workloads(full: bool):
    F9 = get_field(3, 1)
    add, sub, mul, inv = _backend.field_tables(F9)
    work = []

    cs10 = build_cosets(F9, F9.w(4), 10, 0)
    T = _tor_from_factors(F9, cs10, ["w^2,1", "2,w^5,1"])
    rows = np.array(T.gen_rows, dtype=np.uint8)
    total = F9.q ** T.dimension
    work.append(("exhaustive [10,7] 9^7", "exh",
                 (rows, add, mul, False, 0, total)))

    cs5 = build_cosets(F9, F9.w(4), 5, 0)
    C = code_from_exponents(cs5, {5: 1, 3: 1, 1: 1})
    prows = np.array(field_span_rows(C), dtype=np.uint8)
    work.append(("pair-scan R-code 9^5", "exh",
                 (prows, add, mul, True, 0, F9.q ** prows.shape[0])))

    cs14 = build_cosets(F9, F9.w(4), 14, 0)
    T14 = _tor_from_factors(F9, cs14, ["w^2,1", "w^2,w^3,w^3,1"])
    h14 = np.array(T14.parity_check(), dtype=np.uint8).T.copy()
    work.append(("colrank [14,10] d=4", "colrank", (h14, 4, add, sub, mul, inv)))

    if full:
        cs40 = build_cosets(F9, F9.w(4), 40, 0)
        T40 = _tor_from_factors(
            F9, cs40, ["w^5,0,1", "w^7,w^3,1", "w^3,w^5,1", "w,w^7,1"])
        h40 = np.array(T40.parity_check(), dtype=np.uint8).T.copy()
        work.append(("colrank [40,32] d=6", "colrank",
                     (h40, 6, add, sub, mul, inv)))
    return work


def run_one(impl, kind, payload):
    t0 = time.perf_counter()
    if kind == "exh":
        out = impl.exhaustive_scan(*payload)
        result = out[0]
    else:
        hcols, d, add, sub, mul, inv = payload
        n = hcols.shape[0]
        result = None
        for w in range(1, d + 1):
            hit = impl.colrank_first_dependent(hcols, w, add, sub, mul, inv, 0, n)
            if hit is not None:
                result = w
                break
    return time.perf_counter() - t0, result


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--full", action="store_true",
                    help="include the [40,32] d=6 search (slow on the fallback)")
    args = ap.parse_args()

    impls = [("python", _kernels_py)]
    if _kernels is not None:
        impls.insert(0, ("cython", _kernels))
    else:
        print("compiled kernels not built; benchmarking the fallback only")

    print(f"{'workload':26s}" + "".join(f"{name:>12s}" for name, _ in impls)
          + ("     speedup" if len(impls) == 2 else ""))
    for label, kind, payload in build_workloads(args.full):
        times = []
        results = []
        for _name, impl in impls:
            dt, res = run_one(impl, kind, payload)
            times.append(dt)
            results.append(res)
        assert len(set(results)) == 1, f"backends disagree on {label}: {results}"
        line = f"{label:26s}" + "".join(f"{t:11.3f}s" for t in times)
        if len(times) == 2:
            line += f"  {times[1] / times[0]:9.1f}x"
        print(line + f"   (d={results[0]})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
