#!/usr/bin/env python3
"""Compare the compiled and fallback kernel backends.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Times the three hot kernels on workloads shaped like the ones the
falsifiers generate: many small-integer points, a basis-polynomial-sized
term list, and a full basis family exchange scan.
"""

import argparse
import time
from itertools import combinations

import numpy as np

from poslab._kernels import _fallback
from poslab.matroids import basis_generating_polynomial, named
from poslab.sampling import raw_word

try:
    from poslab._kernels import _core
except ImportError:
    _core = None


def _timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_eval(mod, repeat):
    f = basis_generating_polynomial(named("choe-wagner-L"))
    exps = np.array(sorted(f.terms), dtype=np.int64)
    coeffs = np.ones(len(exps), dtype=np.int64)
    S, n = 20000, f.n
    pts = np.array(
        [[int(raw_word(1, s * n + v) % 33) - 16 for v in range(n)] for s in range(S)],
        dtype=np.int64,
    )
    return _timeit(lambda: mod.eval_poly_batch(pts, exps, coeffs), repeat)


def bench_sign(mod, repeat):
    # violation-free workload: both backends must inspect every entry
    S = 200000
    rng = np.random.default_rng(7)
    vi = np.abs(rng.integers(-1000, 1000, size=S)).astype(np.int64)
    vj = np.abs(rng.integers(-1000, 1000, size=S)).astype(np.int64)
    vf = np.zeros(S, dtype=np.int64)
    vij = np.zeros(S, dtype=np.int64)
    return _timeit(lambda: mod.sign_scan(vf, vi, vj, vij, 8, 7), repeat)


def bench_exchange(mod, repeat):
    masks = np.array(
        sorted(sum(1 << e for e in c) for c in combinations(range(14), 7)),
        dtype=np.uint64,
    )
    return _timeit(lambda: mod.exchange_scan(masks), repeat)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("fallback", _fallback)]
    if _core is not None:
        backends.append(("compiled", _core))
    else:
        print("note: compiled backend not built; showing fallback only")

    rows = []
    for bench_name, bench in (
        ("eval_poly_batch 20k pts x 309 terms", bench_eval),
        ("sign_scan 200k", bench_sign),
        ("exchange_scan C(14,7)", bench_exchange),
    ):
        outs = {}
        times = {}
        for name, mod in backends:
            dt, out = bench(mod, args.repeat)
            times[name] = dt
            outs[name] = out
        if len(outs) == 2:
            a, b = outs["fallback"], outs["compiled"]
            same = (
                np.array_equal(a, b)
                if isinstance(a, np.ndarray)
                else a == b
            )
            assert same, f"{bench_name}: backends disagree"
        rows.append((bench_name, times))

    width = max(len(r[0]) for r in rows)
    header = f"{'kernel':<{width}}  " + "  ".join(f"{n:>10}" for n, _ in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for bench_name, times in rows:
        line = f"{bench_name:<{width}}  " + "  ".join(
            f"{times[n] * 1e3:9.2f}ms" for n, _ in backends
        )
        if len(backends) == 2 and times["compiled"] > 0:
            line += f"  {times['fallback'] / times['compiled']:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
