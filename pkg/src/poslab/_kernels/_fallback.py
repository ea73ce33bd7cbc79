"""NumPy implementations of the hot kernels.

Semantics must match poslab._kernels._core exactly: same inputs, same
outputs, same first-violation index.  Callers guarantee that every
intermediate in eval_poly_batch / sign_scan fits in int64 (the exact bound
check lives in poslab.properties, not here).
"""

import numpy as np

BACKEND = "fallback"


def eval_poly_batch(points, exps, coeffs):
    """Evaluate an integer polynomial at many integer points.

    points (S, n) int64, exps (T, n) int64, coeffs (T,) int64 -> (S,) int64.
    """
    points = np.ascontiguousarray(points, dtype=np.int64)
    exps = np.ascontiguousarray(exps, dtype=np.int64)
    coeffs = np.ascontiguousarray(coeffs, dtype=np.int64)
    S, n = points.shape
    out = np.zeros(S, dtype=np.int64)
    T = exps.shape[0]
    if T == 0 or S == 0:
        return out
    maxe = exps.max(axis=0)
    pows = []
    for v in range(n):
        top = int(maxe[v])
        tab = np.empty((top + 1, S), dtype=np.int64)
        tab[0] = 1
        col = points[:, v]
        for e in range(1, top + 1):
            np.multiply(tab[e - 1], col, out=tab[e])
        pows.append(tab)
    acc = np.empty(S, dtype=np.int64)
    for t in range(T):
        acc[:] = coeffs[t]
        erow = exps[t]
        for v in range(n):
            e = int(erow[v])
            if e:
                np.multiply(acc, pows[v][e], out=acc)
        np.add(out, acc, out=out)
    return out


def sign_scan(vf, vi, vj, vij, cp, cq):
    """First index where cp*vi*vj - cq*vf*vij < 0, or -1 if none."""
    delta = cp * (vi * vj) - cq * (vf * vij)
    bad = np.nonzero(delta < 0)[0]
    return int(bad[0]) if bad.size else -1


def exchange_scan(masks):
    """Check the basis exchange axiom on a sorted list of equal-popcount
    bitmasks.

    Returns None when the axiom holds, else (I, J, a) for the first failure
    in scan order: I and J by list position, removed bit a of I ascending.
    """
    mask_list = [int(m) for m in masks]
    present = set(mask_list)
    for I in mask_list:
        for J in mask_list:
            diff = I & ~J
            add = J & ~I
            while diff:
                abit = diff & -diff
                diff ^= abit
                base = I ^ abit
                cand = add
                ok = False
                while cand:
                    bbit = cand & -cand
                    cand ^= bbit
                    if (base | bbit) in present:
                        ok = True
                        break
                if not ok:
                    return (I, J, abit.bit_length() - 1)
    return None
