# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; semantics must match _fallback exactly.

Callers guarantee every intermediate fits in int64 and that mask lists are
sorted ascending (membership here is binary search).
"""

import numpy as np

BACKEND = "compiled"


def eval_poly_batch(points, exps, coeffs):
    """Evaluate an integer polynomial at many integer points.

    points (S, n) int64, exps (T, n) int64, coeffs (T,) int64 -> (S,) int64.
    """
    pts_arr = np.ascontiguousarray(points, dtype=np.int64)
    ex_arr = np.ascontiguousarray(exps, dtype=np.int64)
    cs_arr = np.ascontiguousarray(coeffs, dtype=np.int64)
    cdef long long[:, ::1] pts = pts_arr
    cdef long long[:, ::1] ex = ex_arr
    cdef long long[::1] cs = cs_arr
    cdef Py_ssize_t S = pts.shape[0]
    cdef Py_ssize_t n = pts.shape[1]
    cdef Py_ssize_t T = ex.shape[0]
    out_arr = np.zeros(S, dtype=np.int64)
    cdef long long[::1] out = out_arr
    if T == 0 or S == 0:
        return out_arr
    vmax_arr = np.zeros(n, dtype=np.int64)
    cdef long long[::1] vmax = vmax_arr
    cdef Py_ssize_t t, v, s
    cdef long long e, stride = 0
    for t in range(T):
        for v in range(n):
            if ex[t, v] > vmax[v]:
                vmax[v] = ex[t, v]
    for v in range(n):
        if vmax[v] + 1 > stride:
            stride = vmax[v] + 1
    # power tables laid out [v][e][s]: the s loops below stay contiguous so
    # the C compiler can vectorize the multiply-accumulate passes
    pow_arr = np.empty((n * stride, S), dtype=np.int64)
    cdef long long[:, ::1] pw = pow_arr
    acc_arr = np.empty(S, dtype=np.int64)
    cdef long long[::1] acc = acc_arr
    cdef long long coeff
    cdef Py_ssize_t row
    for v in range(n):
        row = v * stride
        for s in range(S):
            pw[row, s] = 1
        for e in range(1, vmax[v] + 1):
            for s in range(S):
                pw[row + e, s] = pw[row + e - 1, s] * pts[s, v]
    for t in range(T):
        coeff = cs[t]
        for s in range(S):
            acc[s] = coeff
        for v in range(n):
            e = ex[t, v]
            if e:
                row = v * stride + e
                for s in range(S):
                    acc[s] *= pw[row, s]
        for s in range(S):
            out[s] += acc[s]
    return out_arr


def sign_scan(vf, vi, vj, vij, cp, cq):
    """First index where cp*vi*vj - cq*vf*vij < 0, or -1 if none."""
    cdef long long[::1] a = np.ascontiguousarray(vf, dtype=np.int64)
    cdef long long[::1] b = np.ascontiguousarray(vi, dtype=np.int64)
    cdef long long[::1] c = np.ascontiguousarray(vj, dtype=np.int64)
    cdef long long[::1] d = np.ascontiguousarray(vij, dtype=np.int64)
    cdef long long p = cp
    cdef long long q = cq
    cdef Py_ssize_t k
    cdef Py_ssize_t S = a.shape[0]
    for k in range(S):
        if p * (b[k] * c[k]) - q * (a[k] * d[k]) < 0:
            return k
    return -1


cdef inline bint _member(unsigned long long[::1] ms, unsigned long long key):
    cdef Py_ssize_t lo = 0
    cdef Py_ssize_t hi = ms.shape[0]
    cdef Py_ssize_t mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if ms[mid] < key:
            lo = mid + 1
        elif ms[mid] > key:
            hi = mid
        else:
            return True
    return False


cdef inline int _bit_index(unsigned long long b):
    cdef int i = 0
    while b > 1:
        b >>= 1
        i += 1
    return i


def exchange_scan(masks):
    """Check the basis exchange axiom on a sorted list of equal-popcount
    bitmasks; returns None or the first failing (I, J, a) in scan order."""
    arr = np.array([int(m) for m in masks], dtype=np.uint64)
    cdef unsigned long long[::1] ms = arr
    cdef Py_ssize_t S = ms.shape[0]
    cdef Py_ssize_t ii, jj
    cdef unsigned long long I, J, diff, add, abit, base, cand, bbit
    cdef bint ok
    for ii in range(S):
        I = ms[ii]
        for jj in range(S):
            J = ms[jj]
            diff = I & ~J
            add = J & ~I
            while diff:
                abit = diff & (0 - diff)
                diff ^= abit
                base = I ^ abit
                cand = add
                ok = False
                while cand:
                    bbit = cand & (0 - cand)
                    cand ^= bbit
                    if _member(ms, base | bbit):
                        ok = True
                        break
                if not ok:
                    return (int(I), int(J), _bit_index(abit))
    return None
