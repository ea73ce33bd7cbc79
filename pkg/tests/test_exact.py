"""Exact linear algebra and univariate root counting against independent oracles."""

from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from poslab.errors import BadParams, NotSymmetric, RankDeficient
from poslab.exact import (
    RationalMatrix,
    UniPoly,
    char_poly,
    count_positive_eigenvalues,
    det,
    is_totally_nonnegative,
    maximal_minors,
    negative_real_roots,
    poly_gcd,
    rank,
    real_rooted,
    sturm_distinct_real_roots,
    vandermonde_matrix,
)
from poslab.sampling import raw_word


def _rand_matrix(seed, rows, cols, span=9):
    data = []
    for i in range(rows):
        row = []
        for j in range(cols):
            w = raw_word(seed, i * cols + j)
            row.append(Fraction(int(w % (2 * span + 1)) - span))
        data.append(row)
    return RationalMatrix(data)


def _det_cofactor(m):
    # n! Laplace expansion, the slow reference
    n = m.rows
    if n == 1:
        return m.data[0][0]
    total = Fraction(0)
    sub = [row[1:] for row in m.data]
    for i in range(n):
        minor = RationalMatrix([sub[r] for r in range(n) if r != i])
        sgn = -1 if i % 2 else 1
        total += sgn * m.data[i][0] * _det_cofactor(minor)
    return total


def test_det_against_cofactor_expansion():
    for trial in range(60):
        n = 1 + trial % 5
        m = _rand_matrix(100 + trial, n, n)
        assert det(m) == _det_cofactor(m)


def test_det_multiplicative():
    for trial in range(40):
        n = 2 + trial % 4
        a = _rand_matrix(200 + trial, n, n, span=4)
        b = _rand_matrix(300 + trial, n, n, span=4)
        prod = RationalMatrix(
            [
                [sum(a.data[i][k] * b.data[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
        )
        assert det(prod) == det(a) * det(b)


def test_rank_small_cases():
    assert rank(RationalMatrix([[Fraction(0), Fraction(0)], [Fraction(0), Fraction(0)]])) == 0
    assert rank(RationalMatrix([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])) == 1
    assert rank(RationalMatrix.identity(4)) == 4


def test_rank_of_outer_products():
    # sum of r rank-one outer products has rank <= r, and generically == r
    for trial in range(30):
        n, r = 4, 1 + trial % 3
        us = [_rand_matrix(400 + 7 * trial + t, n, 1) for t in range(r)]
        vs = [_rand_matrix(500 + 7 * trial + t, 1, n) for t in range(r)]
        data = [
            [
                sum(us[t].data[i][0] * vs[t].data[0][j] for t in range(r))
                for j in range(n)
            ]
            for i in range(n)
        ]
        assert rank(RationalMatrix(data)) <= r


def test_maximal_minors_match_direct_determinants():
    for trial in range(25):
        k, n = 2 + trial % 2, 4 + trial % 3
        m = _rand_matrix(600 + trial, k, n, span=5)
        try:
            pv = maximal_minors(m)
        except RankDeficient:
            assert rank(m) < k
            continue
        for cols in combinations(range(n), k):
            sub = m.column_submatrix(cols)
            assert pv.values.get(cols, Fraction(0)) == det(sub)


def test_maximal_minors_rank_deficient_raises():
    m = RationalMatrix([[Fraction(1), Fraction(2), Fraction(3)],
                        [Fraction(2), Fraction(4), Fraction(6)]])
    with pytest.raises(RankDeficient):
        maximal_minors(m)


def test_vandermonde_total_nonnegativity():
    vm = vandermonde_matrix(3, [Fraction(1), Fraction(2), Fraction(3), Fraction(5)])
    assert is_totally_nonnegative(vm).passed
    with pytest.raises(BadParams):
        vandermonde_matrix(2, [Fraction(2), Fraction(1)])
    with pytest.raises(BadParams):
        vandermonde_matrix(2, [Fraction(0), Fraction(1)])


def test_totally_nonnegative_detects_negative_minor():
    m = RationalMatrix([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]])
    v = is_totally_nonnegative(m)
    assert v.failed
    assert v.witness["minor"] == Fraction(-1)


def test_unipoly_arithmetic_and_divmod():
    p = UniPoly([Fraction(-6), Fraction(1), Fraction(1)])  # (t+3)(t-2)
    q = UniPoly([Fraction(3), Fraction(1)])
    quo, rem = p.divmod(q)
    assert rem.is_zero()
    assert quo.coeffs == (Fraction(-2), Fraction(1))
    assert p.evaluate(Fraction(2)) == 0
    assert p.derivative().coeffs == (Fraction(1), Fraction(2))


def test_char_poly_frozen_2x2():
    m = RationalMatrix([[Fraction(2), Fraction(4)], [Fraction(4), Fraction(2)]])
    cp = char_poly(m)
    # t^2 - 4t - 12, roots 6 and -2
    assert cp.coeffs == (Fraction(-12), Fraction(-4), Fraction(1))
    assert count_positive_eigenvalues(m) == (1, 0)


def test_char_poly_requires_symmetry():
    m = RationalMatrix([[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]])
    with pytest.raises(NotSymmetric):
        char_poly(m)


def test_char_poly_trace_and_det_coefficients():
    for trial in range(30):
        n = 2 + trial % 4
        a = _rand_matrix(700 + trial, n, n, span=4)
        sym = RationalMatrix(
            [[a.data[i][j] + a.data[j][i] for j in range(n)] for i in range(n)]
        )
        cp = char_poly(sym)
        assert cp.coeffs[-1] == 1
        trace = sum(sym.data[i][i] for i in range(n))
        assert cp.coeffs[n - 1] == -trace
        assert cp.coeffs[0] == (-1) ** n * det(sym)


def test_sturm_frozen_cases():
    # (t^2 - 2)(t^2 - 3): four distinct real roots
    p = UniPoly([Fraction(6), Fraction(0), Fraction(-5), Fraction(0), Fraction(1)])
    assert sturm_distinct_real_roots(p) == 4
    # t^2 + 1: none
    assert sturm_distinct_real_roots(UniPoly([Fraction(1), Fraction(0), Fraction(1)])) == 0
    # t^3: one distinct root even with multiplicity 3
    assert sturm_distinct_real_roots(UniPoly([0, 0, 0, Fraction(1)])) == 1
    distinct, all_real = real_rooted(UniPoly([0, 0, 0, Fraction(1)]))
    assert distinct == 1 and all_real


def test_real_rooted_against_numpy_spectra():
    # char polys of random symmetric integer matrices are always real rooted
    for trial in range(40):
        n = 2 + trial % 4
        a = _rand_matrix(800 + trial, n, n, span=3)
        sym = RationalMatrix(
            [[a.data[i][j] + a.data[j][i] for j in range(n)] for i in range(n)]
        )
        distinct, all_real = real_rooted(char_poly(sym))
        assert all_real
        eig = np.linalg.eigvalsh(np.array([[float(x) for x in row] for row in sym.data]))
        approx_distinct = len({round(v, 6) for v in eig})
        assert distinct == approx_distinct, (trial, eig)


def test_count_positive_eigenvalues_against_numpy():
    for trial in range(40):
        n = 2 + trial % 4
        a = _rand_matrix(900 + trial, n, n, span=3)
        sym = RationalMatrix(
            [[a.data[i][j] + a.data[j][i] for j in range(n)] for i in range(n)]
        )
        pos, nullity = count_positive_eigenvalues(sym)
        eig = np.linalg.eigvalsh(np.array([[float(x) for x in row] for row in sym.data]))
        assert pos == sum(1 for v in eig if v > 1e-8), (trial, eig)
        assert nullity == sum(1 for v in eig if abs(v) <= 1e-8), (trial, eig)


def test_negative_real_roots_with_zero_roots():
    # t^2 (t+1) (t-2): one negative root, zero roots deflated first
    p = UniPoly([0, 0, Fraction(-2), Fraction(-1), Fraction(1)])
    assert negative_real_roots(p) == 1
    # (t+1)(t+2)
    assert negative_real_roots(UniPoly([Fraction(2), Fraction(3), Fraction(1)])) == 2
    assert negative_real_roots(UniPoly([Fraction(2), Fraction(-3), Fraction(1)])) == 0


def test_poly_gcd_common_factor():
    a = UniPoly([Fraction(-1), Fraction(0), Fraction(1)])   # (t-1)(t+1)
    b = UniPoly([Fraction(-1), Fraction(1)])                # t-1
    g = poly_gcd(a, b)
    assert g.coeffs == (Fraction(-1), Fraction(1))
