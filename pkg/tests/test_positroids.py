"""Necklace extraction, Gale order, and the round-trip recognizer."""

from fractions import Fraction
from itertools import combinations

import pytest

from poslab.bitsets import mask_of
from poslab.errors import InvalidNecklace
from poslab.exact import vandermonde_matrix
from poslab.matroids import matroid_from_bases, named, uniform, GroundSet
from poslab.positroids import (
    Necklace,
    gale_leq,
    grassmann_necklace,
    is_positroid,
    matrix_minors,
    positroid_from_necklace,
    positroid_of_matrix,
    representing_polynomial,
)
from poslab.properties import is_lorentzian
from poslab.sampling import raw_word


def test_uniform_necklace_is_cyclic_window():
    neck = grassmann_necklace(uniform(2, 4))
    assert neck.entry_sets() == [(0, 1), (1, 2), (2, 3), (0, 3)]
    neck2 = grassmann_necklace(uniform(3, 5))
    assert neck2.entry_sets()[0] == (0, 1, 2)
    assert neck2.entry_sets()[2] == (2, 3, 4)


def test_gale_order_basic():
    n = 4
    a, b = mask_of((0, 1)), mask_of((2, 3))
    assert gale_leq(a, b, 0, n)
    assert not gale_leq(b, a, 0, n)
    # shift by 2 reverses which end of the cycle is "small"
    assert gale_leq(b, a, 2, n)
    assert gale_leq(a, a, 1, n)


def test_necklace_coherence_validation():
    # entry i+1 must keep I_i minus {i}; this one drops an unrelated element
    with pytest.raises(InvalidNecklace):
        Necklace(4, 2, [mask_of((0, 1)), mask_of((2, 3)), mask_of((2, 3)), mask_of((0, 3))])


def test_uniform_matroids_are_positroids():
    for n in range(1, 7):
        for k in range(0, min(3, n) + 1):
            v = is_positroid(uniform(k, n))
            assert v.status == "PASS_CERTIFIED", (k, n)
            assert v.certificate == "necklace-round-trip"


def test_fano_vamos_not_positroids():
    for name in ("fano", "vamos"):
        m = named(name)
        v = is_positroid(m)
        assert v.failed, name
        extra = v.witness["extra_basis"]
        env = positroid_from_necklace(grassmann_necklace(m))
        # the witness basis belongs to the envelope but not to m
        assert env.contains_basis(mask_of(extra))
        assert not m.contains_basis(mask_of(extra))
        # round trip on the envelope itself certifies
        assert is_positroid(env).passed


def test_round_trip_fixed_points_random_tnn():
    # matroids of totally nonnegative matrices are positroids
    for trial in range(20):
        k, n = 2, 4 + trial % 2
        # strictly increasing positive params keep all minors nonnegative
        base = 1 + int(raw_word(2100 + trial, 0) % 3)
        params = []
        p = Fraction(base)
        for v in range(n):
            p = p + 1 + int(raw_word(2100 + trial, v + 1) % 3)
            params.append(p)
        vm = vandermonde_matrix(k, params)
        m = positroid_of_matrix(vm.data)
        assert is_positroid(m).passed, (trial, params)


def test_positroid_with_parallel_elements():
    rows = [
        [Fraction(1), Fraction(1), Fraction(1), Fraction(1)],
        [Fraction(0), Fraction(0), Fraction(1), Fraction(2)],
    ]
    m = positroid_of_matrix(rows)
    assert not m.contains_basis(mask_of((0, 1)))
    assert len(m.bases) == 5
    assert is_positroid(m).passed


def test_non_positroid_rank2_example():
    # bases {01, 23}: fails exchange, never a matroid; a sparse paving one
    # instead: all pairs except {0,2} on 4 elements (crossing removal)
    bases = [b for b in combinations(range(4), 2) if b != (0, 2)]
    m = matroid_from_bases(GroundSet(4), bases)
    v = is_positroid(m)
    assert v.failed
    assert v.witness["extra_basis"] == (0, 2)


def test_matrix_minors_and_representing_polynomial():
    vm = vandermonde_matrix(2, [Fraction(1), Fraction(2), Fraction(3), Fraction(4)])
    minors = matrix_minors(vm.data)
    for cols, val in minors.items():
        sub = vm.column_submatrix(cols).data
        assert val == sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
    f = representing_polynomial(vm.data)
    assert f.is_multiaffine() and f.is_homogeneous() == (True, 2)
    assert f.has_nonnegative_coeffs()
    assert is_lorentzian(f).passed


def test_positroid_of_matrix_rejects_forbidden_minor_sign():
    rows = [
        [Fraction(0), Fraction(1)],
        [Fraction(1), Fraction(0)],
    ]
    m = positroid_of_matrix(rows)
    # the matroid is U(2,2) either way; recognition still passes since the
    # matroid does not remember signs
    assert is_positroid(m).passed
