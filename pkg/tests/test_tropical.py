"""Tropical relations, lifts, schedules, and flags."""

from fractions import Fraction

import pytest

from poslab.errors import (
    ChainTooShort,
    ConstituentNotValuated,
    InvalidChain,
    NotAPositroid,
    NotValuated,
    SupportMismatch,
    ZeroCoefficientStored,
)
from poslab.matroids import GroundSet, matroid_from_bases, named, uniform
from poslab.multipoly import MultiPoly
from poslab.properties import is_lorentzian, is_valuated_matroid
from poslab.puiseux import PuiseuxPoly
from poslab.sampling import derive_seed, raw_word
from poslab.tropical import (
    FlagChain,
    WeightVector,
    evaluate_lift,
    flag_lorentzian_lift,
    is_in_dressian,
    is_in_positive_dressian,
    is_valuated_flag,
    lift_to_lorentzian,
    lorentzian_schedule,
    tropicalize,
    weights_of_minors,
)

U24 = uniform(2, 4)
U24_SETS = sorted(U24.bases_sets())


def _w24(vals, convention="min"):
    return WeightVector(U24, dict(zip(U24_SETS, map(Fraction, vals))), convention)


def test_weight_vector_support_must_match():
    with pytest.raises(SupportMismatch):
        WeightVector(U24, {U24_SETS[0]: Fraction(1)})
    bad = dict(zip(U24_SETS, [Fraction(0)] * 6))
    bad[(0, 1, 2)] = Fraction(1)
    with pytest.raises(SupportMismatch):
        WeightVector(U24, bad)


def test_convention_flip_negates_min_view():
    w = _w24([2, 1, 0, 1, 0, 0], convention="max")
    mv = w.min_values()
    by_set = {tuple(sorted(b)): v for b, v in w.items_by_set()}
    assert by_set[(0, 1)] == Fraction(2)
    # stored as valuation; the ord view negates
    from poslab.bitsets import mask_of

    assert mv[mask_of((0, 1))] == Fraction(-2)


def test_puiseux_vandermonde_weights():
    t = PuiseuxPoly.t_power
    one = PuiseuxPoly.const(1)
    rows = [[one, one, one, one], [t(2), t(3), t(1), t(0)]]
    m, w, signs = weights_of_minors(rows)
    assert m.bases == U24.bases
    assert [v for _, v in w.items_by_set()] == [
        Fraction(2),
        Fraction(1),
        Fraction(0),
        Fraction(1),
        Fraction(0),
        Fraction(0),
    ]
    assert is_in_dressian(m, w).passed
    assert is_in_positive_dressian(m, w).passed


def test_dressian_counterexample_min_attained_once():
    w = _w24([0, 1, 2, 2, 1, 0])
    v = is_in_dressian(U24, w)
    assert v.failed
    assert v.witness["S"] == ()
    assert v.witness["quad"] == (0, 1, 2, 3)
    s = v.witness["sums"]
    assert sorted(p for p in s if p is not None)[0] == min(p for p in s if p is not None)


def test_positive_dressian_strictly_smaller():
    # in the Dressian but the middle sum exceeds the outer minimum
    w = _w24([0, 1, 0, 0, 1, 0])
    assert is_in_dressian(U24, w).passed
    v = is_in_positive_dressian(U24, w)
    assert v.failed
    p1, p2, p3 = v.witness["sums"]
    assert p2 > min(p1, p3)


def test_positive_dressian_requires_positroid():
    fano = named("fano")
    zero = WeightVector(fano, {b: Fraction(0) for b in fano.bases_sorted()})
    with pytest.raises(NotAPositroid):
        is_in_positive_dressian(fano, zero)


def test_dressian_matches_valuated_matroid_small_loop():
    for trial in range(200):
        s = derive_seed(99, trial)
        vals = [int(raw_word(s, j) % 7) - 3 for j in range(6)]
        w = _w24(vals)
        a = is_in_dressian(U24, w).passed
        b = is_valuated_matroid(w.as_discrete_function()).passed
        assert a == b, vals


def test_tropicalize_round_trip():
    t = PuiseuxPoly.t_power
    fk = MultiPoly(
        2,
        {
            (1, 1): t(Fraction(3, 2)) * 2,
            (2, 0): PuiseuxPoly.const(1),
        },
    )
    df, signs = tropicalize(fk)
    assert df.values == {(1, 1): Fraction(3, 2), (2, 0): Fraction(0)}
    assert signs == {(1, 1): 1, (2, 0): 1}
    # the constructor filters zeros; a mutated terms dict must still be caught
    broken = MultiPoly(1, {(1,): PuiseuxPoly.const(1)})
    broken.terms[(1,)] = PuiseuxPoly.zero()
    with pytest.raises(ZeroCoefficientStored):
        tropicalize(broken)


def test_lift_round_trip_recovers_weights():
    for trial in range(40):
        s = derive_seed(123, trial)
        vals = [Fraction(int(raw_word(s, j) % 9) - 4, 1 + int(raw_word(s, j + 6) % 2)) for j in range(6)]
        w = _w24(vals)
        if not is_in_dressian(U24, w).passed:
            continue
        fk = lift_to_lorentzian(w)
        df, signs = tropicalize(fk)
        got = {exp: v for exp, v in df.values.items()}
        want = w.as_discrete_function().convex_values()
        assert got == want, (trial, vals)
        assert all(sg == 1 for sg in signs.values())


def test_lift_rejects_non_valuated():
    w = _w24([0, 1, 2, 2, 1, 0])
    with pytest.raises(NotValuated):
        lift_to_lorentzian(w)


def test_evaluated_lifts_are_lorentzian():
    t = PuiseuxPoly.t_power
    one = PuiseuxPoly.const(1)
    rows = [[one, one, one, one], [t(2), t(3), t(1), t(0)]]
    _, w, _ = weights_of_minors(rows)
    fk = lift_to_lorentzian(w)
    for t0 in (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)):
        f = evaluate_lift(fk, t0)
        # the lift at t0 has coefficients t0^mu(B)
        assert f.terms[(1, 1, 0, 0)] == t0 ** 2
        assert f.terms[(0, 0, 1, 1)] == 1
        v = is_lorentzian(f)
        assert v.status == "PASS_CERTIFIED", t0


def test_schedule_shrinks_t_and_passes():
    t = PuiseuxPoly.t_power
    one = PuiseuxPoly.const(1)
    rows = [[one, one, one, one], [t(2), t(3), t(1), t(0)]]
    _, w, _ = weights_of_minors(rows)
    sched = lorentzian_schedule(w, steps=5)
    assert sched.status == "PASS_SAMPLED"
    ts = [step["t0"] for step in sched.witness["schedule"]]
    assert ts == sorted(ts, reverse=True)
    assert all(step["status"] == "PASS_CERTIFIED" for step in sched.witness["schedule"])


def test_schedule_respects_fractional_weights():
    # half-integer weights force denominator-2 exponents; t0 must be 4^-m
    w = _w24([Fraction(1, 2), 0, 0, 0, 0, Fraction(1, 2)])
    if is_in_dressian(U24, w).passed:
        sched = lorentzian_schedule(w, steps=3)
        ts = [step["t0"] for step in sched.witness["schedule"]]
        assert ts[0] == Fraction(1, 4)


def test_flag_chain_validation():
    def zerow(m):
        return WeightVector(m, {b: Fraction(0) for b in m.bases_sorted()})

    with pytest.raises(InvalidChain):
        FlagChain([])
    with pytest.raises(InvalidChain):
        FlagChain([zerow(uniform(2, 4)), zerow(uniform(2, 4))])
    with pytest.raises(InvalidChain):
        FlagChain([zerow(uniform(1, 4)), zerow(uniform(2, 5))])
    with pytest.raises(ChainTooShort):
        is_valuated_flag(FlagChain([zerow(uniform(2, 4))]))


def test_zero_weight_uniform_flags_pass():
    def zerow(m):
        return WeightVector(m, {b: Fraction(0) for b in m.bases_sorted()})

    for n in (3, 4, 5):
        chain = FlagChain([zerow(uniform(k, n)) for k in range(1, n)])
        v = is_valuated_flag(chain)
        assert v.status == "PASS_CERTIFIED", n


def test_non_quotient_pair_fails_with_witness():
    def zerow(m):
        return WeightVector(m, {b: Fraction(0) for b in m.bases_sorted()})

    m1 = matroid_from_bases(GroundSet(3), [(0,)])
    chain = FlagChain([zerow(m1), zerow(uniform(2, 3))])
    v = is_valuated_flag(chain)
    assert v.failed
    assert v.witness["level"] == 0
    assert v.witness["S"] == ()
    assert v.witness["T"] == (0, 1, 2)


def test_flag_constituent_failure_carries_index():
    def zerow(m):
        return WeightVector(m, {b: Fraction(0) for b in m.bases_sorted()})

    bad = _w24([0, 1, 2, 2, 1, 0])
    with pytest.raises(ConstituentNotValuated) as ei:
        is_valuated_flag(FlagChain([zerow(uniform(1, 4)), bad]))
    assert ei.value.index == 1


def test_flag_lift_levels_all_lorentzian():
    def zerow(m):
        return WeightVector(m, {b: Fraction(0) for b in m.bases_sorted()})

    chain = FlagChain([zerow(uniform(k, 4)) for k in (1, 2, 3)])
    lifted = flag_lorentzian_lift(chain)
    assert len(lifted) == 3
    for fk in lifted:
        f = evaluate_lift(fk, Fraction(1, 2))
        assert is_lorentzian(f).passed
    m1 = matroid_from_bases(GroundSet(3), [(0,)])
    bad = FlagChain([zerow(m1), zerow(uniform(2, 3))])
    with pytest.raises(NotValuated):
        flag_lorentzian_lift(bad)
