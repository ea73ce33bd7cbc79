"""Tropical Pluecker relations, positive parts, flags, and Lorentzian lifts.

Weight vectors live on the bases of an explicit matroid; everything off the
support counts as +infinity.  MIN_PLUS weights are orders of vanishing,
MAX_PLUS weights are valuations; min_values() normalizes to the former, in
which the three-term relation reads "the minimum is attained at least
twice" and the positive part pins the interlacing product to the minimum.
"""

from fractions import Fraction
from itertools import combinations
from math import lcm

from . import verdicts
from .bitsets import bits, mask_of, subset_tuple
from .errors import (
    ChainTooShort,
    ConstituentNotValuated,
    InvalidChain,
    NotAPositroid,
    NotValuated,
    SupportMismatch,
    ZeroCoefficientStored,
)
from .multipoly import MultiPoly
from .positroids import is_positroid, matrix_minors
from .properties import MIN_PLUS, MAX_PLUS, DiscreteFunction, is_lorentzian
from .puiseux import PuiseuxPoly


class WeightVector:
    """Rational weights on exactly the bases of a matroid."""

    __slots__ = ("matroid", "values", "convention")

    def __init__(self, matroid, values, convention=MIN_PLUS):
        if convention not in (MIN_PLUS, MAX_PLUS):
            raise ValueError(f"unknown convention {convention!r}")
        vals = {}
        for key, v in (values.items() if isinstance(values, dict) else values):
            m = key if isinstance(key, int) else mask_of(key)
            vals[m] = Fraction(v)
        if set(vals) != matroid.bases:
            extra = sorted(set(vals) - matroid.bases)
            missing = sorted(matroid.bases - set(vals))
            raise SupportMismatch(
                f"weights must cover exactly the bases; "
                f"extra={[subset_tuple(m) for m in extra]}, "
                f"missing={[subset_tuple(m) for m in missing]}"
            )
        self.matroid = matroid
        self.values = vals
        self.convention = convention

    def min_values(self):
        """Weights in the min-plus (order of vanishing) orientation."""
        if self.convention == MIN_PLUS:
            return dict(self.values)
        return {m: -v for m, v in self.values.items()}

    def as_discrete_function(self):
        n = self.matroid.n
        vals = {}
        for m, v in self.values.items():
            exp = [0] * n
            for e in bits(m):
                exp[e] = 1
            vals[tuple(exp)] = v
        return DiscreteFunction(n, vals, self.convention)

    def items_by_set(self):
        return sorted((subset_tuple(m), v) for m, v in self.values.items())

    def __repr__(self):
        return (f"WeightVector({self.matroid!r}, {self.convention}-plus, "
                f"{len(self.values)} weights)")


def tropicalize(f):
    """Coefficient orders and leading signs of a MultiPoly over Puiseux.

    Returns (DiscreteFunction in MIN_PLUS, sign dict).  Fraction
    coefficients are treated as order-0 series.
    """
    vals = {}
    signs = {}
    for exp, c in f.terms.items():
        if isinstance(c, PuiseuxPoly):
            if c.is_zero():
                raise ZeroCoefficientStored(f"zero series stored at {exp}")
            vals[exp] = c.order()
            signs[exp] = c.sign_at_zero_plus()
        else:
            c = Fraction(c)
            if not c:
                raise ZeroCoefficientStored(f"zero coefficient stored at {exp}")
            vals[exp] = Fraction(0)
            signs[exp] = 1 if c > 0 else -1
    return DiscreteFunction(f.n, vals, MIN_PLUS), signs


def weights_of_minors(rows):
    """(matroid, WeightVector, signs) from a Puiseux matrix via its minors."""
    from .positroids import positroid_of_matrix

    minors = matrix_minors(rows)
    matroid = positroid_of_matrix(rows)
    vals = {}
    signs = {}
    for cols, v in minors.items():
        if not v:
            continue
        m = mask_of(cols)
        if isinstance(v, PuiseuxPoly):
            vals[m] = v.order()
            signs[m] = v.sign_at_zero_plus()
        else:
            vals[m] = Fraction(0)
            signs[m] = 1 if v > 0 else -1
    return matroid, WeightVector(matroid, vals, MIN_PLUS), signs


def _sum_or_none(a, b):
    if a is None or b is None:
        return None
    return a + b


def _three_sums(vals, smask, a, b, c, d):
    def get(x, y):
        return vals.get(smask | (1 << x) | (1 << y))

    p1 = _sum_or_none(get(a, b), get(c, d))
    p2 = _sum_or_none(get(a, c), get(b, d))
    p3 = _sum_or_none(get(a, d), get(b, c))
    return p1, p2, p3


def _check_support(m, w):
    if w.matroid != m:
        raise SupportMismatch("weight vector lives on a different matroid")


def is_in_dressian(m, w):
    """Three-term tropical Pluecker relations over the bases of m.

    For every (k-2)-subset S and quadruple a<b<c<d outside S, the minimum
    of the three pair sums must be attained at least twice (missing bases
    count as +infinity; a relation with no finite sum is vacuous).
    """
    _check_support(m, w)
    vals = w.min_values()
    n, k = m.n, m.rank
    checked = 0
    if k >= 2:
        for S in combinations(range(n), k - 2):
            smask = mask_of(S)
            rest = [e for e in range(n) if not (smask >> e) & 1]
            for quad in combinations(rest, 4):
                checked += 1
                p1, p2, p3 = _three_sums(vals, smask, *quad)
                finite = [p for p in (p1, p2, p3) if p is not None]
                if not finite:
                    continue
                low = min(finite)
                if sum(1 for p in finite if p == low) < 2:
                    return verdicts.failed(
                        {"S": S, "quad": quad, "sums": (p1, p2, p3)},
                        effort={"relations": checked},
                    )
    return verdicts.certified("pluecker-three-term",
                              effort={"relations": checked})


def is_in_positive_dressian(m, w):
    """Positive part: the interlacing sum equals the min of the other two.

    Requires a positroid support (raises NotAPositroid otherwise).  For a
    quadruple a<b<c<d outside S the interlacing pair sum is
    mu(Sac) + mu(Sbd); it must equal min(mu(Sab)+mu(Scd), mu(Sad)+mu(Sbc)),
    infinities included on both sides.
    """
    _check_support(m, w)
    pos = is_positroid(m)
    if pos.failed:
        raise NotAPositroid(
            f"support is not a positroid; extra basis "
            f"{pos.witness['extra_basis']} in its necklace envelope"
        )
    vals = w.min_values()
    n, k = m.n, m.rank
    checked = 0
    if k >= 2:
        for S in combinations(range(n), k - 2):
            smask = mask_of(S)
            rest = [e for e in range(n) if not (smask >> e) & 1]
            for quad in combinations(rest, 4):
                checked += 1
                p1, p2, p3 = _three_sums(vals, smask, *quad)
                outer = [p for p in (p1, p3) if p is not None]
                rhs = min(outer) if outer else None
                if p2 != rhs:
                    return verdicts.failed(
                        {"S": S, "quad": quad, "sums": (p1, p2, p3)},
                        effort={"relations": checked},
                    )
    return verdicts.certified("positive-three-term",
                              effort={"relations": checked})


# ------------------------------------------------------------------- lifts

def lift_to_lorentzian(w):
    """The series-coefficient polynomial sum_B t^{mu(B)} x^B.

    Requires Dressian membership (NotValuated otherwise).  Small positive
    evaluations of the result are the Lorentzian witnesses the schedule
    checker consumes.
    """
    d = is_in_dressian(w.matroid, w)
    if d.failed:
        raise NotValuated(f"weights violate a three-term relation: {d.witness}")
    n = w.matroid.n
    terms = {}
    for m, mu in w.min_values().items():
        exp = [0] * n
        for e in bits(m):
            exp[e] = 1
        terms[tuple(exp)] = PuiseuxPoly.t_power(mu)
    return MultiPoly(n, terms)


def evaluate_lift(fk, t0):
    """Substitute a positive rational t0 into the series coefficients."""
    t0 = Fraction(t0)
    terms = {}
    for exp, c in fk.terms.items():
        v = c.eval_at(t0) if isinstance(c, PuiseuxPoly) else Fraction(c)
        terms[exp] = v
    return MultiPoly(fk.n, terms)


def lorentzian_schedule(w, steps=10):
    """Lorentzian verdicts for the lift along t0 = 2^-(q m), m = 1..steps.

    q is the lcm of weight denominators so every evaluation is exact.  The
    overall verdict is the stabilized tail: PASS_SAMPLED when the last
    three steps all certify, FAIL otherwise with the schedule attached.
    """
    if steps < 3:
        raise ValueError("schedule needs at least three steps")
    fk = lift_to_lorentzian(w)
    q = 1
    for mu in w.min_values().values():
        q = lcm(q, mu.denominator)
    schedule = []
    statuses = []
    for m in range(1, steps + 1):
        t0 = Fraction(1, 2 ** (q * m))
        inner = is_lorentzian(evaluate_lift(fk, t0))
        schedule.append({"m": q * m, "t0": t0, "status": inner.status})
        statuses.append(inner.passed)
    effort = {"steps": steps}
    if all(statuses[-3:]):
        return verdicts.sampled(witness={"schedule": schedule}, effort=effort)
    return verdicts.failed(
        {"clause": "schedule-tail", "schedule": schedule}, effort=effort
    )


# ------------------------------------------------------------------- flags

class FlagChain:
    """Weighted matroids on one ground set with strictly increasing ranks."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if not parts:
            raise InvalidChain("chain must contain at least one constituent")
        n = parts[0].matroid.n
        for w in parts:
            if w.matroid.n != n:
                raise InvalidChain("constituents must share the ground set")
        ranks = [w.matroid.rank for w in parts]
        if any(r >= s for r, s in zip(ranks, ranks[1:])):
            raise InvalidChain(f"ranks must strictly increase, got {ranks}")
        self.parts = parts

    @property
    def n(self):
        return self.parts[0].matroid.n

    def ranks(self):
        return tuple(w.matroid.rank for w in self.parts)

    def __repr__(self):
        return f"FlagChain(n={self.n}, ranks={self.ranks()})"


def is_valuated_flag(chain):
    """Constituent Dressian membership plus consecutive incidence relations.

    For consecutive ranks r < s, every (r-1)-subset S and (s+1)-subset T
    must see the minimum of mu_r(S+j) + mu_s(T-j) over j in T minus S
    attained at least twice (+infinity off-support, vacuous when no sum is
    finite, violated when exactly one is).
    """
    if len(chain.parts) < 2:
        raise ChainTooShort("a flag needs at least two constituents")
    for idx, w in enumerate(chain.parts):
        inner = is_in_dressian(w.matroid, w)
        if inner.failed:
            raise ConstituentNotValuated(idx, inner.witness)
    n = chain.n
    checked = 0
    for level in range(len(chain.parts) - 1):
        w1, w2 = chain.parts[level], chain.parts[level + 1]
        r, s = w1.matroid.rank, w2.matroid.rank
        v1 = w1.min_values()
        v2 = w2.min_values()
        for S in combinations(range(n), r - 1):
            smask = mask_of(S)
            for T in combinations(range(n), s + 1):
                tmask = mask_of(T)
                checked += 1
                sums = []
                for j in T:
                    if (smask >> j) & 1:
                        continue
                    a = v1.get(smask | (1 << j))
                    b = v2.get(tmask ^ (1 << j))
                    if a is not None and b is not None:
                        sums.append(a + b)
                    else:
                        sums.append(None)
                finite = [p for p in sums if p is not None]
                if not finite:
                    continue
                low = min(finite)
                if sum(1 for p in finite if p == low) < 2:
                    return verdicts.failed(
                        {"level": level, "S": S, "T": T, "sums": tuple(sums)},
                        effort={"relations": checked},
                    )
    return verdicts.certified("incidence-three-term",
                              effort={"relations": checked})


def flag_lorentzian_lift(chain):
    """Lifts of every constituent of a valuated flag, in chain order."""
    v = is_valuated_flag(chain)
    if v.failed:
        raise NotValuated(f"incidence relation fails: {v.witness}")
    return tuple(lift_to_lorentzian(w) for w in chain.parts)
