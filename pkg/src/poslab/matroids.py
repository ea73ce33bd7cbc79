"""Matroids on small ground sets, stored as explicit basis lists (bitmasks).

Elements are 0-based ints below n; optional labels are display-only.  The
basis exchange validation routes through the kernel layer so large basis
families (a few hundred bases) stay cheap.
"""

import re
from fractions import Fraction
from itertools import combinations

from . import verdicts
from .bitsets import bits, k_subset_masks, mask_of, popcount, subset_tuple
from .errors import (
    BadRank,
    DependentContraction,
    EmptyBases,
    EmptyResult,
    ExchangeFailure,
    MixedCardinality,
    NoTransversal,
    OverlapError,
    SameElement,
    UnknownName,
)
from .multipoly import MultiPoly
from ._kernels import exchange_scan


class GroundSet:
    """Ground set {0..n-1} with optional display labels."""

    __slots__ = ("n", "labels")

    def __init__(self, n, labels=None):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"ground set needs n >= 1, got {n!r}")
        if n > 63:
            raise ValueError("ground sets are capped at 63 elements (bitmasks)")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValueError("labels must be n distinct strings")
        self.n = n
        self.labels = labels

    def label(self, e):
        return self.labels[e] if self.labels else str(e + 1)

    def display(self, mask):
        return [self.label(e) for e in bits(mask)]

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.n == other.n

    def __repr__(self):
        return f"GroundSet(n={self.n})"


class SetSystem:
    """Ordered collection of subsets of a ground set."""

    __slots__ = ("ground", "sets")

    def __init__(self, ground, sets):
        self.ground = ground
        masks = []
        full = (1 << ground.n) - 1
        for s in sets:
            m = s if isinstance(s, int) else mask_of(s)
            if m & ~full:
                raise ValueError(f"set {subset_tuple(m)} leaves the ground set")
            masks.append(m)
        if not masks:
            raise EmptyBases("set system must contain at least one set")
        self.sets = tuple(masks)

    def __repr__(self):
        return f"SetSystem({[subset_tuple(m) for m in self.sets]})"


class Matroid:
    """Immutable matroid given by its bases."""

    __slots__ = ("ground", "rank", "_bases", "_sorted")

    def __init__(self, ground, rank, bases, _validated=False):
        self.ground = ground
        self.rank = rank
        self._bases = frozenset(bases)
        self._sorted = None

    @property
    def n(self):
        return self.ground.n

    @property
    def bases(self):
        return self._bases

    def bases_sorted(self):
        if self._sorted is None:
            self._sorted = tuple(sorted(self._bases))
        return self._sorted

    def bases_sets(self):
        return [subset_tuple(b) for b in self.bases_sorted()]

    def contains_basis(self, mask):
        return mask in self._bases

    def is_independent(self, mask):
        return any(b & mask == mask for b in self._bases)

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and self.n == other.n
            and self.rank == other.rank
            and self._bases == other._bases
        )

    def __hash__(self):
        return hash((self.n, self.rank, self._bases))

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self._bases)})"


def matroid_from_bases(ground, bases, rank=None, validate=True):
    """Build a matroid from explicit bases (iterables of elements or masks).

    ground may be an int n or a GroundSet.  With validate=True the basis
    exchange axiom is checked and the first failing (I, J, a) is raised.
    """
    if isinstance(ground, int):
        ground = GroundSet(ground)
    full = (1 << ground.n) - 1
    masks = set()
    for b in bases:
        m = b if isinstance(b, int) else mask_of(b)
        if m & ~full:
            raise ValueError(f"basis {subset_tuple(m)} leaves the ground set")
        masks.add(m)
    if not masks:
        raise EmptyBases("a matroid needs at least one basis")
    sizes = {popcount(m) for m in masks}
    if len(sizes) > 1:
        expected = popcount(next(iter(masks)))
        bad = next(m for m in masks if popcount(m) != expected)
        raise MixedCardinality(subset_tuple(bad), expected)
    k = sizes.pop()
    if rank is not None and rank != k:
        raise BadRank(f"declared rank {rank} but bases have size {k}")
    if validate:
        failure = exchange_scan(sorted(masks))
        if failure is not None:
            I, J, a = failure
            raise ExchangeFailure(subset_tuple(I), subset_tuple(J), a)
    return Matroid(ground, k, masks, _validated=True)


def uniform(k, n, labels=None):
    if not (0 <= k <= n):
        raise BadRank(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    ground = GroundSet(n, labels)
    return Matroid(ground, k, set(k_subset_masks(n, k)), _validated=True)


# ------------------------------------------------------------- transversal

def _augment(e, adj, match_set, seen):
    for s in adj[e]:
        if s in seen:
            continue
        seen.add(s)
        if match_set[s] == -1 or _augment(match_set[s], adj, match_set, seen):
            match_set[s] = e
            return True
    return False


def transversal_matroid(system, rank_hint=None):
    """Matroid of partial-transversal supports of a set system.

    Bases are the element sets matchable into distinct members of the
    system, of maximum size.  rank_hint, when given, is asserted against
    the computed rank.
    """
    n = system.ground.n
    sets = system.sets
    adj = [[s for s, m in enumerate(sets) if (m >> e) & 1] for e in range(n)]
    match_set = [-1] * len(sets)
    rank = 0
    for e in range(n):
        if _augment(e, adj, match_set, set()):
            rank += 1
    if rank == 0:
        raise NoTransversal("no element of the ground set lies in any set")
    if rank_hint is not None and rank_hint != rank:
        raise NoTransversal(f"rank hint {rank_hint} but maximum transversal is {rank}")

    bases = set()
    for combo in combinations(range(n), rank):
        match = [-1] * len(sets)
        ok = all(_augment(e, adj, match, set()) for e in combo)
        if ok:
            bases.add(mask_of(combo))
    return Matroid(system.ground, rank, bases, _validated=True)


# ------------------------------------------------------------ constructions

class MinorResult:
    """Minor plus the old-element index for each new element."""

    __slots__ = ("matroid", "kept")

    def __init__(self, matroid, kept):
        self.matroid = matroid
        self.kept = kept

    def __repr__(self):
        return f"MinorResult({self.matroid!r}, kept={self.kept})"


def minor(m, deleted=(), contracted=()):
    """Delete and contract, restricted to bases that survive both.

    The returned bases are {B - C : B basis, C subset of B, B meets no
    deleted element}; EmptyResult is raised when no basis survives (for
    instance when a coloop is deleted).
    """
    dmask = mask_of(deleted)
    cmask = mask_of(contracted)
    full = (1 << m.n) - 1
    if (dmask | cmask) & ~full:
        raise ValueError("deleted/contracted elements leave the ground set")
    if dmask & cmask:
        raise OverlapError(
            f"elements {subset_tuple(dmask & cmask)} both deleted and contracted"
        )
    if not m.is_independent(cmask):
        raise DependentContraction(
            f"contracted set {subset_tuple(cmask)} is dependent"
        )
    survivors = [b for b in m.bases_sorted() if b & dmask == 0 and b & cmask == cmask]
    if not survivors:
        raise EmptyResult("no basis avoids the deleted set and covers the contracted set")
    kept = [e for e in range(m.n) if not ((dmask | cmask) >> e) & 1]
    if not kept:
        raise EmptyResult("minor has an empty ground set")
    pos = {e: i for i, e in enumerate(kept)}
    labels = [m.ground.label(e) for e in kept] if m.ground.labels else None
    new_bases = set()
    for b in survivors:
        nb = 0
        for e in bits(b & ~cmask):
            nb |= 1 << pos[e]
        new_bases.add(nb)
    ground = GroundSet(len(kept), labels)
    out = Matroid(ground, m.rank - popcount(cmask), new_bases, _validated=True)
    return MinorResult(out, tuple(kept))


def dual(m):
    full = (1 << m.n) - 1
    return Matroid(
        m.ground, m.n - m.rank, {full ^ b for b in m.bases}, _validated=True
    )


# ------------------------------------------------------------------ corpus

_FANO_LINES = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6),
               (2, 3, 6), (2, 4, 5)]

_VAMOS_CIRCUIT_HYPERPLANES = [(0, 1, 2, 3), (0, 1, 4, 5), (0, 1, 6, 7),
                              (2, 3, 4, 5), (2, 3, 6, 7)]


def _fano():
    lines = {mask_of(t) for t in _FANO_LINES}
    bases = {m for m in k_subset_masks(7, 3) if m not in lines}
    return Matroid(GroundSet(7), 3, bases, _validated=True)


def _vamos():
    dropped = {mask_of(t) for t in _VAMOS_CIRCUIT_HYPERPLANES}
    bases = {m for m in k_subset_masks(8, 4) if m not in dropped}
    return Matroid(GroundSet(8), 4, bases, _validated=True)


def _choe_wagner_L():
    # transversal presentation on {1..10, e, f}: three short sets sharing f,
    # one long set meeting everything except {4, 7, 10}
    labels = ("1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "e", "f")
    ground = GroundSet(12, labels)
    sets = [
        (0, 1, 2, 3, 11),
        (4, 5, 6, 11),
        (7, 8, 9, 11),
        (0, 1, 2, 4, 5, 7, 8, 10, 11),
    ]
    return transversal_matroid(SetSystem(ground, sets))


_UNIFORM_RE = re.compile(r"^uniform-(\d+)-(\d+)$")

_NAMED = {
    "fano": _fano,
    "vamos": _vamos,
    "choe-wagner-L": _choe_wagner_L,
}


def named(name):
    """Corpus lookup: fano, vamos, choe-wagner-L, uniform-K-N."""
    if name in _NAMED:
        return _NAMED[name]()
    m = _UNIFORM_RE.match(name)
    if m:
        k, n = int(m.group(1)), int(m.group(2))
        if k > n or n < 1:
            raise UnknownName(f"uniform-{k}-{n} is not a matroid")
        return uniform(k, n)
    options = sorted(_NAMED) + ["uniform-K-N"]
    raise UnknownName(f"unknown matroid {name!r}; available: {', '.join(options)}")


# --------------------------------------------------------------- statistics

class PairStats:
    """Exact occupancy statistics of a pair of elements over all bases."""

    __slots__ = ("total", "both", "neither", "i_only", "j_only")

    def __init__(self, total, both, neither, i_only, j_only):
        self.total = total
        self.both = both
        self.neither = neither
        self.i_only = i_only
        self.j_only = j_only

    @property
    def pr_both(self):
        return Fraction(self.both, self.total)

    @property
    def pr_neither(self):
        return Fraction(self.neither, self.total)

    @property
    def pr_i_only(self):
        return Fraction(self.i_only, self.total)

    @property
    def pr_j_only(self):
        return Fraction(self.j_only, self.total)

    @property
    def pr_i(self):
        return Fraction(self.both + self.i_only, self.total)

    @property
    def pr_j(self):
        return Fraction(self.both + self.j_only, self.total)

    def __repr__(self):
        return (f"PairStats(total={self.total}, both={self.both}, "
                f"neither={self.neither}, i_only={self.i_only}, "
                f"j_only={self.j_only})")


def _pair_counts(bases, i, j):
    bi, bj = 1 << i, 1 << j
    both = neither = i_only = j_only = 0
    for b in bases:
        hi, hj = bool(b & bi), bool(b & bj)
        if hi and hj:
            both += 1
        elif hi:
            i_only += 1
        elif hj:
            j_only += 1
        else:
            neither += 1
    return both, neither, i_only, j_only


def pair_stats(m, i, j):
    if i == j:
        raise SameElement(f"need two distinct elements, got {i} twice")
    if not (0 <= i < m.n and 0 <= j < m.n):
        raise ValueError(f"elements ({i}, {j}) leave the ground set")
    both, neither, i_only, j_only = _pair_counts(m.bases, i, j)
    return PairStats(len(m.bases), both, neither, i_only, j_only)


def is_negatively_correlated(m):
    """Pr(i and j in B) <= Pr(i in B) Pr(j in B) for every element pair."""
    total = len(m.bases)
    bases = m.bases_sorted()
    pairs = 0
    for i in range(m.n):
        for j in range(i + 1, m.n):
            both, _, i_only, j_only = _pair_counts(bases, i, j)
            pairs += 1
            # N * N_ij <= N_i * N_j in integers
            lhs = total * both
            rhs = (both + i_only) * (both + j_only)
            if lhs > rhs:
                return verdicts.failed(
                    {
                        "pair": (i, j),
                        "pr_both": Fraction(both, total),
                        "pr_i": Fraction(both + i_only, total),
                        "pr_j": Fraction(both + j_only, total),
                        "gap": Fraction(lhs - rhs, total * total),
                    },
                    effort={"pairs": pairs},
                )
    return verdicts.certified("all-pairs-nonpositive-covariance",
                              effort={"pairs": pairs})


def _minor_pairs(n, dmask, cmask):
    rem = [e for e in range(n) if not ((dmask | cmask) >> e) & 1]
    for a in range(len(rem)):
        for b in range(a + 1, len(rem)):
            yield rem[a], rem[b]


def is_balanced(m):
    """Negative correlation of the matroid and every minor.

    Exponential sweep over disjoint (deleted, contracted) pairs ordered by
    total size, then masks; intended for small ground sets.  The witness
    names the first failing minor and pair in that order.
    """
    n = m.n
    elements = range(n)
    minors_checked = 0
    pairs_checked = 0
    for t in range(n + 1):
        for dsize in range(t + 1):
            csize = t - dsize
            if m.rank - csize < 2 or n - t < 2:
                continue
            for dset in combinations(elements, dsize):
                dmask = mask_of(dset)
                rest = [e for e in elements if not (dmask >> e) & 1]
                for cset in combinations(rest, csize):
                    cmask = mask_of(cset)
                    survivors = [
                        b for b in m.bases
                        if b & dmask == 0 and b & cmask == cmask
                    ]
                    if not survivors:
                        continue
                    minors_checked += 1
                    total = len(survivors)
                    for i, j in _minor_pairs(n, dmask, cmask):
                        both, _, i_only, j_only = _pair_counts(survivors, i, j)
                        pairs_checked += 1
                        lhs = total * both
                        rhs = (both + i_only) * (both + j_only)
                        if lhs > rhs:
                            return verdicts.failed(
                                {
                                    "deleted": dset,
                                    "contracted": cset,
                                    "pair": (i, j),
                                    "gap": Fraction(lhs - rhs, total * total),
                                },
                                effort={"minors": minors_checked,
                                        "pairs": pairs_checked},
                            )
    return verdicts.certified(
        "all-minors-negatively-correlated",
        effort={"minors": minors_checked, "pairs": pairs_checked},
    )


def basis_generating_polynomial(m):
    """Multiaffine sum of x^B over the bases of m."""
    terms = {}
    for b in m.bases:
        exp = [0] * m.n
        for e in bits(b):
            exp[e] = 1
        terms[tuple(exp)] = Fraction(1)
    return MultiPoly(m.n, terms)
