"""Deterministic counter-based sampling of rational points.

SplitMix64 in counter mode: raw word k of a stream is mix(seed + (k+1) *
golden).  Streams carry no state, so any (pair, multi-index) slice of work
regenerates its own points independently of scan order, and the NumPy batch
path and the scalar path produce identical values by construction.

Sampled coordinates are dyadic rationals num / 2^e with 2^e <= den_bound,
which keeps the integer-scaled images small enough for the int64 kernels.
"""

from fractions import Fraction

import numpy as np

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(z):
    z &= MASK64
    z ^= z >> 30
    z = (z * _MIX1) & MASK64
    z ^= z >> 27
    z = (z * _MIX2) & MASK64
    z ^= z >> 31
    return z


def derive_seed(seed, *tags):
    """Fold integer tags into a per-stream seed; order-sensitive."""
    s = seed & MASK64
    for t in tags:
        s = mix64(s ^ mix64(t & MASK64))
    return s


def raw_word(seed, k):
    return mix64((seed + (k + 1) * _GOLDEN) & MASK64)


def _raw_words_np(seed, start, count):
    ks = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed) + ks * np.uint64(_GOLDEN)  # wraps mod 2^64
    z ^= z >> np.uint64(30)
    z *= np.uint64(_MIX1)
    z ^= z >> np.uint64(27)
    z *= np.uint64(_MIX2)
    z ^= z >> np.uint64(31)
    return z


class Sampler:
    """Sampling policy shared by the falsifiers.

    seed       stream seed (per-target streams are derived from it)
    count      sample budget per target (pair, line, point stream)
    den_bound  power-of-two cap on coordinate denominators
    batch      kernel batch size
    grid_cap   skip the deterministic grid sweep when 7^n exceeds this
    """

    def __init__(self, seed=0, count=1000, den_bound=8, batch=2048,
                 grid_cap=2_000_000):
        if den_bound < 1 or den_bound & (den_bound - 1):
            raise ValueError("den_bound must be a power of two")
        if count < 1 or batch < 1:
            raise ValueError("bad sampler budget")
        self.seed = int(seed)
        self.count = int(count)
        self.den_bound = int(den_bound)
        self.batch = int(batch)
        self.grid_cap = int(grid_cap)


class BoxStream:
    """Points of a box [lo, hi]^n with dyadic coordinates, indexed by k.

    Coordinate (k, v) consumes raw words 2*(k*n + v) and 2*(k*n + v) + 1:
    the first picks the denominator exponent, the second the numerator.
    strict_lo excludes the lower endpoint (used for strictly positive
    direction vectors).
    """

    def __init__(self, seed, n, lo, hi, den_bound=8, strict_lo=False):
        lo, hi = Fraction(lo), Fraction(hi)
        if hi <= lo:
            raise ValueError("box must have lo < hi")
        self.seed = seed & MASK64
        self.n = n
        self.lo, self.hi = lo, hi
        self.emax = den_bound.bit_length() - 1
        self.strict_lo = strict_lo
        # numerator range per denominator exponent, exact
        self._num_lo = []
        self._span = []
        for e in range(self.emax + 1):
            den = 1 << e
            nlo = -((-lo.numerator * den) // lo.denominator)  # ceil(lo * den)
            if strict_lo and Fraction(nlo, den) == lo:
                nlo += 1
            nhi = (hi.numerator * den) // hi.denominator  # floor(hi * den)
            if nhi < nlo:
                raise ValueError("box too narrow for denominator bound")
            self._num_lo.append(nlo)
            self._span.append(nhi - nlo + 1)

    def max_abs_scaled(self):
        """Bound on |num| << (emax - e), i.e. on coordinates scaled by den_bound."""
        top = 0
        for e in range(self.emax + 1):
            hi_abs = max(abs(self._num_lo[e]),
                         abs(self._num_lo[e] + self._span[e] - 1))
            top = max(top, hi_abs << (self.emax - e))
        return top

    def _coord(self, k, v):
        base = 2 * (k * self.n + v)
        e = raw_word(self.seed, base) % (self.emax + 1)
        num = self._num_lo[e] + raw_word(self.seed, base + 1) % self._span[e]
        return num, e

    def point(self, k):
        """Exact coordinates of point k."""
        return tuple(
            Fraction(num, 1 << e)
            for num, e in (self._coord(k, v) for v in range(self.n))
        )

    def batch_scaled(self, start, count):
        """Integer images of points start..start+count-1, scaled by den_bound.

        Returns (count, n) int64; entry = num << (emax - e), so the exact
        coordinate is entry / den_bound.
        """
        n = self.n
        words = _raw_words_np(self.seed, 2 * start * n, 2 * count * n)
        w0 = words[0::2].reshape(count, n)
        w1 = words[1::2].reshape(count, n)
        es = (w0 % np.uint64(self.emax + 1)).astype(np.int64)
        num_lo = np.array(self._num_lo, dtype=np.int64)[es]
        span = np.array(self._span, dtype=np.uint64)[es]
        nums = num_lo + (w1 % span).astype(np.int64)
        return nums << (self.emax - es)


def grid_values(den_bound=8):
    """The seven-point falsifier grid {0, +-1/2, +-1, +-2} as scaled ints."""
    vals = [Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(1),
            Fraction(-1), Fraction(2), Fraction(-2)]
    scaled = [int(v * den_bound) for v in vals]
    return vals, scaled
