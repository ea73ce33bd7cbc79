"""Exact linear algebra and univariate root counting over the rationals.

Everything here is fraction-free or Fraction-exact: determinants via Bareiss,
characteristic polynomials via Faddeev-LeVerrier, eigenvalue sign counts via
Descartes (valid because char polys of symmetric matrices have all roots
real), and distinct-real-root counts via Sturm chains over the integers.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .errors import (
    BadParams,
    DimensionMismatch,
    NotSymmetric,
    RankDeficient,
    ZeroPolynomial,
)
from . import verdicts


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalMatrix:
    """Dense matrix with Fraction entries; immutable after construction."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries):
        data = tuple(tuple(_frac(v) for v in row) for row in entries)
        if not data or not data[0]:
            raise DimensionMismatch("matrix must have at least one row and column")
        w = len(data[0])
        if any(len(row) != w for row in data):
            raise DimensionMismatch("ragged rows")
        self.data = data
        self.rows = len(data)
        self.cols = w

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    def __getitem__(self, rc):
        r, c = rc
        return self.data[r][c]

    def row(self, r):
        return self.data[r]

    def transpose(self):
        return RationalMatrix(list(zip(*self.data)))

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        if not self.is_square():
            return False
        d = self.data
        return all(d[i][j] == d[j][i] for i in range(self.rows) for j in range(i))

    def column_submatrix(self, cols):
        return RationalMatrix([[row[c] for c in cols] for row in self.data])

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"RationalMatrix({[list(map(str, row)) for row in self.data]})"


def _int_rows(m):
    """Scale a RationalMatrix to integer rows; returns (rows, denominator)."""
    den = 1
    for row in m.data:
        for v in row:
            den = lcm(den, v.denominator)
    rows = [[int(v * den) for v in row] for row in m.data]
    return rows, den


def det_bareiss_int(rows):
    """Fraction-free determinant of a square integer matrix (destructive)."""
    n = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            arow, krow = a[i], a[k]
            aik = arow[k]
            for j in range(k + 1, n):
                # exactness of Bareiss: this division has zero remainder
                arow[j] = (pivot * arow[j] - aik * krow[j]) // prev
            arow[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det(m):
    if not m.is_square():
        raise DimensionMismatch("determinant needs a square matrix")
    rows, den = _int_rows(m)
    return Fraction(det_bareiss_int(rows), den ** m.rows)


def rank(m):
    """Rank via fraction-free row elimination."""
    rows, _ = _int_rows(m)
    nr, nc = len(rows), len(rows[0])
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        for i in range(r + 1, nr):
            if rows[i][c] != 0:
                f1, f2 = prow[c], rows[i][c]
                rows[i] = [f1 * rows[i][j] - f2 * prow[j] for j in range(nc)]
                g = gcd(*rows[i]) if any(rows[i]) else 1
                if g > 1:
                    rows[i] = [v // g for v in rows[i]]
        r += 1
        if r == nr:
            break
    return r


class PlueckerVector:
    """Maximal minors of a k x n matrix, indexed by sorted column k-tuples."""

    __slots__ = ("k", "n", "values")

    def __init__(self, k, n, values):
        if not (0 < k <= n):
            raise DimensionMismatch(f"need 0 < k <= n, got k={k}, n={n}")
        want = set(combinations(range(n), k))
        if set(values) != want:
            raise DimensionMismatch("Pluecker vector must cover all column k-subsets")
        self.k = k
        self.n = n
        self.values = dict(values)

    def __getitem__(self, cols):
        return self.values[tuple(sorted(cols))]

    def support(self):
        return {cols for cols, v in self.values.items() if v}

    def __repr__(self):
        return f"PlueckerVector(k={self.k}, n={self.n}, {len(self.support())} nonzero)"


def maximal_minors_rows(rows, zero):
    """All maximal minors of a k x n array over a commutative ring.

    Works for Fraction entries and for any ring type supporting +, -, *
    (Puiseux polynomials included).  Dynamic programming over row prefixes:
    layer r maps each column r-subset to the determinant of the first r rows
    on those columns; total work sum_r r*C(n,r), fine at desk scale.
    """
    k = len(rows)
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("ragged rows")
    if not (0 < k <= n):
        raise DimensionMismatch(f"need 1 <= rows <= cols, got {k} x {n}")
    layer = {(): 1}
    for r in range(k):
        row = rows[r]
        nxt = {}
        for cols in combinations(range(n), r + 1):
            acc = zero
            # Laplace expansion along the newest row
            for t in range(r + 1):
                entry = row[cols[t]]
                if not entry:
                    continue
                minor = layer[cols[:t] + cols[t + 1:]]
                if not minor:
                    continue
                term = entry * minor
                acc = acc + term if (r + t) % 2 == 0 else acc - term
            nxt[cols] = acc
        layer = nxt
    return layer


def maximal_minors(m):
    """PlueckerVector of a k x n RationalMatrix with k <= n and full row rank."""
    vals = maximal_minors_rows(m.data, Fraction(0))
    if not any(vals.values()):
        raise RankDeficient("all maximal minors vanish: row rank below k")
    return PlueckerVector(m.rows, m.cols, vals)


def is_totally_nonnegative(m):
    """Check every minor (all orders) of m for nonnegativity.

    Uses the initial-minor reduction only for documentation honesty: here we
    just enumerate all square submatrices, which is exact and fast enough at
    the sizes this library targets.
    """
    checked = 0
    for order in range(1, min(m.rows, m.cols) + 1):
        for rsel in combinations(range(m.rows), order):
            sub_rows = [m.data[r] for r in rsel]
            for csel in combinations(range(m.cols), order):
                sq = [[row[c] for c in csel] for row in sub_rows]
                checked += 1
                rows_int = []
                den = 1
                for row in sq:
                    for v in row:
                        den = lcm(den, v.denominator)
                for row in sq:
                    rows_int.append([int(v * den) for v in row])
                d = det_bareiss_int(rows_int)
                if d < 0:
                    value = Fraction(d, den ** order)
                    return verdicts.failed(
                        {"rows": list(rsel), "cols": list(csel), "minor": value},
                        effort={"minors": checked},
                    )
    return verdicts.certified("all-minors-nonnegative", effort={"minors": checked})


def vandermonde_matrix(k, params):
    """k x n matrix with entry (r, c) = params[c] ** r.

    params must be strictly increasing and positive; such matrices are
    totally positive, hence every maximal minor is positive.
    """
    params = [_frac(p) for p in params]
    if k < 1 or not params:
        raise BadParams("need k >= 1 and at least one parameter")
    if any(p <= 0 for p in params):
        raise BadParams("parameters must be positive")
    if any(a >= b for a, b in zip(params, params[1:])):
        raise BadParams("parameters must be strictly increasing")
    return RationalMatrix([[p ** r for p in params] for r in range(k)])


# ------------------------------------------------------------------ UniPoly

class UniPoly:
    """Univariate polynomial, Fraction coefficients, ascending degree order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, x):
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if self.is_zero() or other.is_zero():
                return UniPoly([])
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return UniPoly(out)
        return UniPoly([c * _frac(other) for c in self.coeffs])

    __rmul__ = __mul__

    def divmod(self, other):
        """Exact Fraction division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.coeffs[-1]
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            f = rem[-1] / lead
            shift = len(rem) - 1 - d
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= f * c
            rem.pop()
        return UniPoly(q), UniPoly(rem)

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*t^{i}" if i else f"{c}")
        return "UniPoly(" + " + ".join(parts) + ")"


def _primitive_int(coeffs):
    """Integer primitive part of Fraction coeffs, sign preserved."""
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _prem_neg(f, g):
    """Next Sturm chain element from integer polys f, g (ascending coeffs).

    Computes the pseudo-remainder r with multiplier lc(g)^(deg f - deg g + 1)
    and returns the sign-corrected -rem(f, g) as a primitive integer poly:
    when the multiplier is negative the pseudo-remainder has flipped sign
    relative to the true remainder, so we undo that before negating.
    """
    f = list(f)
    dg = len(g) - 1
    lead = g[-1]
    mult_sign = 1
    while len(f) - 1 >= dg and any(f):
        while f and f[-1] == 0:
            f.pop()
        if len(f) - 1 < dg:
            break
        shift = len(f) - 1 - dg
        top = f[-1]
        f = [lead * c for c in f]
        mult_sign *= 1 if lead > 0 else -1
        for i, c in enumerate(g):
            f[shift + i] -= top * c
        f.pop()
    while f and f[-1] == 0:
        f.pop()
    if not f:
        return []
    g0 = 0
    for v in f:
        g0 = gcd(g0, v)
    if g0 > 1:
        f = [v // g0 for v in f]
    if mult_sign > 0:
        return [-v for v in f]
    return f


def _sturm_chain(p):
    p0 = _primitive_int(p.coeffs)
    chain = [p0]
    p1 = _primitive_int(p.derivative().coeffs)
    if p1:
        chain.append(p1)
    while len(chain[-1]) > 1:
        nxt = _prem_neg(chain[-2], chain[-1])
        if not nxt:
            break
        chain.append(nxt)
    return chain


def _variations(signs):
    cleaned = [s for s in signs if s]
    return sum(1 for a, b in zip(cleaned, cleaned[1:]) if a * b < 0)


def _sign_at_minus_inf(coeffs):
    lead = coeffs[-1]
    deg = len(coeffs) - 1
    s = 1 if lead > 0 else -1
    return s if deg % 2 == 0 else -s


def _sign_at_plus_inf(coeffs):
    return 1 if coeffs[-1] > 0 else -1


def _sign_at(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return 0 if acc == 0 else (1 if acc > 0 else -1)


def sturm_distinct_real_roots(p):
    """Number of distinct real roots of a nonzero UniPoly."""
    if p.is_zero():
        raise ZeroPolynomial("Sturm count needs a nonzero polynomial")
    if p.degree == 0:
        return 0
    chain = _sturm_chain(p)
    vneg = _variations([_sign_at_minus_inf(q) for q in chain])
    vpos = _variations([_sign_at_plus_inf(q) for q in chain])
    return vneg - vpos


def poly_gcd(p, q):
    """Monic gcd over the rationals."""
    a, b = p, q
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero():
        return a
    return a * (1 / a.coeffs[-1])


def real_rooted(p):
    """(distinct_real_roots, all_roots_real) for a nonzero UniPoly.

    all_roots_real ignores multiplicity: it holds iff the squarefree part
    has as many distinct real roots as its degree.
    """
    if p.is_zero():
        raise ZeroPolynomial("root analysis needs a nonzero polynomial")
    if p.degree == 0:
        return 0, True
    g = poly_gcd(p, p.derivative())
    sqfree, rem = p.divmod(g)
    assert rem.is_zero()
    distinct = sturm_distinct_real_roots(sqfree)
    return distinct, distinct == sqfree.degree


def negative_real_roots(p):
    """Distinct real roots in (-inf, 0) of a nonzero UniPoly."""
    if p.is_zero():
        raise ZeroPolynomial("root count needs a nonzero polynomial")
    # deflate roots at the origin so the Sturm evaluation at 0 is nonzero
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    q = UniPoly(coeffs)
    if q.degree < 1:
        return 0
    chain = _sturm_chain(q)
    vneg = _variations([_sign_at_minus_inf(c) for c in chain])
    vzero = _variations([_sign_at(c, Fraction(0)) for c in chain])
    return vneg - vzero


# -------------------------------------------------- symmetric eigen counting

def char_poly(m):
    """Characteristic polynomial det(tI - M) via Faddeev-LeVerrier.

    Requires an exactly symmetric matrix: the downstream eigenvalue counting
    relies on all roots being real.
    """
    if not m.is_symmetric():
        raise NotSymmetric("characteristic polynomial restricted to symmetric input")
    n = m.rows
    a = [list(row) for row in m.data]
    work = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    cs = [Fraction(1)]  # coefficient of t^n
    for k in range(1, n + 1):
        prod = [
            [sum(a[i][t] * work[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        ck = -sum(prod[i][i] for i in range(n)) / k
        cs.append(ck)
        for i in range(n):
            prod[i][i] += ck
        work = prod
    return UniPoly(list(reversed(cs)))


def count_positive_eigenvalues(m):
    """(positive eigenvalue count, nullity) of a symmetric RationalMatrix.

    Descartes' rule is exact here: a symmetric matrix has a real spectrum,
    so the sign variation count of the deflated characteristic polynomial
    equals the number of positive roots with multiplicity.
    """
    p = char_poly(m)
    coeffs = list(p.coeffs)
    nullity = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        nullity += 1
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    positives = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return positives, nullity
