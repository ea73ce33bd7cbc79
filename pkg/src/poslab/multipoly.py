"""Sparse multivariate polynomials with exact coefficients.

Terms are stored as {exponent tuple: coefficient}.  Coefficients are usually
Fraction but any commutative ring element with +, -, *, bool works (Puiseux
polynomials in particular); operations that need an order or a Hessian are
restricted to Fraction coefficients.
"""

from fractions import Fraction
from itertools import combinations
from math import factorial

from .errors import BadIndex, DimensionMismatch, EmptyJ, SameVariable
from .exact import RationalMatrix, UniPoly


def _is_exponent(e, n):
    return (
        isinstance(e, tuple)
        and len(e) == n
        and all(isinstance(v, int) and v >= 0 for v in e)
    )


class MultiPoly:
    """Polynomial in n variables; zero coefficients are never stored."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=()):
        if not isinstance(n, int) or n < 1:
            raise DimensionMismatch(f"need n >= 1 variables, got {n!r}")
        self.n = n
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exp, coeff in items:
            exp = tuple(exp)
            if not _is_exponent(exp, n):
                raise DimensionMismatch(f"bad exponent {exp!r} for n={n}")
            if not coeff:
                continue
            if exp in clean:
                s = clean[exp] + coeff
                if s:
                    clean[exp] = s
                else:
                    del clean[exp]
            else:
                clean[exp] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, n, exp, coeff=Fraction(1)):
        return cls(n, {tuple(exp): coeff})

    @classmethod
    def variable(cls, n, i):
        if not (0 <= i < n):
            raise BadIndex(f"variable index {i} out of range for n={n}")
        exp = [0] * n
        exp[i] = 1
        return cls(n, {tuple(exp): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _check_partner(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.n, other)
        self._check_partner(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MultiPoly(self.n, out)

    def __neg__(self):
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.n, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return MultiPoly(self.n, {e: c * other for e, c in self.terms.items()})
        self._check_partner(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.n, out)

    __rmul__ = __mul__

    def support(self):
        return frozenset(self.terms)

    def total_degree(self):
        """Max total degree, or -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        """(flag, degree); the zero polynomial counts as homogeneous."""
        if not self.terms:
            return True, None
        degs = {sum(e) for e in self.terms}
        if len(degs) == 1:
            return True, degs.pop()
        return False, None

    def is_multiaffine(self):
        return all(all(v <= 1 for v in e) for e in self.terms)

    def has_nonnegative_coeffs(self):
        return all(c >= 0 for c in self.terms.values())

    def derivative(self, i):
        if not (0 <= i < self.n):
            raise BadIndex(f"variable index {i} out of range for n={self.n}")
        out = {}
        for exp, c in self.terms.items():
            if exp[i] == 0:
                continue
            e = list(exp)
            e[i] -= 1
            out[tuple(e)] = c * exp[i]
        return MultiPoly(self.n, out)

    def derivative_multi(self, alpha):
        """Apply d^alpha (alpha an exponent tuple of length n)."""
        alpha = tuple(alpha)
        if not _is_exponent(alpha, self.n):
            raise BadIndex(f"bad derivative multi-index {alpha!r}")
        p = self
        for i, k in enumerate(alpha):
            for _ in range(k):
                p = p.derivative(i)
                if p.is_zero():
                    return p
        return p

    def eval_at(self, xs):
        """Evaluate at a point of Fractions; exact.

        Returns a coefficient-ring element; the zero polynomial evaluates
        to Fraction(0).
        """
        xs = tuple(Fraction(x) for x in xs)
        if len(xs) != self.n:
            raise DimensionMismatch(f"point has {len(xs)} coords, need {self.n}")
        total = None
        for exp, c in self.terms.items():
            mono = Fraction(1)
            for x, e in zip(xs, exp):
                if e:
                    mono *= x ** e
            val = c * mono
            total = val if total is None else total + val
        return Fraction(0) if total is None else total

    def hessian_at(self, xs):
        """Symmetric n x n matrix of second partials at xs (Fraction only)."""
        xs = tuple(Fraction(x) for x in xs)
        if len(xs) != self.n:
            raise DimensionMismatch(f"point has {len(xs)} coords, need {self.n}")
        n = self.n
        firsts = [self.derivative(i) for i in range(n)]
        h = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = firsts[i].derivative(j).eval_at(xs)
                h[i][j] = v
                h[j][i] = v
        return RationalMatrix(h)

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                for i, e in enumerate(exp)
                if e
            )
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return "MultiPoly(" + " + ".join(parts) + ")"


def exponents_below(support):
    """All multi-indices alpha with alpha <= some member of support (componentwise)."""
    seen = set()
    for top in support:
        stack = [top]
        while stack:
            e = stack.pop()
            if e in seen:
                continue
            seen.add(e)
            for i, v in enumerate(e):
                if v:
                    down = list(e)
                    down[i] -= 1
                    down = tuple(down)
                    if down not in seen:
                        stack.append(down)
    return seen


def generating_function(J, n=None):
    """Normalized generating function sum_{alpha in J} x^alpha / alpha! of a
    finite exponent set J."""
    J = list(J)
    if not J:
        raise EmptyJ("J must be nonempty")
    if n is None:
        n = len(J[0])
    terms = {}
    for alpha in J:
        alpha = tuple(alpha)
        if not _is_exponent(alpha, n):
            raise DimensionMismatch(f"bad exponent {alpha!r} for n={n}")
        fact = 1
        for v in alpha:
            fact *= factorial(v)
        terms[alpha] = Fraction(1, fact)
    return MultiPoly(n, terms)


def rayleigh_difference(f, i, j, c=Fraction(1), alpha=None):
    """The polynomial c * (d_i d^a f)(d_j d^a f) - (d^a f)(d_i d_j d^a f)."""
    if i == j:
        raise SameVariable(f"need distinct variables, got i = j = {i}")
    if not (0 <= i < f.n and 0 <= j < f.n):
        raise BadIndex(f"pair ({i}, {j}) out of range for n={f.n}")
    c = Fraction(c)
    base = f if alpha is None else f.derivative_multi(alpha)
    fi = base.derivative(i)
    fj = base.derivative(j)
    fij = fi.derivative(j)
    return (fi * fj) * c - base * fij


def restrict_to_line(f, a, b):
    """Univariate t -> f(a + t b), exact over Fraction coefficients."""
    a = tuple(Fraction(x) for x in a)
    b = tuple(Fraction(x) for x in b)
    if len(a) != f.n or len(b) != f.n:
        raise DimensionMismatch("line endpoints must have n coordinates")
    # per-variable power tables of (a_i + t b_i)^e as coefficient lists
    maxes = [0] * f.n
    for exp in f.terms:
        for i, e in enumerate(exp):
            if e > maxes[i]:
                maxes[i] = e
    tables = []
    for i in range(f.n):
        tab = [[Fraction(1)]]
        lin = [a[i], b[i]]
        for _ in range(maxes[i]):
            prev = tab[-1]
            nxt = [Fraction(0)] * (len(prev) + 1)
            for d, cv in enumerate(prev):
                if cv:
                    nxt[d] += cv * lin[0]
                    nxt[d + 1] += cv * lin[1]
            tab.append(nxt)
        tables.append(tab)
    out = [Fraction(0)]
    for exp, coeff in f.terms.items():
        cur = [coeff]
        for i, e in enumerate(exp):
            if not e:
                continue
            fac = tables[i][e]
            nxt = [Fraction(0)] * (len(cur) + len(fac) - 1)
            for d1, c1 in enumerate(cur):
                if not c1:
                    continue
                for d2, c2 in enumerate(fac):
                    if c2:
                        nxt[d1 + d2] += c1 * c2
            cur = nxt
        if len(cur) > len(out):
            out.extend([Fraction(0)] * (len(cur) - len(out)))
        for d, cv in enumerate(cur):
            out[d] += cv
    return UniPoly(out)


def elementary_symmetric(n, k):
    """e_k(x_1..x_n) as a MultiPoly; handy for building test fixtures."""
    terms = {}
    for combo in combinations(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = Fraction(1)
    return MultiPoly(n, terms)
