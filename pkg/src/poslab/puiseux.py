"""Univariate polynomials with rational exponents, exact, viewed at t -> 0+.

These act as the coefficient ring for matrices and polynomials over the
field of (rational-exponent) series: ring arithmetic, order of vanishing,
leading sign, and exact evaluation at rational points admitting the needed
roots.
"""

from fractions import Fraction
from math import lcm

from .errors import NonRationalEvaluation


def _int_root(v, r):
    """Exact r-th root of a positive int, or None."""
    if v == 1 or r == 1:
        return v
    lo, hi = 1, 1 << ((v.bit_length() + r - 1) // r + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        p = mid ** r
        if p == v:
            return mid
        if p < v:
            lo = mid + 1
        else:
            hi = mid
    return None


class PuiseuxPoly:
    """Finite sum of c * t^q with rational q and rational c."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        clean = {}
        for q, c in (terms.items() if isinstance(terms, dict) else terms):
            q, c = Fraction(q), Fraction(c)
            if not c:
                continue
            s = clean.get(q, 0) + c
            if s:
                clean[q] = s
            else:
                clean.pop(q, None)
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        return cls({Fraction(0): Fraction(c)})

    @classmethod
    def t_power(cls, q, c=Fraction(1)):
        return cls({Fraction(q): Fraction(c)})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def order(self):
        """Order of vanishing at 0+, or None for the zero element."""
        if not self.terms:
            return None
        return min(self.terms)

    def leading_coeff(self):
        if not self.terms:
            return Fraction(0)
        return self.terms[min(self.terms)]

    def sign_at_zero_plus(self):
        lc = self.leading_coeff()
        return 0 if lc == 0 else (1 if lc > 0 else -1)

    def _coerce(self, other):
        if isinstance(other, PuiseuxPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return PuiseuxPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for q, c in other.terms.items():
            s = out.get(q, 0) + c
            if s:
                out[q] = s
            else:
                out.pop(q, None)
        p = PuiseuxPoly()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = PuiseuxPoly()
        p.terms = {q: -c for q, c in self.terms.items()}
        return p

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for q1, c1 in self.terms.items():
            for q2, c2 in other.terms.items():
                q = q1 + q2
                s = out.get(q, 0) + c1 * c2
                if s:
                    out[q] = s
                else:
                    out.pop(q, None)
        p = PuiseuxPoly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def eval_at(self, t0):
        """Exact value at a positive rational t0.

        Fractional exponents need an exact root: with q the lcm of exponent
        denominators, t0 must be a perfect q-th power in both numerator and
        denominator, else NonRationalEvaluation is raised.
        """
        t0 = Fraction(t0)
        if t0 <= 0:
            raise NonRationalEvaluation("evaluation point must be positive")
        if not self.terms:
            return Fraction(0)
        q = 1
        for e in self.terms:
            q = lcm(q, e.denominator)
        if q == 1:
            root = t0
        else:
            rn = _int_root(t0.numerator, q)
            rd = _int_root(t0.denominator, q)
            if rn is None or rd is None:
                raise NonRationalEvaluation(
                    f"{t0} has no exact rational {q}-th root"
                )
            root = Fraction(rn, rd)
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * root ** int(e * q)
        return total

    def __repr__(self):
        if not self.terms:
            return "PuiseuxPoly(0)"
        bits = []
        for q in sorted(self.terms):
            c = self.terms[q]
            if q == 0:
                bits.append(f"{c}")
            else:
                bits.append(f"{c}*t^{q}")
        return "PuiseuxPoly(" + " + ".join(bits) + ")"
