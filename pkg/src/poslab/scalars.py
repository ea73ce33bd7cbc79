"""Rational scalar helpers: parsing, formatting, display rounding.

All arithmetic in poslab is exact over Fraction.  Floats enter only at the
display layer, and even there we format from the exact value so rounding is
reproducible (half away from zero, no binary float in the loop).
"""

from fractions import Fraction


def parse_rational(text):
    """Parse 'p/q' or 'p' (also accepts int / Fraction passthrough)."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    s = str(text).strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return Fraction(int(p.strip()), int(q.strip()))
    return Fraction(int(s))


def format_rational(q):
    """Render a Fraction as 'p/q', or just 'p' when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def round_half_away(q, places=5):
    """Round an exact rational to `places` decimals, ties away from zero."""
    q = Fraction(q)
    scale = 10 ** places
    num = q * scale
    quo, rem = divmod(abs(num.numerator), num.denominator)
    if 2 * rem >= num.denominator:
        quo += 1
    sign = -1 if num.numerator < 0 else 1
    return Fraction(sign * quo, scale)


def format_fixed(q, places=5):
    """Fixed-point decimal string of round_half_away(q, places)."""
    r = round_half_away(q, places)
    v = int(r * 10 ** places)  # exact by construction
    sign = "-" if v < 0 else ""
    v = abs(v)
    whole, frac = divmod(v, 10 ** places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"
