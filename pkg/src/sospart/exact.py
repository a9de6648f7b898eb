"""Exact rational arithmetic helpers.

Every number in the package is a :class:`fractions.Fraction`.  Fractions are
immutable, always held in lowest terms with a positive denominator, and backed
by Python's unbounded integers, so no comparison can overflow or round.
"""

import re
from fractions import Fraction
from math import floor

Rational = Fraction

__all__ = [
    "Rational",
    "ZeroDenominator",
    "ParseError",
    "rational_from_parts",
    "rational_from_decimal_string",
    "parse_rational",
    "unit",
    "frac_eval",
    "format_rational",
]


class ZeroDenominator(ZeroDivisionError, ValueError):
    pass


class ParseError(ValueError):
    pass


_DECIMAL = re.compile(r"([+-]?)(\d*)(?:\.(\d*))?")
_FRACTION = re.compile(r"([+-]?\d+)\s*/\s*([+-]?\d+)")


def rational_from_parts(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDenominator(f"zero denominator in {num}/{den}")
    return Fraction(int(num), int(den))


def rational_from_decimal_string(s: str) -> Fraction:
    """Parse ``"0.44"``, ``".44"``, ``"-3"`` or ``"12."`` exactly as p/10^k.

    Binary floating point is never involved, so ``".44"`` is exactly 11/25.
    """
    m = _DECIMAL.fullmatch(s.strip())
    if m is None:
        raise ParseError(f"not a decimal literal: {s!r}")
    sign, whole, frac = m.groups()
    frac = frac or ""
    if not whole and not frac:
        raise ParseError(f"not a decimal literal: {s!r}")
    value = Fraction(int(whole + frac or "0"), 10 ** len(frac))
    return -value if sign == "-" else value


def parse_rational(s: str) -> Fraction:
    """Read either ``"p/q"`` or a decimal literal."""
    text = s.strip()
    m = _FRACTION.fullmatch(text)
    if m is not None:
        return rational_from_parts(int(m.group(1)), int(m.group(2)))
    return rational_from_decimal_string(text)


def unit(x) -> Fraction:
    """Coerce to a Fraction in [0, 1), rejecting anything outside."""
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction, int or string")
    value = parse_rational(x) if isinstance(x, str) else Fraction(x)
    if not 0 <= value < 1:
        raise ValueError(f"{value} is not in [0, 1)")
    return value


def frac_eval(alpha: Fraction, beta: Fraction, x: int) -> Fraction:
    """Fractional part of alpha*x + beta."""
    y = alpha * x + beta
    return y - floor(y)


def format_rational(x: Fraction, *, integers_bare: bool = True) -> str:
    """Render as ``p/q``; integers as ``p`` unless ``integers_bare`` is false."""
    x = Fraction(x)
    if x.denominator == 1 and integers_bare:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
