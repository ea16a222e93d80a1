"""Exact rational arithmetic helpers.

Every quantity in this package (numeral values, expansion remainders,
digit sums involving the half digit) is an exact rational. The stdlib
``fractions.Fraction`` already provides canonical reduced fractions with
a positive denominator and exact field operations, so it is the value
type throughout; this module wraps the small surface the rest of the
package relies on and adds a truncating decimal renderer for display.
No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Rational", "rational", "pow_base", "compare", "to_decimal"]

Rational = Fraction


def rational(numerator: int, denominator: int = 1) -> Fraction:
    """Canonical fraction p/q: reduced, positive denominator, zero is 0/1.

    Raises ZeroDivisionError for a zero denominator.
    """
    return Fraction(numerator, denominator)


def pow_base(base: Fraction | int, exponent: int) -> Fraction:
    """Exact base**exponent for base > 0; the exponent may be negative."""
    base = Fraction(base)
    if base <= 0:
        raise ValueError(f"base must be positive, got {base}")
    return base ** exponent


def compare(a: Fraction | int, b: Fraction | int) -> int:
    """Exact three-way comparison: -1, 0, or 1 as a <, ==, > b."""
    a, b = Fraction(a), Fraction(b)
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def to_decimal(x: Fraction | int, places: int) -> tuple[str, bool]:
    """Truncate x toward zero to `places` decimal digits.

    Returns (rendered string, exact flag); the flag is False when nonzero
    digits were cut off. Never rounds; display only, never used in
    comparisons.
    """
    if places < 0:
        raise ValueError("places must be >= 0")
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    scaled, rem = divmod(abs(x.numerator) * 10 ** places, x.denominator)
    digits = str(scaled).rjust(places + 1, "0")
    if places:
        return f"{sign}{digits[:-places]}.{digits[-places:]}", rem == 0
    return f"{sign}{digits}", rem == 0
