"""Radix-point expansions of positive rationals over restricted digit sets.

All expansions run over powers of 3/2 with the half digit H available.
Each policy fixes which weights may be placed at position k:

  GREEDY_01       weight (3/2)**k, digit 1; take the largest fit first
  LAZY_01         weight (3/2)**k, digit 1; defer while the tail below
                  still covers the remainder (max tail = 2*(3/2)**k)
  ONLY_H0         weight (1/2)(3/2)**k, digit H; largest fit first
  ONLY_H1         an H at every position below the leading power of 3/2,
                  with the ONLY_H0 digits of the difference overlaid
                  (H + H merges to 1; the overlay is carry-free)
  MIN_LEFTOVER    both weights allowed; take the globally largest fit
  FINITE_INTEGER  the finite integer-like representation (integers only)

Digits are produced down to exactly `frac_digits` fractional positions,
and the exact unrepresented remainder is returned alongside, so the
truncation loses nothing. No repetition detection is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .base15 import Numeral15, encode_integer15, to_base32
from .machine import Numeral

__all__ = ["ExpansionPolicy", "Expansion", "expand", "expand_doubled32"]

_THREE_HALVES = Fraction(3, 2)
_TWO_THIRDS = Fraction(2, 3)


class ExpansionPolicy(Enum):
    GREEDY_01 = "greedy01"
    LAZY_01 = "lazy01"
    ONLY_H0 = "h0"
    ONLY_H1 = "h1"
    MIN_LEFTOVER = "minleft"
    FINITE_INTEGER = "finite"


#: digits each policy may place (leading zero padding aside)
ALPHABETS = {
    ExpansionPolicy.GREEDY_01: "01",
    ExpansionPolicy.LAZY_01: "01",
    ExpansionPolicy.ONLY_H0: "0H",
    ExpansionPolicy.ONLY_H1: "H1",
    ExpansionPolicy.MIN_LEFTOVER: "0H1",
    ExpansionPolicy.FINITE_INTEGER: "0H1",
}


@dataclass(frozen=True)
class Expansion:
    """Digits plus the exact remainder: value(numeral) + remainder == input."""

    numeral: Numeral15 | Numeral
    remainder: Fraction
    policy: ExpansionPolicy

    def value(self) -> Fraction:
        return self.numeral.value()

    def __str__(self) -> str:
        return str(self.numeral)


def _leading_power(x: Fraction) -> int:
    """Largest k with (3/2)**k <= x (negative for x < 1)."""
    k, w = 0, Fraction(1)
    while w * _THREE_HALVES <= x:
        w *= _THREE_HALVES
        k += 1
    while w > x:
        w *= _TWO_THIRDS
        k -= 1
    return k


def _assemble(
    digits: list[str], start: int, depth: int, remainder: Fraction, policy: ExpansionPolicy
) -> Expansion:
    # digits[i] is the digit at position start - i
    int_part = "".join(digits[: start + 1]).lstrip("0") or "0"
    frac_part = "".join(digits[start + 1 :])
    assert len(frac_part) == depth
    return Expansion(Numeral15(int_part, frac_part), remainder, policy)


def _expand_greedy(x: Fraction, policy: ExpansionPolicy, depth: int) -> Expansion:
    # single weight family, so largest-fit-first is a plain position descent;
    # ONLY_H0 opens one rung higher: (1/2)(3/2)**k <= x iff (3/2)**k <= 2x
    top = _leading_power(2 * x if policy is ExpansionPolicy.ONLY_H0 else x)
    start = max(top, 0)
    digits: list[str] = []
    r = x
    w = _THREE_HALVES ** start
    for _k in range(start, -depth - 1, -1):
        if policy is ExpansionPolicy.GREEDY_01 and w <= r:
            digits.append("1")
            r -= w
        elif policy is ExpansionPolicy.ONLY_H0 and w / 2 <= r:
            digits.append("H")
            r -= w / 2
        else:
            digits.append("0")
        w *= _TWO_THIRDS
    return _assemble(digits, start, depth, r, policy)


def _expand_minleft(x: Fraction, depth: int) -> Expansion:
    # globally largest candidate from {(3/2)**k, (1/2)(3/2)**k}; the two
    # families interleave, e.g. a 1 at position k-1 beats an H at position k.
    # Chosen positions strictly decrease, so truncation below -depth is
    # simply where the picking stops.
    start = max(_leading_power(2 * x), 0)
    digits: dict[int, str] = {}
    r = x
    while r > 0:
        k1 = _leading_power(r)
        kh = _leading_power(2 * r)
        w1 = _THREE_HALVES ** k1
        wh = _THREE_HALVES ** kh / 2
        assert w1 != wh  # (3/2)**j never equals 2
        pos, ch, used = (k1, "1", w1) if w1 > wh else (kh, "H", wh)
        if pos < -depth:
            break
        assert pos not in digits
        digits[pos] = ch
        r -= used
    out = [digits.get(k, "0") for k in range(start, -depth - 1, -1)]
    return _assemble(out, start, depth, r, ExpansionPolicy.MIN_LEFTOVER)


def _expand_lazy(x: Fraction, depth: int) -> Expansion:
    start = max(_leading_power(x), 0)
    digits: list[str] = []
    r = x
    w = _THREE_HALVES ** start
    for _k in range(start, -depth - 1, -1):
        # the whole tail below position k sums to 2*(3/2)**k; emit 0 while
        # that still covers the remainder, else 1 is forced
        if r <= 2 * w:
            digits.append("0")
        else:
            digits.append("1")
            r -= w
        w *= _TWO_THIRDS
    return _assemble(digits, start, depth, r, ExpansionPolicy.LAZY_01)


def _expand_h1(x: Fraction, depth: int) -> Expansion:
    k0 = _leading_power(x)
    d = x - _THREE_HALVES ** k0
    start = max(k0 - 1, 0)
    # H at every position below k0 sums to exactly (3/2)**k0
    positions = range(start, -depth - 1, -1)
    digits = ["H" if k < k0 else "0" for k in positions]
    r = d
    w = _THREE_HALVES ** start
    for i, k in enumerate(positions):
        if w / 2 <= r:
            # overlay an H of d onto the carpet H: together they make a 1.
            # d < (1/2)(3/2)**k0 keeps its digits strictly below k0.
            assert k < k0 and digits[i] == "H"
            digits[i] = "1"
            r -= w / 2
        w *= _TWO_THIRDS
    # what the carpet still owes: its full tail below -depth, or all of
    # (3/2)**k0 when the carpet never reached the emitted range
    remainder = r + _THREE_HALVES ** min(k0, -depth)
    return _assemble(digits, start, depth, remainder, ExpansionPolicy.ONLY_H1)


def expand(x: Fraction | int, policy: ExpansionPolicy, frac_digits: int = 0) -> Expansion:
    """Expand a positive rational to exactly `frac_digits` fractional digits."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"can only expand positive values, got {x}")
    if frac_digits < 0:
        raise ValueError("frac_digits must be >= 0")
    if policy is ExpansionPolicy.FINITE_INTEGER:
        if x.denominator != 1:
            raise ValueError(f"finite policy is only defined for integers, got {x}")
        numeral = encode_integer15(int(x))
        return Expansion(
            Numeral15(numeral.int_digits, "0" * frac_digits), Fraction(0), policy
        )
    if policy is ExpansionPolicy.LAZY_01:
        return _expand_lazy(x, frac_digits)
    if policy is ExpansionPolicy.ONLY_H1:
        return _expand_h1(x, frac_digits)
    if policy is ExpansionPolicy.MIN_LEFTOVER:
        return _expand_minleft(x, frac_digits)
    if policy in (ExpansionPolicy.GREEDY_01, ExpansionPolicy.ONLY_H0):
        return _expand_greedy(x, policy, frac_digits)
    raise ValueError(f"unknown policy {policy!r}")


def expand_doubled32(
    x: Fraction | int, policy: ExpansionPolicy, frac_digits: int = 0
) -> Expansion:
    """The base-3/2 variant over digits {0,1,2}: expand x/2 and double digitwise.

    The digit alphabet maps 0,H,1 -> 0,1,2, so e.g. ONLY_H0 turns into an
    expansion over 0 and 1, and GREEDY_01 into one over 0 and 2.
    """
    inner = expand(Fraction(x) / 2, policy, frac_digits)
    return Expansion(to_base32(inner.numeral), 2 * inner.remainder, policy)
