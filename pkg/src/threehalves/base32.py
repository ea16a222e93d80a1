"""Base 3/2: the 2 <- 3 machine specialization.

Integers come out over digits {0, 1, 2}; the stream of their numerals is
OEIS A024629. Position i from the right weighs (3/2)**i, so a length-l
integer-like string has a dyadic value with denominator dividing 2**(l-1).
"""

from __future__ import annotations

from fractions import Fraction

from .enumeration import ascending_order, dictionary_order, m_key
from .machine import MachineConfig, Numeral, run_machine

__all__ = [
    "BASE32",
    "encode32",
    "parse32",
    "value32",
    "digit_sum32",
    "dictionary32",
    "integer_indices_ascending32",
    "integer_indices_dictionary32",
]

BASE32 = MachineConfig(2, 3)


def encode32(n: int) -> Numeral:
    """Base-3/2 numeral of a non-negative integer (stable 2<-3 machine run)."""
    return run_machine(n, BASE32).numeral


def parse32(s: str) -> Numeral:
    return Numeral.parse(s, BASE32)


def _as_numeral(x: Numeral | str) -> Numeral:
    return x if isinstance(x, Numeral) else parse32(x)


def value32(x: Numeral | str) -> Fraction:
    """Exact value: digit i from the right contributes d * (3/2)**i."""
    return _as_numeral(x).value()


def digit_sum32(n: int) -> int:
    """Digit sum of n written in base 3/2 (A244040)."""
    return sum(encode32(n).int_digits)


def dictionary32(count: int) -> list[Numeral]:
    """First `count` integer-like strings in dictionary order (length, then lex)."""
    if count < 1:
        raise ValueError("count must be positive")
    order = dictionary_order()
    return [parse32(order.string_at(i)) for i in range(count)]


def integer_indices_ascending32(count: int) -> list[int]:
    """Positions of the integers inside the value-ascending enumeration (A320272)."""
    return ascending_order().integer_ranks(count, halved=False)


def integer_indices_dictionary32(count: int) -> list[int]:
    """Positions of the integers inside the dictionary enumeration (A261691)."""
    if count < 1:
        raise ValueError("count must be positive")
    order = dictionary_order()
    hits: list[int] = []
    i = 0
    while len(hits) < count:
        s = order.string_at(i)
        if m_key(s) % (1 << (len(s) - 1)) == 0:
            hits.append(i)
        i += 1
    return hits
