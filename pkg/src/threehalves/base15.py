"""Base 1.5: digit alphabet {0, H, 1}, where H is worth one half.

Relabeling digits 0, H, 1 as 0, 1, 2 turns any base-1.5 string into the
base-3/2 string of twice its value, so encoding, enumeration and index
sequences ride on the shared machinery. Digit order for the dictionary
order is 0 < H < 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .base32 import BASE32, encode32
from .enumeration import ascending_order, dictionary_order, m_key
from .machine import Numeral

__all__ = [
    "Numeral15",
    "parse15",
    "value15",
    "increment15",
    "encode_integer15",
    "to_base32",
    "from_base32",
    "ascending15",
    "dictionary15",
    "ascending_rank_of_dict",
    "dict_rank_of_ascending",
    "integer_indices_ascending15",
    "integer_indices_dictionary15",
    "even_h_integers",
]

_TO_U = str.maketrans("0H1", "012")
_FROM_U = str.maketrans("012", "0H1")
_CYCLE = str.maketrans("01H", "1H0")


@dataclass(frozen=True)
class Numeral15:
    """A digit string over {0, H, 1}, most significant digit first."""

    int_digits: str
    frac_digits: str = ""

    def __post_init__(self) -> None:
        if not self.int_digits:
            raise ValueError("integer part needs at least one digit")
        for ch in self.int_digits + self.frac_digits:
            if ch not in "0H1":
                raise ValueError(f"bad base-1.5 digit {ch!r}")
        if len(self.int_digits) > 1 and self.int_digits[0] == "0":
            raise ValueError("leading zero in numeral")

    @classmethod
    def parse(cls, text: str) -> "Numeral15":
        text = text.replace("h", "H")
        int_part, dot, frac_part = text.partition(".")
        if not int_part or (dot and not frac_part):
            raise ValueError(f"malformed numeral {text!r}")
        while len(int_part) > 1 and int_part[0] == "0":
            int_part = int_part[1:]
        return cls(int_part, frac_part)

    def value(self) -> Fraction:
        """Exact value with H contributing (1/2) * (3/2)**position."""
        total = Fraction(m_key(self.int_digits.translate(_TO_U)), 1 << len(self.int_digits))
        if self.frac_digits:
            depth = len(self.frac_digits)
            f = 0
            for j, ch in enumerate(self.frac_digits.translate(_TO_U), start=1):
                f += int(ch) * (1 << (j - 1)) * 3 ** (depth - j)
            total += Fraction(f, 3 ** depth)
        return total

    def __str__(self) -> str:
        if self.frac_digits:
            return f"{self.int_digits}.{self.frac_digits}"
        return self.int_digits


def parse15(text: str) -> Numeral15:
    return Numeral15.parse(text)


def _as_numeral15(x: Numeral15 | str) -> Numeral15:
    return x if isinstance(x, Numeral15) else parse15(x)


def value15(x: Numeral15 | str) -> Fraction:
    return _as_numeral15(x).value()


def increment15(x: Numeral15 | str) -> Numeral15:
    """Add one to an integer-valued numeral by the digit-local rule.

    The rightmost 0 (pad one leading 0 if there is none) and everything to
    its right are cycled 0 -> 1 -> H -> 0; digits to its left are kept.
    """
    x = _as_numeral15(x)
    if x.frac_digits:
        raise ValueError("increment needs an integer-like numeral")
    if x.value().denominator != 1:
        raise ValueError(f"{x} is not integer-valued")
    s = x.int_digits
    i = s.rfind("0")
    if i < 0:
        s = "0" + s
        i = 0
    return Numeral15(s[:i] + s[i:].translate(_CYCLE))


def encode_integer15(n: int) -> Numeral15:
    """The unique integer-like numeral of value n.

    Computed through the doubling digit map from the base-3/2 numeral of
    2n; repeated increment15 reproduces it (cross-checked in tests).
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"need a non-negative integer, got {n!r}")
    return from_base32(encode32(2 * n))


def to_base32(x: Numeral15 | str) -> Numeral:
    """Digitwise 0,H,1 -> 0,1,2; the value doubles."""
    x = _as_numeral15(x)
    return Numeral(
        BASE32,
        tuple(int(c) for c in x.int_digits.translate(_TO_U)),
        tuple(int(c) for c in x.frac_digits.translate(_TO_U)),
    )


def from_base32(x: Numeral) -> Numeral15:
    """Digitwise 0,1,2 -> 0,H,1; the value halves."""
    if x.config != BASE32:
        raise ValueError("expected a 2<-3 machine numeral")
    return Numeral15(
        "".join(map(str, x.int_digits)).translate(_FROM_U),
        "".join(map(str, x.frac_digits)).translate(_FROM_U),
    )


def ascending15(count: int) -> list[Numeral15]:
    """First `count` integer-like numerals sorted by exact value."""
    if count < 1:
        raise ValueError("count must be positive")
    order = ascending_order()
    order.ensure_final_count(count)
    return [Numeral15(order.string_at(i).translate(_FROM_U)) for i in range(count)]


def dictionary15(count: int) -> list[Numeral15]:
    """First `count` numerals in dictionary order (0 < H < 1)."""
    if count < 1:
        raise ValueError("count must be positive")
    order = dictionary_order()
    return [Numeral15(order.string_at(i).translate(_FROM_U)) for i in range(count)]


def ascending_rank_of_dict(n: int) -> int:
    """Ascending position of the n-th dictionary numeral (A320274)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    return ascending_order().rank_of(dictionary_order().string_at(n))


def dict_rank_of_ascending(n: int) -> int:
    """Dictionary position of the n-th ascending numeral (A320273)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    return dictionary_order().rank_of(ascending_order().string_at(n))


def integer_indices_ascending15(count: int) -> list[int]:
    """Positions of the integers inside the ascending enumeration (A320035)."""
    return ascending_order().integer_ranks(count, halved=True)


def integer_indices_dictionary15(count: int) -> list[int]:
    """Positions of the integers inside the dictionary enumeration (A265316)."""
    if count < 1:
        raise ValueError("count must be positive")
    order = dictionary_order()
    hits: list[int] = []
    i = 0
    while len(hits) < count:
        s = order.string_at(i)
        if m_key(s) % (1 << len(s)) == 0:
            hits.append(i)
        i += 1
    return hits


def even_h_integers(count: int) -> list[int]:
    """Ascending positive integers whose numeral has an even number of H digits.

    Equivalently, integers with an integer digit sum in base 1.5 (A256785);
    following the published listing the sequence starts at 1, although the
    numeral "0" also has zero H digits.
    """
    if count < 1:
        raise ValueError("count must be positive")
    out: list[int] = []
    n = 1
    while len(out) < count:
        if encode_integer15(n).int_digits.count("H") % 2 == 0:
            out.append(n)
        n += 1
    return out
