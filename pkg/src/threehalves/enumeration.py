"""Shared enumeration machinery for digit strings over {0, 1, 2}.

Both numeral systems in this package live on the same string universe:
relabeling digits 0, 1, 2 as 0, H, 1 halves every value, so ascending and
dictionary orders are computed once over "u-digit" strings and relabeled
by callers. The universe is "0" plus all strings with a nonzero leading
digit.

A string d_{l-1}...d_0 is scored by the integer

    M = sum_i d_i * 3**i * 2**(l-1-i)

so its base-3/2 value is exactly M / 2**(l-1), and strings of mixed
lengths up to a horizon L compare by the common-denominator key
M * 2**(L-l). All keys are integers, so sorting is exact; they stay far
below 2**63 for any horizon this package can reach.

Ascending order needs iterative deepening: a longer string may be smaller
in value than a shorter one, but no string of length > L can get below
(3/2)**L (the value of "1" followed by L zeros). Hence once every string
of length <= L is generated, all ranks below that cutoff are final, and
the horizon grows until enough ranks are final.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np

__all__ = [
    "m_key",
    "u_string_from_m",
    "AscendingOrder",
    "DictionaryOrder",
    "ascending_order",
    "dictionary_order",
]

_MAX_HORIZON = 36  # 2 * 3**36 still fits comfortably in int64


def m_key(u_digits: str) -> int:
    """Integer score M of a digit string; its value is M / 2**(len-1)."""
    m, p2 = 0, 1
    for ch in u_digits:
        m = 3 * m + int(ch) * p2
        p2 <<= 1
    return m


def u_string_from_m(m: int, length: int) -> str:
    """Inverse of m_key for a known length."""
    out = []
    for l in range(length, 0, -1):
        # 2**(l-1) is +-1 mod 3, so the last digit falls out of m mod 3
        u = m % 3 if l % 2 == 1 else (-m) % 3
        out.append(u)
        m = (m - u * (1 << (l - 1))) // 3
    return "".join(map(str, reversed(out)))


class AscendingOrder:
    """Value-ascending enumeration of the string universe, lazily deepened.

    Single-threaded and stateful; everything it hands out is immutable.
    """

    def __init__(self) -> None:
        self._levels: list[np.ndarray] = [np.array([0, 1, 2], dtype=np.int64)]
        self._keys = np.empty(0, dtype=np.int64)
        self._m = np.empty(0, dtype=np.int64)
        self._lengths = np.empty(0, dtype=np.int64)
        self._final_count = 0
        self._rebuild()

    @property
    def horizon(self) -> int:
        return len(self._levels)

    @property
    def final_count(self) -> int:
        """Number of leading ranks that can no longer change."""
        return self._final_count

    def _rebuild(self) -> None:
        L = self.horizon
        keys = np.concatenate(
            [lvl << (L - l) for l, lvl in enumerate(self._levels, start=1)]
        )
        ms = np.concatenate(self._levels)
        lengths = np.concatenate(
            [np.full(lvl.shape, l, dtype=np.int64) for l, lvl in enumerate(self._levels, start=1)]
        )
        order = np.argsort(keys)
        self._keys = keys[order]
        self._m = ms[order]
        self._lengths = lengths[order]
        # finite representations are unique, so a duplicate key can only
        # mean a bug; fail loudly rather than break ties silently
        if not np.all(np.diff(self._keys) > 0):
            raise AssertionError("duplicate values in ascending enumeration")
        # final once 2*key < 3**L, i.e. value < (3/2)**L
        self._final_count = int(
            np.searchsorted(self._keys, (3 ** L - 1) // 2, side="right")
        )

    def _grow(self) -> None:
        L = self.horizon
        if L >= _MAX_HORIZON:
            raise OverflowError("ascending enumeration horizon too deep")
        prev = self._levels[-1]
        if L == 1:
            prev = prev[1:]  # "0" does not extend: leading zero
        stems = prev * 3
        self._levels.append(
            np.concatenate([stems, stems + (1 << L), stems + (2 << L)])
        )
        self._rebuild()

    def ensure_final_count(self, n: int) -> None:
        while self._final_count < n:
            self._grow()

    def ensure_final_key(self, m: int, length: int) -> None:
        """Grow until the value m / 2**(length-1) lies in the final region."""
        while (
            self.horizon < length
            or 2 * (m << (self.horizon - length)) >= 3 ** self.horizon
        ):
            self._grow()

    def rank_of(self, u_digits: str) -> int:
        """Final ascending rank of a universe string."""
        m = m_key(u_digits)
        self.ensure_final_key(m, len(u_digits))
        key = m << (self.horizon - len(u_digits))
        i = int(np.searchsorted(self._keys, key))
        if i >= len(self._keys) or int(self._keys[i]) != key:
            raise LookupError(f"{u_digits!r} missing from enumeration (internal error)")
        return i

    def string_at(self, rank: int) -> str:
        self.ensure_final_count(rank + 1)
        return u_string_from_m(int(self._m[rank]), int(self._lengths[rank]))

    def u_value_at(self, rank: int) -> Fraction:
        """Base-3/2 value of the string at `rank` (halve for the H reading)."""
        self.ensure_final_count(rank + 1)
        return Fraction(int(self._m[rank]), 1 << (int(self._lengths[rank]) - 1))

    def integer_ranks(self, count: int, halved: bool) -> list[int]:
        """First `count` ranks whose value is an integer.

        halved=False reads values as M/2**(l-1) (base 3/2); halved=True
        reads them as M/2**l (the H relabeling).
        """
        if count < 1:
            raise ValueError("count must be positive")
        while True:
            mod = 1 << (self.horizon - 1 + (1 if halved else 0))
            finals = self._keys[: self._final_count]
            hits = np.nonzero(finals % mod == 0)[0]
            if len(hits) >= count:
                return [int(h) for h in hits[:count]]
            self._grow()


class DictionaryOrder:
    """Length-then-lexicographic enumeration: "0" first, then "1", "2", "10", ...

    Lazily extended one length at a time; ranks are exact from the start
    since longer strings always come later.
    """

    def __init__(self) -> None:
        self._strings: list[str] = ["0"]
        self._rank: dict[str, int] = {"0": 0}
        self._done_len = 0
        self.ensure_length(1)

    def ensure_length(self, length: int) -> None:
        while self._done_len < length:
            l = self._done_len + 1
            for lead in "12":
                for rest in product("012", repeat=l - 1):
                    s = lead + "".join(rest)
                    self._rank[s] = len(self._strings)
                    self._strings.append(s)
            self._done_len = l

    def ensure_count(self, n: int) -> None:
        while len(self._strings) < n:
            self.ensure_length(self._done_len + 1)

    def string_at(self, rank: int) -> str:
        self.ensure_count(rank + 1)
        return self._strings[rank]

    def rank_of(self, u_digits: str) -> int:
        self.ensure_length(len(u_digits))
        try:
            return self._rank[u_digits]
        except KeyError:
            raise ValueError(f"{u_digits!r} is not a canonical universe string") from None


_ascending: AscendingOrder | None = None
_dictionary: DictionaryOrder | None = None


def ascending_order() -> AscendingOrder:
    """Process-wide shared ascending enumeration (grow-on-demand cache)."""
    global _ascending
    if _ascending is None:
        _ascending = AscendingOrder()
    return _ascending


def dictionary_order() -> DictionaryOrder:
    """Process-wide shared dictionary enumeration."""
    global _dictionary
    if _dictionary is None:
        _dictionary = DictionaryOrder()
    return _dictionary
