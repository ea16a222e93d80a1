"""Greedy 3-free partition of the integers and its base-3/2 shadow.

Processing 0, 1, 2, ... in order and dropping each n into the first layer
where it completes no 3-term arithmetic progression splits the integers
into layers S_0 (A005836), S_1 (A323398), S_2 (A323418), S_3 (A323419),
... whose first elements form the cross-sequence A265316.

On the base-3/2 side, the strings over {0,1} in dictionary order form a
layer too, and machine-adding 2k to each of them yields the k-th shadow
layer. Reading those strings as plain ternary numbers conjecturally
reproduces the greedy layers; `verify_conjecture` puts empirical pressure
on that statement without claiming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .base32 import parse32
from .machine import Numeral, add_dots

__all__ = [
    "Partition",
    "greedy_partition",
    "partition_until",
    "is_three_free",
    "ternary_value",
    "ScriptLayer",
    "script_layer",
    "TwoOutOfThreeReport",
    "two_out_of_three",
    "CROSS_METHODS",
    "cross_sequence",
    "LayerComparison",
    "ConjectureReport",
    "verify_conjecture",
]


@dataclass(frozen=True)
class Partition:
    """Layer assignment of [0, bound]: every integer is in exactly one layer."""

    bound: int
    layer_of: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]


def greedy_partition(bound: int) -> Partition:
    """Assign each n in 0..bound to the first layer where it closes no AP."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    layers: list[list[int]] = []
    blocked: list[set[int]] = []  # per layer: n values that would finish an AP
    layer_of: list[int] = []
    for n in range(bound + 1):
        j = 0
        while j < len(layers) and n in blocked[j]:
            j += 1
        if j == len(layers):
            layers.append([])
            blocked.append(set())
        block = blocked[j]
        for x in layers[j]:
            t = 2 * n - x  # n as middle term: x, n, 2n-x
            if t <= bound:
                block.add(t)
        layers[j].append(n)
        layer_of.append(j)
    return Partition(bound, tuple(layer_of), tuple(map(tuple, layers)))


def partition_until(layer: int, terms: int) -> Partition:
    """Grow the bound until layers 0..layer all hold at least `terms` elements.

    Layer prefixes are stable under growth, so doubling the bound is safe.
    """
    bound = 1024
    while True:
        p = greedy_partition(bound)
        if len(p.layers) > layer and all(
            len(p.layers[j]) >= terms for j in range(layer + 1)
        ):
            return p
        bound *= 2


def is_three_free(values) -> bool:
    """True iff no three distinct elements x < y < z satisfy x + z == 2y.

    Works on any exactly-comparable values (ints, Fractions).
    """
    vals = sorted(values)
    present = set(vals)
    for i, y in enumerate(vals):
        for x in vals[:i]:
            if x != y and 2 * y - x in present:
                return False
    return True


def ternary_value(s: Numeral | str) -> int:
    """Read a {0,1,2} digit string as a plain base-3 number."""
    text = str(s)
    out = 0
    for ch in text:
        d = int(ch)
        if d > 2:
            raise ValueError(f"not a ternary digit string: {text!r}")
        out = 3 * out + d
    return out


def _binary_strings(max_len: int) -> list[str]:
    """The {0,1}-strings of length <= max_len in dictionary order."""
    out = ["0"]
    for l in range(1, max_len + 1):
        out.extend("1" + "".join(rest) for rest in product("01", repeat=l - 1))
    return out


@dataclass(frozen=True)
class ScriptLayer:
    """Shadow layer k: the {0,1} strings machine-shifted by 2k, dictionary order."""

    k: int
    elements: tuple[Numeral, ...]
    sources: tuple[Numeral, ...]  # aligned {0,1}-string preimages


def script_layer(k: int, count: int) -> ScriptLayer:
    """First `count` elements of shadow layer k in dictionary order.

    Machine addition can lengthen strings but never shortens them, so once
    every input of length <= L is processed, outputs of length <= L are
    final; the input horizon grows until the requested prefix is final.
    """
    if k < 0 or count < 1:
        raise ValueError("need k >= 0 and count >= 1")
    max_in = 1
    while True:
        pairs = []
        for s in _binary_strings(max_in):
            src = parse32(s)
            pairs.append((add_dots(src, 2 * k), src))
        pairs.sort(key=lambda p: (len(p[0].int_digits), p[0].int_digits))
        if len(pairs) >= count and len(pairs[count - 1][0].int_digits) <= max_in:
            head = pairs[:count]
            return ScriptLayer(
                k, tuple(p[0] for p in head), tuple(p[1] for p in head)
            )
        max_in += 1


@dataclass(frozen=True)
class TwoOutOfThreeReport:
    """Result of the suffix-table check on a set of digit strings.

    `ok` demands at most two distinct last digits and at most two distinct
    digits before every realized suffix; `realized_pairs` counts suffixes
    where two predecessors actually occur (a finite sample may not realize
    both, so that part is reported rather than required).
    """

    ok: bool
    last_digits: frozenset[str]
    realized_pairs: int
    suffixes: int

    def __bool__(self) -> bool:
        return self.ok


def two_out_of_three(strings) -> TwoOutOfThreeReport:
    texts = [str(s) for s in strings]
    if not texts:
        raise ValueError("need a non-empty set of strings")
    last = {t[-1] for t in texts}
    preceding: dict[str, set[str]] = {}
    for t in texts:
        for m in range(1, len(t)):
            preceding.setdefault(t[m:], set()).add(t[m - 1])
    ok = len(last) <= 2 and all(len(v) <= 2 for v in preceding.values())
    realized = sum(1 for v in preceding.values() if len(v) == 2)
    return TwoOutOfThreeReport(ok, frozenset(last), realized, len(preceding))


CROSS_METHODS = ("greedy", "reinterpret", "dict-index15", "half-a261691")


def cross_sequence(count: int, method: str = "greedy") -> list[int]:
    """First `count` terms of the cross-sequence by one of four routes.

    greedy:        first element of each greedy partition layer
    reinterpret:   ternary reading of 2n written in base 3/2
    dict-index15:  positions of integers in the base-1.5 dictionary order
    half-a261691:  every other position of integers in the base-3/2
                   dictionary order
    """
    if count < 1:
        raise ValueError("count must be positive")
    if method == "greedy":
        p = partition_until(count - 1, 1)
        return [p.layers[j][0] for j in range(count)]
    if method == "reinterpret":
        from .base32 import encode32

        return [ternary_value(encode32(2 * n)) for n in range(count)]
    if method == "dict-index15":
        from .base15 import integer_indices_dictionary15

        return integer_indices_dictionary15(count)
    if method == "half-a261691":
        from .base32 import integer_indices_dictionary32

        return integer_indices_dictionary32(2 * count - 1)[::2]
    raise ValueError(f"unknown method {method!r}; choose from {CROSS_METHODS}")


@dataclass(frozen=True)
class LayerComparison:
    layer: int
    greedy_prefix: tuple[int, ...]
    ternary_prefix: tuple[int, ...]

    @property
    def agree(self) -> bool:
        return self.greedy_prefix == self.ternary_prefix

    @property
    def first_divergence(self) -> int | None:
        for i, (a, b) in enumerate(zip(self.greedy_prefix, self.ternary_prefix)):
            if a != b:
                return i
        return None


@dataclass(frozen=True)
class ConjectureReport:
    terms: int
    comparisons: tuple[LayerComparison, ...]

    @property
    def all_agree(self) -> bool:
        return all(c.agree for c in self.comparisons)

    @property
    def falsifications(self) -> list[tuple[int, int]]:
        return [
            (c.layer, c.first_divergence)
            for c in self.comparisons
            if not c.agree
        ]

    def render(self) -> str:
        lines = []
        for c in self.comparisons:
            if c.agree:
                lines.append(f"layer {c.layer}: agree on {self.terms} terms")
            else:
                lines.append(
                    f"layer {c.layer}: conjecture falsified at "
                    f"(k={c.layer}, index={c.first_divergence}): "
                    f"greedy {c.greedy_prefix[c.first_divergence]} vs "
                    f"ternary {c.ternary_prefix[c.first_divergence]}"
                )
        n_ok = sum(c.agree for c in self.comparisons)
        lines.append(f"layers 0..{len(self.comparisons) - 1}: {n_ok}/{len(self.comparisons)} agree")
        return "\n".join(lines)


def verify_conjecture(k_max: int, terms: int) -> ConjectureReport:
    """Compare greedy layers 0..k_max against the ternary-read shadow layers.

    Both routes are self-validated first (shadow elements must differ from
    their {0,1} preimage by exactly 2k in value; greedy prefixes must be
    3-free), so a mismatch is a finding about the conjecture rather than
    an implementation failure.
    """
    if k_max < 0 or terms < 1:
        raise ValueError("need k_max >= 0 and terms >= 1")
    part = partition_until(k_max, terms)
    comparisons = []
    for k in range(k_max + 1):
        shadow = script_layer(k, terms)
        for out, src in zip(shadow.elements, shadow.sources):
            if out.value() != src.value() + 2 * k:
                raise AssertionError(
                    f"shadow layer {k} broke its own construction at {out}"
                )
        greedy_prefix = part.layers[k][:terms]
        if not is_three_free(greedy_prefix):
            raise AssertionError(f"greedy layer {k} is not 3-free")
        ternary_prefix = tuple(ternary_value(e) for e in shadow.elements)
        comparisons.append(LayerComparison(k, greedy_prefix, ternary_prefix))
    return ConjectureReport(terms, tuple(comparisons))
