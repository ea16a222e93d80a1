"""Exploding-dots machines for rational bases b/a.

A row of boxes is numbered from the right starting at box 0. Whenever a
box holds at least b dots it explodes: b dots are removed from it and a
dots appear in the box to its left. With b > a every explosion strictly
lowers the total dot count, so the machine always stabilizes; the stable
box counts, read from the leftmost nonempty box, are the base-b/a digits
of the starting pile.

The rewriting is confluent (explosions in different boxes commute), so
the result does not depend on scheduling. The canonical schedule used
here always explodes the lowest-index over-full box first, which makes
traces deterministic; since dots only ever move leftwards, that schedule
is a single left-to-right sweep and explosions at one box can be batched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "MachineConfig",
    "Explosion",
    "MachineState",
    "MachineRun",
    "Numeral",
    "run_machine",
    "add_dots",
]


@dataclass(frozen=True)
class MachineConfig:
    """An a <- b machine: explosions remove b dots and carry a leftwards."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise TypeError("machine parameters must be integers")
        if not self.b > self.a >= 1:
            raise ValueError(f"need b > a >= 1, got a={self.a}, b={self.b}")

    @property
    def base(self) -> Fraction:
        return Fraction(self.b, self.a)

    def __str__(self) -> str:
        return f"{self.a}<-{self.b}"


@dataclass(frozen=True)
class Explosion:
    """One explosion event: box `box` went from `before` to `after` dots."""

    box: int
    before: int
    after: int

    def render(self, config: MachineConfig) -> str:
        return (
            f"box {self.box}: {self.before} -> {self.after}, "
            f"box {self.box + 1} += {config.a}"
        )


@dataclass(frozen=True)
class MachineState:
    """Stable box contents (index 0 = rightmost) plus the explosion trace."""

    boxes: tuple[int, ...]
    trace: tuple[Explosion, ...] = ()


@dataclass(frozen=True)
class Numeral:
    """A digit string over a machine alphabet, most significant digit first.

    `frac_digits` holds digits right of the radix point (positions -1,
    -2, ...); expansions produce those, machine runs never do.
    """

    config: MachineConfig
    int_digits: tuple[int, ...]
    frac_digits: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.int_digits:
            raise ValueError("integer part needs at least one digit")
        b = self.config.b
        for d in (*self.int_digits, *self.frac_digits):
            if not (isinstance(d, int) and 0 <= d < b):
                raise ValueError(f"digit {d!r} out of range for base {b}/{self.config.a}")
        if len(self.int_digits) > 1 and self.int_digits[0] == 0:
            raise ValueError("leading zero in numeral")

    @classmethod
    def parse(cls, text: str, config: MachineConfig) -> "Numeral":
        int_part, dot, frac_part = text.partition(".")
        if not int_part or (dot and not frac_part):
            raise ValueError(f"malformed numeral {text!r}")
        if not all(c.isdigit() for c in int_part + frac_part):
            raise ValueError(f"malformed numeral {text!r}")
        digits = tuple(int(c) for c in int_part)
        while len(digits) > 1 and digits[0] == 0:
            digits = digits[1:]
        return cls(config, digits, tuple(int(c) for c in frac_part))

    def value(self) -> Fraction:
        """Exact sum of digit * (b/a)**position over all positions."""
        a, b = self.config.a, self.config.b
        m, apow = 0, 1
        for d in self.int_digits:
            m = m * b + d * apow
            apow *= a
        num, den = m, apow // a  # den = a**(len-1)
        if self.frac_digits:
            depth = len(self.frac_digits)
            f, ap, bp = 0, a, b ** (depth - 1)
            for d in self.frac_digits:
                f += d * ap * bp
                ap *= a
                bp //= b
            num = m * b ** depth + f * den
            den = den * b ** depth
        return Fraction(num, den)

    def render(self) -> str:
        """Digit string with '.' as radix point; single characters only."""
        if any(d > 9 for d in (*self.int_digits, *self.frac_digits)):
            raise ValueError("digits above 9 have no single-character rendering")
        s = "".join(map(str, self.int_digits))
        if self.frac_digits:
            s += "." + "".join(map(str, self.frac_digits))
        return s

    def __str__(self) -> str:
        return self.render()


def _stabilize(
    boxes: list[int], config: MachineConfig, events: list[Explosion] | None
) -> list[int]:
    # One left-to-right sweep suffices: box k+1 only ever gains from box k,
    # and boxes already passed never overflow again. Batching the m
    # explosions of one box reproduces the lowest-index-first schedule.
    a, b = config.a, config.b
    i = 0
    while i < len(boxes):
        c = boxes[i]
        if c >= b:
            m, r = divmod(c, b)
            if i + 1 == len(boxes):
                boxes.append(0)
            boxes[i + 1] += a * m
            boxes[i] = r
            if events is not None:
                events.extend(
                    Explosion(i, c - j * b, c - (j + 1) * b) for j in range(m)
                )
        i += 1
    while len(boxes) > 1 and boxes[-1] == 0:
        boxes.pop()
    return boxes


@dataclass(frozen=True)
class MachineRun:
    numeral: Numeral
    state: MachineState


def run_machine(n: int, config: MachineConfig, trace: bool = False) -> MachineRun:
    """Drop n dots into box 0 and stabilize; digits read off the boxes.

    With trace=True the returned state carries one event per explosion in
    canonical (lowest box first) order.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"need a non-negative integer, got {n!r}")
    events: list[Explosion] | None = [] if trace else None
    boxes = _stabilize([n], config, events)
    numeral = Numeral(config, tuple(reversed(boxes)))
    return MachineRun(numeral, MachineState(tuple(boxes), tuple(events or ())))


def add_dots(x: Numeral, n: int, trace: bool = False):
    """Add n dots to box 0 of a stable numeral and re-stabilize.

    This is machine-carry addition: the result's value is value(x) + n.
    Returns the new Numeral, or a MachineRun when trace=True.
    """
    if x.frac_digits:
        raise ValueError("cannot add dots to a numeral with fractional digits")
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"need a non-negative integer, got {n!r}")
    events: list[Explosion] | None = [] if trace else None
    boxes = list(reversed(x.int_digits))
    boxes[0] += n
    boxes = _stabilize(boxes, x.config, events)
    numeral = Numeral(x.config, tuple(reversed(boxes)))
    if trace:
        return MachineRun(numeral, MachineState(tuple(boxes), tuple(events or ())))
    return numeral
