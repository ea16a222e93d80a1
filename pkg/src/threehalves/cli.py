"""Command-line front end: conversions, expansions, sequences, verification.

Exit codes: 0 success / property verified, 1 violation found, 2 usage error.
All commands are deterministic for fixed flags; randomized checks take an
explicit seed with a constant default.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import base15, base32, stanley
from .exactnum import to_decimal
from .expansions import ExpansionPolicy, expand, expand_doubled32
from .machine import MachineConfig, Numeral, run_machine

__all__ = ["BFile", "SEQUENCES", "main"]


@dataclass(frozen=True)
class BFile:
    """OEIS interchange format: consecutive "index value" lines."""

    offset: int
    values: tuple[int, ...]

    def render(self) -> str:
        return "".join(
            f"{self.offset + i} {v}\n" for i, v in enumerate(self.values)
        )

    @classmethod
    def parse(cls, text: str) -> "BFile":
        entries: list[tuple[int, int]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'index value', got {raw!r}")
            idx, val = int(parts[0]), int(parts[1])
            if val < 0:
                raise ValueError(f"line {lineno}: negative value {val}")
            entries.append((idx, val))
        if not entries:
            raise ValueError("no entries in b-file")
        offset = entries[0][0]
        for pos, (idx, _) in enumerate(entries):
            if idx != offset + pos:
                raise ValueError(f"non-consecutive index {idx} (expected {offset + pos})")
        return cls(offset, tuple(v for _, v in entries))


def _greedy_layer_terms(layer: int, count: int) -> list[int]:
    return list(stanley.partition_until(layer, count).layers[layer][:count])


#: supported sequence ids -> (description, generator(count, method) -> list[int])
SEQUENCES = {
    "a024629": (
        "integers written in base 3/2 (digit strings as decimal numerals)",
        lambda n, m: [int(str(base32.encode32(i))) for i in range(n)],
    ),
    "a244040": (
        "digit sum of n in base 3/2",
        lambda n, m: [base32.digit_sum32(i) for i in range(n)],
    ),
    "a320272": (
        "indices of integers, base 3/2 ascending order",
        lambda n, m: base32.integer_indices_ascending32(n),
    ),
    "a261691": (
        "indices of integers, base 3/2 dictionary order",
        lambda n, m: base32.integer_indices_dictionary32(n),
    ),
    "a320035": (
        "indices of integers, base 1.5 ascending order",
        lambda n, m: base15.integer_indices_ascending15(n),
    ),
    "a265316": (
        "the Stanley cross-sequence (--method picks the route)",
        lambda n, m: stanley.cross_sequence(n, m or "greedy"),
    ),
    "a320274": (
        "ascending rank of the n-th dictionary numeral, base 1.5",
        lambda n, m: [base15.ascending_rank_of_dict(i) for i in range(n)],
    ),
    "a320273": (
        "dictionary rank of the n-th ascending numeral, base 1.5",
        lambda n, m: [base15.dict_rank_of_ascending(i) for i in range(n)],
    ),
    "a256785": (
        "integers with an even number of H digits in base 1.5",
        lambda n, m: base15.even_h_integers(n),
    ),
    "a005836": (
        "integers without digit 2 in ternary (greedy layer 0)",
        lambda n, m: [int(bin(i)[2:], 3) for i in range(n)],
    ),
    "a323398": ("greedy 3-free layer 1", lambda n, m: _greedy_layer_terms(1, n)),
    "a323418": ("greedy 3-free layer 2", lambda n, m: _greedy_layer_terms(2, n)),
    "a323419": ("greedy 3-free layer 3", lambda n, m: _greedy_layer_terms(3, n)),
}

_POLICIES = {p.value: p for p in ExpansionPolicy}


def _parse_rational(text: str) -> Fraction:
    try:
        if "/" in text:
            p, q = text.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse {text!r} as integer or p/q") from exc


def _parse_machine_spec(text: str) -> MachineConfig:
    try:
        a, b = (int(part) for part in text.split(","))
        return MachineConfig(a, b)
    except (ValueError, TypeError) as exc:
        raise ValueError(f"bad machine spec {text!r}; expected 'a,b' with b > a >= 1") from exc


def _cmd_convert(args) -> int:
    if args.trace and not args.machine:
        print("--trace needs --machine", file=sys.stderr)
        return 2
    try:
        if args.parse:
            if args.base15:
                value = base15.value15(args.value)
            else:
                config = _parse_machine_spec(args.machine or "2,3")
                value = Numeral.parse(args.value, config).value()
            print(value)
            return 0
        x = _parse_rational(args.value)
        if x.denominator != 1 or x < 0:
            raise ValueError(f"conversion needs a non-negative integer, got {args.value!r}")
        n = int(x)
        if args.base15:
            print(base15.encode_integer15(n))
            return 0
        config = _parse_machine_spec(args.machine or "2,3")
        run = run_machine(n, config, trace=args.trace)
        if args.trace:
            for event in run.state.trace:
                print(event.render(config))
        print(run.numeral)
        return 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _cmd_expand(args) -> int:
    try:
        x = _parse_rational(args.value)
        policy = _POLICIES[args.policy]
        fn = expand_doubled32 if args.doubled else expand
        result = fn(x, policy, args.frac_digits)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(result)
    r = result.remainder
    print(f"remainder = {r.numerator}/{r.denominator}" if r else "remainder = 0")
    if args.decimal:
        approx, exact = to_decimal(result.value(), args.decimal)
        print(f"digits value ~ {approx}{'' if exact else '...'}")
    return 0


def _cmd_seq(args) -> int:
    if args.id not in SEQUENCES:
        print(
            f"unknown sequence {args.id!r}; supported: {', '.join(sorted(SEQUENCES))}",
            file=sys.stderr,
        )
        return 2
    if args.method and args.id != "a265316":
        print("--method only applies to a265316", file=sys.stderr)
        return 2
    if args.count < 1:
        print("--count must be positive", file=sys.stderr)
        return 2
    try:
        values = SEQUENCES[args.id][1](args.count, args.method)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(BFile(args.offset, tuple(values)).render())
    return 0


def _cmd_check(args) -> int:
    try:
        with open(args.file, encoding="ascii") as fh:
            reference = BFile.parse(fh.read())
    except (OSError, ValueError) as exc:
        print(f"error reading {args.file}: {exc}", file=sys.stderr)
        return 2
    if args.id not in SEQUENCES:
        print(
            f"unknown sequence {args.id!r}; supported: {', '.join(sorted(SEQUENCES))}",
            file=sys.stderr,
        )
        return 2
    count = len(reference.values) if args.count is None else min(args.count, len(reference.values))
    ours = SEQUENCES[args.id][1](count, args.method)
    for i, (got, want) in enumerate(zip(ours, reference.values)):
        if got != want:
            print(
                f"mismatch at index {reference.offset + i}: "
                f"generated {got}, file has {want}"
            )
            return 1
    print(f"{args.id}: {count} terms match {args.file}")
    return 0


def _cmd_partition(args) -> int:
    p = stanley.greedy_partition(args.bound)
    shown = min(args.layers, len(p.layers))
    for j in range(shown):
        elems = " ".join(map(str, p.layers[j]))
        print(f"layer {j} ({len(p.layers[j])} elements): {elems}")
    if args.layers > len(p.layers):
        print(f"only {len(p.layers)} layers exist up to bound {p.bound}")
    return 0


def _cmd_verify_conjecture(args) -> int:
    report = stanley.verify_conjecture(args.layers, args.terms)
    print(report.render())
    return 0 if report.all_agree else 1


def _suite_up_up_down(limit: int, rng: random.Random) -> list[str]:
    # dictionary order rises twice then falls once, with exact steps 1/2
    numerals = base15.dictionary15(limit)
    vals = [x.value() for x in numerals]
    bad = []
    for k in range(0, len(vals) - 3, 3):
        v0, v1, v2, v3 = vals[k : k + 4]
        if not (v0 < v1 < v2 > v3):
            bad.append(f"order broken in triple starting at index {k}")
        if v2 - v1 != Fraction(1, 2) or v2 - v0 != 1:
            bad.append(f"step sizes broken at index {k}")
    return bad


def _suite_three_free(limit: int, rng: random.Random) -> list[str]:
    bad = []
    for k in range(11):
        layer = stanley.script_layer(k, limit)
        if not stanley.is_three_free([e.value() for e in layer.elements]):
            bad.append(f"shadow layer {k} values contain an AP")
        if not stanley.is_three_free([stanley.ternary_value(e) for e in layer.elements]):
            bad.append(f"ternary image of shadow layer {k} contains an AP")
    return bad


def _suite_two_out_of_three(limit: int, rng: random.Random) -> list[str]:
    bad = []
    for k in range(9):
        layer = stanley.script_layer(k, limit)
        report = stanley.two_out_of_three([str(e) for e in layer.elements])
        if not report.ok:
            bad.append(f"shadow layer {k} violates the two-out-of-three property")
    return bad


def _suite_cover(limit: int, rng: random.Random) -> list[str]:
    # every string of length <= limit must land in exactly one shadow layer
    universe = ["0"] + [
        lead + "".join(rest)
        for l in range(1, limit + 1)
        for lead in "12"
        for rest in product("012", repeat=l - 1)
    ]
    max_value = base32.value32("2" * limit)
    owner: dict[str, int] = {}
    bad = []
    k = 0
    while 2 * k <= max_value:
        for s in stanley._binary_strings(limit):
            out = str(stanley.add_dots(base32.parse32(s), 2 * k))
            if len(out) <= limit:
                if out in owner:
                    bad.append(f"{out} is in layers {owner[out]} and {k}")
                owner[out] = k
        k += 1
    missing = [s for s in universe if s not in owner]
    bad.extend(f"{s} is in no layer" for s in missing[:5])
    return bad


def _suite_ap_digits(limit: int, rng: random.Random) -> list[str]:
    # last ternary digits of an AP are all equal or all distinct
    bad = []
    for _ in range(limit):
        a = rng.randrange(0, 10 ** 6)
        d = rng.randrange(1, 10 ** 4)
        last = {a % 3, (a + d) % 3, (a + 2 * d) % 3}
        if len(last) == 2:
            bad.append(f"AP ({a}, {a + d}, {a + 2 * d}) has two last ternary digits")
    return bad


def _suite_doubling(limit: int, rng: random.Random) -> list[str]:
    from .enumeration import dictionary_order

    bad = []
    order = dictionary_order()
    i = 0
    while True:
        s = order.string_at(i)
        if len(s) > limit:
            break
        x15 = base15.Numeral15(s.translate(str.maketrans("012", "0H1")))
        if base32.value32(base15.to_base32(x15)) != 2 * x15.value():
            bad.append(f"doubling map broke at {x15}")
        i += 1
    return bad


_SUITES = {
    "up-up-down": (1000, _suite_up_up_down),
    "three-free": (100, _suite_three_free),
    "two-out-of-three": (50, _suite_two_out_of_three),
    "cover": (6, _suite_cover),
    "ap-digits": (10000, _suite_ap_digits),
    "doubling": (8, _suite_doubling),
}


def _cmd_verify_lemmas(args) -> int:
    limit = args.limit if args.limit is not None else _SUITES[args.suite][0]
    rng = random.Random(args.seed)
    violations = _SUITES[args.suite][1](limit, rng)
    if violations:
        for v in violations:
            print(v)
        return 1
    print(f"{args.suite}: pass (limit={limit})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threehalves",
        description="Exact base-3/2 and base-1.5 arithmetic, expansions, and 3-free partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert an integer to a machine base or base 1.5")
    p.add_argument("value", help="non-negative integer (or digits with --parse)")
    p.add_argument("--machine", metavar="A,B", help="a<-b machine spec, e.g. 2,3")
    p.add_argument("--base15", action="store_true", help="target base 1.5 (digits 0,H,1)")
    p.add_argument("--trace", action="store_true", help="print one line per explosion")
    p.add_argument("--parse", action="store_true", help="read VALUE as digits and print its exact value")
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("expand", help="radix-point expansion of a positive rational")
    p.add_argument("value", help="positive integer or p/q")
    p.add_argument("--policy", required=True, choices=sorted(_POLICIES))
    p.add_argument("--frac-digits", type=int, default=0, metavar="D")
    p.add_argument("--doubled", action="store_true", help="digit-doubled base-3/2 variant")
    p.add_argument("--decimal", type=int, default=0, metavar="PLACES",
                   help="also print a truncated decimal of the emitted digits")
    p.set_defaults(fn=_cmd_expand)

    p = sub.add_parser("seq", help="print a sequence as b-file lines")
    p.add_argument("id", help="sequence id, e.g. a265316")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--offset", type=int, default=0)
    p.add_argument("--method", choices=stanley.CROSS_METHODS, default=None,
                   help="route for a265316")
    p.set_defaults(fn=_cmd_seq)

    p = sub.add_parser("check", help="compare a sequence against a b-file")
    p.add_argument("id")
    p.add_argument("file")
    p.add_argument("--count", type=int, default=None, help="limit the number of terms compared")
    p.add_argument("--method", choices=stanley.CROSS_METHODS, default=None)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("partition", help="greedy 3-free partition report")
    p.add_argument("--bound", type=int, default=100)
    p.add_argument("--layers", type=int, default=4)
    p.set_defaults(fn=_cmd_partition)

    p = sub.add_parser("verify", help="run verification reports")
    vsub = p.add_subparsers(dest="target", required=True)

    pc = vsub.add_parser("conjecture", help="greedy layers vs ternary-read shadow layers")
    pc.add_argument("--layers", type=int, default=8, metavar="K",
                    help="largest layer index checked (inclusive)")
    pc.add_argument("--terms", type=int, default=20)
    pc.set_defaults(fn=_cmd_verify_conjecture)

    pl = vsub.add_parser("lemmas", help="property suites")
    pl.add_argument("--suite", required=True, choices=sorted(_SUITES))
    pl.add_argument("--limit", type=int, default=None)
    pl.add_argument("--seed", type=int, default=2023)
    pl.set_defaults(fn=_cmd_verify_lemmas)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
