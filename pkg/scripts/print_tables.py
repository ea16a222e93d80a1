#!/usr/bin/env python3
"""Print the headline tables: listings, expansions, layers, cross-sequence.

Everything here is recomputed from scratch through the library; handy as a
quick visual regression check and as a tour of the API.
"""

from fractions import Fraction

from threehalves import (
    ExpansionPolicy,
    ascending15,
    ascending_rank_of_dict,
    cross_sequence,
    dict_rank_of_ascending,
    dictionary15,
    encode32,
    encode_integer15,
    expand,
    expand_doubled32,
    greedy_partition,
    integer_indices_ascending15,
    script_layer,
)


def rule(title: str) -> None:
    print(f"\n== {title} " + "=" * max(0, 60 - len(title)))


def main() -> None:
    rule("integers in base 3/2 (A024629)")
    print(", ".join(str(encode32(n)) for n in range(16)))

    rule("integers in base 1.5")
    print(", ".join(f"{n}={encode_integer15(n)}" for n in range(1, 11)))

    rule("ascending order, first 15 (with values)")
    for x in ascending15(15):
        print(f"  {str(x):6} = {x.value()}")

    rule("dictionary order, first 15 (with values)")
    for x in dictionary15(15):
        print(f"  {str(x):6} = {x.value()}")

    rule("order permutations")
    print("ascending rank of dictionary numerals:",
          [ascending_rank_of_dict(n) for n in range(24)])
    print("dictionary rank of ascending numerals:",
          [dict_rank_of_ascending(n) for n in range(22)])
    print("indices of integers, ascending order:", integer_indices_ascending15(17))

    rule("expansions of 2 over restricted digit sets")
    P = ExpansionPolicy
    for policy, depth in [(P.FINITE_INTEGER, 0), (P.GREEDY_01, 33), (P.LAZY_01, 5),
                          (P.ONLY_H0, 22), (P.ONLY_H1, 15), (P.MIN_LEFTOVER, 17)]:
        e = expand(2, policy, depth)
        print(f"  {policy.value:8} 2 = {e}   remainder {e.remainder}")

    rule("the same expansions doubled into base 3/2 digits (of 4)")
    for policy, depth in [(P.ONLY_H0, 22), (P.GREEDY_01, 33), (P.ONLY_H1, 22),
                          (P.MIN_LEFTOVER, 17)]:
        e = expand_doubled32(4, policy, depth)
        print(f"  {policy.value:8} 4 = {e}")

    rule("greedy 3-free layers of [0, 100]")
    partition = greedy_partition(100)
    for j, layer in enumerate(partition.layers):
        print(f"  layer {j}: {' '.join(map(str, layer))}")

    rule("shadow layers in base 3/2 (dictionary order)")
    for k in range(4):
        elems = ", ".join(str(x) for x in script_layer(k, 7).elements)
        print(f"  layer {k}: {elems}")

    rule("cross-sequence by all four routes")
    for method in ("greedy", "reinterpret", "dict-index15", "half-a261691"):
        print(f"  {method:13}: {cross_sequence(12, method)}")


if __name__ == "__main__":
    main()
