from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from threehalves.base32 import encode32, parse32, value32
from threehalves.machine import add_dots
from threehalves.stanley import (
    CROSS_METHODS,
    cross_sequence,
    greedy_partition,
    is_three_free,
    partition_until,
    script_layer,
    ternary_value,
    two_out_of_three,
    verify_conjecture,
)

CROSS_PREFIX = [0, 2, 7, 21, 23, 64, 69, 71, 193, 207, 209, 214]


def test_layer_prefixes():
    p = greedy_partition(250)
    assert p.layers[0][:11] == (0, 1, 3, 4, 9, 10, 12, 13, 27, 28, 30)
    assert p.layers[1][:5] == (2, 5, 6, 11, 14)
    assert p.layers[2][:7] == (7, 8, 16, 17, 19, 20, 34)
    assert p.layers[3][:7] == (21, 22, 24, 25, 48, 49, 51)


def test_partition_totality_and_freeness():
    bound = 2000
    p = greedy_partition(bound)
    assert sorted(x for layer in p.layers for x in layer) == list(range(bound + 1))
    assert len(p.layer_of) == bound + 1
    for j, layer in enumerate(p.layers):
        assert is_three_free(layer), f"layer {j} has an AP"
        assert all(p.layer_of[x] == j for x in layer)


def test_layer_zero_avoids_ternary_twos():
    p = greedy_partition(2000)
    no_twos = [n for n in range(2001) if "2" not in _ternary(n)]
    assert list(p.layers[0]) == no_twos


def _ternary(n: int) -> str:
    if n == 0:
        return "0"
    out = ""
    while n:
        out = str(n % 3) + out
        n //= 3
    return out


def test_prefixes_stable_under_bound_growth():
    small, big = greedy_partition(300), greedy_partition(900)
    for j, layer in enumerate(small.layers):
        assert big.layers[j][: len(layer)] == layer


@pytest.mark.parametrize("method", CROSS_METHODS)
def test_cross_sequence_all_methods(method):
    assert cross_sequence(12, method) == CROSS_PREFIX


def test_cross_sequence_reinterpret_example():
    assert str(encode32(4)) == "21"
    assert ternary_value(encode32(4)) == 7
    assert cross_sequence(3, "reinterpret")[2] == 7


def test_cross_sequence_rejects_unknown_method():
    with pytest.raises(ValueError):
        cross_sequence(5, "guess")


@pytest.mark.parametrize(
    ("s", "expected"), [("212", 23), ("0", 0), ("2100", 63)]
)
def test_ternary_value(s, expected):
    assert ternary_value(s) == expected


def test_ternary_value_rejects_wide_digits():
    with pytest.raises(ValueError):
        ternary_value("31")


def test_script_layers_match_listings():
    assert [str(x) for x in script_layer(0, 5).elements] == ["0", "1", "10", "11", "100"]
    assert [str(x) for x in script_layer(1, 7).elements] == [
        "2", "12", "20", "102", "112", "120", "200",
    ]
    assert [str(x) for x in script_layer(2, 6).elements] == [
        "21", "22", "121", "122", "201", "202",
    ]
    assert [str(x) for x in script_layer(3, 6).elements] == [
        "210", "211", "220", "221", "1210", "1211",
    ]


def test_script_layer_is_shifted_binary_layer():
    for k in (0, 1, 2, 5):
        layer = script_layer(k, 40)
        for out, src in zip(layer.elements, layer.sources):
            assert set(str(src)) <= {"0", "1"}
            assert out.value() == src.value() + 2 * k
            assert str(add_dots(src, 2 * k)) == str(out)


def test_is_three_free():
    assert is_three_free([0, 1, 3, 4, 9])
    assert not is_three_free([0, 1, 2])
    values = [value32(s) for s in ("2", "12", "20", "102", "112", "120", "200")]
    assert is_three_free(values)
    # brute force over all triples as an independent check
    for i, x in enumerate(values):
        for j in range(i + 1, len(values)):
            for t in range(j + 1, len(values)):
                assert values[i] + values[t] != 2 * values[j]


def test_script_layer_values_and_ternary_images_three_free():
    for k in range(8):
        layer = script_layer(k, 60)
        assert is_three_free([e.value() for e in layer.elements])
        assert is_three_free([ternary_value(e) for e in layer.elements])


def test_two_out_of_three():
    s1 = [str(x) for x in script_layer(1, 50).elements]
    report = two_out_of_three(s1)
    assert report.ok and bool(report)
    assert report.realized_pairs > 0

    assert not two_out_of_three(["0", "1", "2"]).ok  # three last digits

    s0 = [str(x) for x in script_layer(0, 50).elements]
    assert two_out_of_three(s0).ok

    with pytest.raises(ValueError):
        two_out_of_three([])


def test_two_out_of_three_catches_suffix_violation():
    assert not two_out_of_three(["00", "10", "20", "1"]).ok


def test_disjoint_cover_short_strings():
    max_len = 6
    universe = {"0"} | {
        lead + "".join(rest)
        for l in range(1, max_len + 1)
        for lead in "12"
        for rest in product("012", repeat=l - 1)
    }
    owner = {}
    top_value = value32("2" * max_len)
    k = 0
    while 2 * k <= top_value:
        srcs = ["0"] + [
            "1" + "".join(rest)
            for l in range(1, max_len + 1)
            for rest in product("01", repeat=l - 1)
        ]
        for s in srcs:
            out = str(add_dots(parse32(s), 2 * k))
            if len(out) <= max_len:
                assert out not in owner, f"{out} in layers {owner[out]} and {k}"
                owner[out] = k
        k += 1
    assert set(owner) == universe


@given(st.integers(0, 10 ** 9), st.integers(1, 10 ** 6))
def test_ap_last_ternary_digits(a, d):
    last = {a % 3, (a + d) % 3, (a + 2 * d) % 3}
    assert len(last) in (1, 3)


def test_partition_until_grows_enough():
    p = partition_until(5, 10)
    assert len(p.layers) > 5
    assert all(len(p.layers[j]) >= 10 for j in range(6))


def test_verify_conjecture_small():
    report = verify_conjecture(3, 5)
    assert report.all_agree
    assert report.falsifications == []
    layer3 = report.comparisons[3]
    assert layer3.ternary_prefix == (21, 22, 24, 25, 48)
    assert layer3.greedy_prefix == (21, 22, 24, 25, 48)
    assert "agree" in report.render()


def test_verify_conjecture_trivial_layer():
    report = verify_conjecture(0, 3)
    assert report.comparisons[0].greedy_prefix == (0, 1, 3)
    assert report.comparisons[0].ternary_prefix == (0, 1, 3)


def test_verify_conjecture_first_elements():
    report = verify_conjecture(11, 1)
    firsts = [c.ternary_prefix[0] for c in report.comparisons]
    assert firsts == CROSS_PREFIX
    assert report.all_agree
