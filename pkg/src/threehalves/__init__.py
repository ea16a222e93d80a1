"""Exact arithmetic for base 3/2 and base 1.5 numerals.

Two numeral systems share the powers of 3/2: the 2<-3 exploding-dots
machine writes integers over digits {0,1,2}, and the half-digit system
writes them over {0,H,1} with H worth one half. This package provides
both, their enumeration orders, restricted-digit radix-point expansions
with exact remainders, and the greedy 3-free partition machinery that
connects them. Everything is exact; no floating point.
"""

from .base15 import (
    Numeral15,
    ascending15,
    ascending_rank_of_dict,
    dict_rank_of_ascending,
    dictionary15,
    encode_integer15,
    even_h_integers,
    from_base32,
    increment15,
    integer_indices_ascending15,
    integer_indices_dictionary15,
    parse15,
    to_base32,
    value15,
)
from .base32 import (
    BASE32,
    dictionary32,
    digit_sum32,
    encode32,
    integer_indices_ascending32,
    integer_indices_dictionary32,
    parse32,
    value32,
)
from .exactnum import Rational, compare, pow_base, rational, to_decimal
from .expansions import Expansion, ExpansionPolicy, expand, expand_doubled32
from .machine import (
    Explosion,
    MachineConfig,
    MachineRun,
    MachineState,
    Numeral,
    add_dots,
    run_machine,
)
from .stanley import (
    ConjectureReport,
    Partition,
    ScriptLayer,
    TwoOutOfThreeReport,
    cross_sequence,
    greedy_partition,
    is_three_free,
    partition_until,
    script_layer,
    ternary_value,
    two_out_of_three,
    verify_conjecture,
)

__version__ = "0.1.0"
