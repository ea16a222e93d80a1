#!/usr/bin/env python3
"""Push the layer conjecture further than the default verification run.

Compares greedy 3-free layers against ternary readings of the base-3/2
shadow layers for a configurable number of layers and terms, reporting
timing and the outcome. Exit code 1 if any layer disagrees.
"""

import argparse
import sys
import time

from threehalves import verify_conjecture


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--layers", type=int, default=12,
                        help="largest layer index checked, inclusive")
    parser.add_argument("--terms", type=int, default=40,
                        help="terms compared per layer")
    args = parser.parse_args()

    started = time.monotonic()
    report = verify_conjecture(args.layers, args.terms)
    elapsed = time.monotonic() - started

    print(report.render())
    print(f"\nchecked {args.layers + 1} layers x {args.terms} terms in {elapsed:.2f}s")
    if report.all_agree:
        print("no counterexample found; the identity held everywhere tested")
        return 0
    print("DISAGREEMENT FOUND — see the falsified layers above")
    return 1


if __name__ == "__main__":
    sys.exit(main())
