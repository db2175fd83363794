#!/usr/bin/env python3
"""Tour of the exact structure layer: one worked decomposition, the chain
invariants over a small range, and embedding multiplicities.

Run:
  python3 demos/structure_tour.py
  python3 demos/structure_tour.py --m 1616615 --range-max 2000
"""

import argparse
from collections import Counter

from zmstar import (
    AbelianGroupSpec,
    carmichael_lambda,
    euler_phi,
    invariant_factors,
    msg_multiplicity,
)


def worked_example(m: int) -> None:
    group = invariant_factors(m)
    print(f"m = {m}")
    print(f"  elementary divisors : {Counter(group.elementary)}")
    print(f"  invariant factors   : {group}")
    print(f"  total count inv(m)  : {group.total}")
    print(f"  phi(m) = {euler_phi(m)}, lambda(m) = {carmichael_lambda(m)}")
    expanded = group.expanded()
    prod = 1
    for d in expanded:
        prod *= d
    print(f"  chain product == phi : {prod == euler_phi(m)}")
    print(f"  chain max == lambda  : {expanded[-1] == carmichael_lambda(m)}")


def chain_sweep(bound: int) -> None:
    print(f"\nchain invariants for 3 <= m <= {bound}:")
    worst_len = (0, 0)
    for m in range(3, bound + 1):
        group = invariant_factors(m)
        expanded = group.expanded()
        assert all(b % a == 0 for a, b in zip(expanded, expanded[1:]))
        assert all(d % 2 == 0 for d in expanded)
        if group.total > worst_len[0]:
            worst_len = (group.total, m)
    print(f"  divisibility and evenness hold everywhere (asserted)")
    print(f"  longest chain: {worst_len[0]} factors at m = {worst_len[1]}")


def embedding_table(bound: int) -> None:
    print("\nembedding multiplicities msg(m; G) for small groups:")
    targets = [("Z2", (2,)), ("Z4", (4,)), ("Z2 x Z2", (2, 2)), ("Z2 x Z4", (2, 4))]
    sample = [15, 91, 120, 255, 1616615]
    header = "  m".ljust(12) + "".join(name.ljust(10) for name, _ in targets)
    print(header)
    for m in sample:
        if m > bound and m != 1616615:
            continue
        row = f"  {m}".ljust(12)
        for _, orders in targets:
            G = AbelianGroupSpec.from_orders(orders)
            row += str(msg_multiplicity(m, G)).ljust(10)
        print(row)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, default=1616615, help="worked example modulus")
    parser.add_argument("--range-max", type=int, default=2000, help="sweep bound")
    args = parser.parse_args()

    worked_example(args.m)
    chain_sweep(args.range_max)
    embedding_table(args.range_max)


if __name__ == "__main__":
    main()
