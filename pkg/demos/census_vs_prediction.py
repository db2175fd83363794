#!/usr/bin/env python3
"""Census a range of moduli and hold the sample statistics of inv(m;d)
against the exact identities and the asymptotic slope constants.

Two kinds of facts are on display:

* exact at every N: the mean identity
      sum_m (inv_total(m) - omega(m)) = #{m : 8 | m} - #{m : 2 || m},
  an integer equality of census tallies;
* asymptotic: E inv(m;d) ~ leading * loglog n + secondary * sqrt(loglog n),
  whose convergence is loglog-slow, so the finite-N gap is shown rather
  than hidden.

Run:
  python3 demos/census_vs_prediction.py
  python3 demos/census_vs_prediction.py --max 10000000 --totient-bound 6 --threads 4
"""

import argparse
import math
import time

from zmstar import empirical_stats, expectation_formula, run_census
from zmstar.sieve import typicality_fraction


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=1_000_000, help="census all 3 <= m <= MAX")
    parser.add_argument("--totient-bound", type=float, default=4.0, help="track f_i with phi <= y")
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    start = time.perf_counter()
    table = run_census(args.max, args.totient_bound, threads=args.threads)
    elapsed = time.perf_counter() - start
    print(f"censused m <= {args.max} (y = {args.totient_bound}) in {elapsed:.2f}s")
    print(f"typical fraction : {typicality_fraction(table):.5f}")
    print(f"mean total count : {table.sum_inv_total / table.n_counted:.4f} "
          f"(loglog N = {math.log(math.log(args.max)):.4f})")

    lhs = table.sum_inv_total - table.sum_omega
    rhs = table.count_div8 - table.count_exact2
    print(f"exact mean identity: sum(inv_total - omega) = {lhs}, "
          f"#(8|m) - #(2||m) = {rhs}  ->  {'equal' if lhs == rhs else 'VIOLATED'}")

    print()
    print("d".rjust(8), "sample mean".rjust(12), "sample var".rjust(12),
          "frac > 0".rjust(10), "leading".rjust(10), "secondary".rjust(10),
          "two-term".rjust(10))
    for d in table.d_values:
        stats = empirical_stats(table, d, "asymptotic")
        formula = expectation_formula(d)
        print(str(d).rjust(8), f"{stats.mean:12.5f}", f"{stats.variance:12.5f}",
              f"{stats.frac_positive():10.5f}", f"{float(formula.leading):10.5f}",
              f"{formula.secondary:10.5f}", f"{formula.evaluate(args.max):10.5f}")

    print("\nthe two-term column is the n -> infinity prediction; its gap to the")
    print("sample mean decays like 1/sqrt(loglog n), i.e. very slowly at desk scale")


if __name__ == "__main__":
    main()
