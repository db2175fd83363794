"""Command-line surface: decompositions, universal-set tables, predictions,
censuses, limit-law tables, and self-checks.

All numeric CSV output carries 17 significant digits so every double
round-trips exactly.  Sampled paths (the d = 12 law has no closed CDF)
record their seed in the leading '#' header line.  Plot emission is
data-only: commands that write CSV files also generate a gnuplot script
next to them, so no graphics dependency is required.

Exit codes: 0 on success, 1 on compute failures (domain errors, I/O), 2 on
usage errors; `verify` exits 1 when any check fails.
"""

import argparse
import math
import os
import sys
import time
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from . import dist, multgroup, sieve, theory, ufo
from .arith import factorize

__all__ = ["main", "run"]


def _fmt(x: float) -> str:
    return format(x, ".17g")


# ---------------------------------------------------------------------------
# decompose / msg
# ---------------------------------------------------------------------------


def _cmd_decompose(args: argparse.Namespace) -> int:
    group = multgroup.invariant_factors(args.m)
    print(f"m = {args.m}")
    print("elementary divisors: " + " x ".join(f"Z{v}" for v in group.elementary))
    print(f"invariant factors: {group}")
    print(f"cyclic factor count: {group.total}")
    return 0


def _cmd_msg(args: argparse.Namespace) -> int:
    tokens = [tok.strip() for tok in args.group.split(",") if tok.strip()]
    try:
        orders = [int(tok) for tok in tokens]
    except ValueError:
        raise ValueError(f"group spec must be a comma list of integers, got {args.group!r}")
    spec = multgroup.AbelianGroupSpec.from_orders(orders)
    value = multgroup.msg_multiplicity(args.m, spec)
    gtext = " x ".join(f"Z{v}" for v in spec.elementary)
    print(f"msg({args.m}; {gtext}) = {value}")
    return 0


# ---------------------------------------------------------------------------
# ufo / predict
# ---------------------------------------------------------------------------


def _cmd_ufo(args: argparse.Namespace) -> int:
    sets = ufo.ufo_sets(args.count)
    print(f"{'i':>3}  {'f_i':<24} {'kind':<10} {'mu_i':>10} {'sigma_i^2':>12}")
    for entry in sets:
        constants = ufo.ufo_constants(entry.index)
        elems = "{" + ", ".join(str(d) for d in entry.elements) + "}"
        kind = "doubleton" if entry.is_doubleton else "singleton"
        print(
            f"{entry.index:>3}  {elems:<24} {kind:<10}"
            f" {str(constants.mu):>10} {str(constants.sigma2):>12}"
        )
    return 0


def _cmd_predict(args: argparse.Namespace) -> int:
    d = args.d
    law = theory.limiting_law(d)
    formula = theory.expectation_formula(d)
    index = ufo.find_ufo_index(d)
    print(f"d = {d}")
    if index is None:
        print("classification: rare order (in no universal set); inv(m;d) -> 0 in probability")
    else:
        entry = ufo.ufo_sets(index)[index - 1]
        constants = ufo.ufo_constants(index)
        case = ufo.classify(index)
        elems = "{" + ", ".join(str(x) for x in entry.elements) + "}"
        print(f"classification: member of f_{index} = {elems}, case {case.value}")
        print(f"constants: mu_{index} = {constants.mu}, sigma_{index}^2 = {constants.sigma2}")
    print(
        f"expectation [{formula.case}]: E inv(m;{d}) ~ ({formula.leading}) loglog n"
        f" + ({_fmt(formula.secondary)}) sqrt(loglog n)"
    )
    print(f"  at n = {args.n:.6g}: {_fmt(formula.evaluate(args.n))}")
    parts = [
        f"center = ({law.center_coeff}) loglog n",
        f"scale^2 = ({law.scale_squared}) loglog n",
    ]
    if law.kind is theory.LawKind.SKEW_NORMAL:
        parts.append(f"alpha = -sqrt({law.skew_alpha_squared}) = {_fmt(law.alpha)}")
    elif law.kind is theory.LawKind.TRIPLE_MINUS_U:
        sig = ", ".join(_fmt(s) for s in law.u_sigmas)
        parts.append(f"sigmas = ({sig}), prescale = {law.prescale}")
    print(f"law: {law.kind.value}; " + "; ".join(parts))
    if law.flag:
        print(f"NOTE: {law.flag}")
    return 0


# ---------------------------------------------------------------------------
# census / profile
# ---------------------------------------------------------------------------


def _write_census_plot(table: "sieve.CensusTable", outdir: str) -> str:
    lines = [
        "# gnuplot script for the census sample histograms",
        "set datafile separator ','",
        "set style fill solid 0.6",
        "set xlabel 'inv(m;d)'",
        "set ylabel 'count'",
    ]
    for d in table.d_values:
        lines.append(f"set title 'd = {d}'")
        lines.append(f"plot 'samples_{d}.csv' skip 1 using 1:2 with boxes notitle")
        lines.append("pause -1")
    with open(os.path.join(outdir, "plots.gp"), "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return "plots.gp"


def _cmd_census(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    table = sieve.run_census(args.max, args.totient_bound, threads=args.threads)
    elapsed = time.perf_counter() - start
    names = sieve.write_census_dir(table, args.out)
    names.append(_write_census_plot(table, args.out))
    print(
        f"censused {table.n_counted} moduli in [3, {args.max}] at totient bound"
        f" {table.y} with {args.threads} thread(s) in {elapsed:.2f}s"
    )
    print(f"typical fraction: {_fmt(sieve.typicality_fraction(table))}")
    for name in names:
        print(f"wrote {os.path.join(args.out, name)}")
    return 0


def _cmd_profile(args: argparse.Namespace) -> int:
    table = sieve.read_census_dir(args.src)
    text = sieve.summary_text(table)
    if args.out is None:
        sys.stdout.write(text)
        return 0
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"profile of {table.n_counted} moduli (N = {table.N}, y = {table.y})")
    print(f"{'i':>3}  {'orders':<18} {'proportion':>22}")
    for row in sieve.profile_histogram(table):
        orders = "+".join(str(d) for d in row.orders)
        print(f"{row.index:>3}  {orders:<18} {_fmt(row.proportion):>22}")
    print(f"wrote {args.out}")
    return 0


# ---------------------------------------------------------------------------
# law
# ---------------------------------------------------------------------------


def _parse_grid(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be lo:hi:steps, got {text!r}")
    lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    if steps < 2:
        raise ValueError(f"grid needs at least 2 steps, got {steps}")
    if not hi > lo:
        raise ValueError(f"grid needs hi > lo, got {lo}..{hi}")
    return np.linspace(lo, hi, steps)


def _write_law_plot(csv_path: str, d: int) -> str:
    base, _ = os.path.splitext(csv_path)
    gp_path = base + ".gp"
    csv_name = os.path.basename(csv_path)
    text = (
        "# gnuplot script for the tabulated limit law\n"
        "set datafile separator ','\n"
        "set xlabel 'x'\n"
        "set ylabel 'F(x)'\n"
        "set key left top\n"
        f"plot '{csv_name}' skip 2 using 1:2 with lines title 'law of d = {d}'\n"
    )
    with open(gp_path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return gp_path


def _cmd_law(args: argparse.Namespace) -> int:
    law = theory.limiting_law(args.d)
    xs = _parse_grid(args.grid)
    meta = (
        f"# law d={args.d} kind={law.kind.value}"
        f" center={law.center_coeff} scale2={law.scale_squared}"
    )
    if law.kind is theory.LawKind.SPECIAL12:
        meta += f" seed={args.seed} n_samples={args.samples}"
    rows = [meta, "x,F_theory(x)"]
    for x in xs:
        value = law.cdf(float(x), n_samples=args.samples, seed=args.seed)
        rows.append(f"{_fmt(float(x))},{_fmt(value)}")
    text = "\n".join(rows) + "\n"
    if args.out is None:
        sys.stdout.write(text)
        return 0
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    gp_path = _write_law_plot(args.out, args.d)
    print(f"wrote {args.out}")
    print(f"wrote {gp_path}")
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


class _CheckFailure(Exception):
    """Raised by a verify check with a human-readable reason."""


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise _CheckFailure(message)


def _prime_power_split(n: int) -> List[int]:
    return [p**e for p, e in factorize(n)]


Check = Tuple[str, Callable[[], None]]


def _structure_checks(seed: int) -> List[Check]:
    def chain_matches_elementary() -> None:
        for m in range(3, 1200):
            group = multgroup.invariant_factors(m)
            via_chain = sorted(q for d in group.expanded() for q in _prime_power_split(d))
            _expect(via_chain == sorted(group.elementary), f"mismatch at m = {m}")
            expanded = group.expanded()
            for a, b in zip(expanded, expanded[1:]):
                _expect(b % a == 0, f"chain not a divisibility tower at m = {m}")

    def counting_functions_agree() -> None:
        for m in range(3, 400):
            for q in (2, 3, 4, 5, 7, 8, 9, 16):
                _expect(
                    multgroup.prm_count(m, q) == multgroup.prm_count_via_divisors(m, q),
                    f"prm routes differ at m = {m}, q = {q}",
                )
        for m in range(3, 260):
            for q in (2, 3, 4, 5, 8, 9):
                _expect(
                    multgroup.pri_count(m, q) == multgroup.pri_count_via_residues(m, q),
                    f"pri routes differ at m = {m}, q = {q}",
                )

    def worked_decomposition() -> None:
        group = multgroup.invariant_factors(1616615)
        _expect(str(group) == "Z2 x Z2 x Z2 x Z12 x Z12 x Z720", f"got {group}")
        _expect(
            sorted(group.elementary) == [2, 2, 2, 3, 3, 4, 4, 5, 9, 16],
            f"got {group.elementary}",
        )

    def embedding_multiplicity() -> None:
        for m in range(3, 300):
            for q in (2, 3, 4, 5):
                _expect(
                    multgroup.msg_multiplicity(m, (q,)) == multgroup.prm_count(m, q),
                    f"msg(m; Z{q}) != prm at m = {m}",
                )
            _expect(
                multgroup.msg_multiplicity(m, (2, 2)) == multgroup.prm_count(m, 2) // 2,
                f"msg(m; Z2 x Z2) != prm // 2 at m = {m}",
            )

    return [
        ("invariant chain refines the elementary divisors (m < 1200)", chain_matches_elementary),
        ("dual-route counting functions agree", counting_functions_agree),
        ("worked decomposition of m = 1616615", worked_decomposition),
        ("embedding multiplicity matches counting functions", embedding_multiplicity),
    ]


def _ufo_checks(seed: int) -> List[Check]:
    def leading_sets() -> None:
        sets = ufo.ufo_sets(10)
        want = [
            (2,), (4, 6), (12,), (24, 60), (120,),
            (360, 840), (2520,), (5040,), (55440,), (720720,),
        ]
        _expect([s.elements for s in sets] == want, f"got {[s.elements for s in sets]}")

    def structural_audit() -> None:
        report = ufo.structural_audit(4000)
        _expect(report.ok, "; ".join(report.violations))

    def moment_constants() -> None:
        c1 = ufo.ufo_constants(1)
        _expect(c1.mu == Fraction(1, 2) and c1.sigma2 == Fraction(1, 2), f"i=1: {c1}")
        c8 = ufo.ufo_constants(8)
        _expect(c8.mu == Fraction(1, 40) and c8.sigma2 == Fraction(1, 5), f"i=8: {c8}")

    def neighbor_cases() -> None:
        want = {
            1: ufo.NeighborCase.SPECIAL_D2,
            3: ufo.NeighborCase.SPECIAL_D12,
            5: ufo.NeighborCase.DOUBLETON_BOTH,
            6: ufo.NeighborCase.DOUBLETON_SELF,
            7: ufo.NeighborCase.DOUBLETON_LEFT,
            9: ufo.NeighborCase.ALL_SINGLETON,
            10: ufo.NeighborCase.DOUBLETON_RIGHT,
        }
        for i, case in want.items():
            got = ufo.classify(i)
            _expect(got is case, f"classify({i}) = {got.value}, want {case.value}")

    return [
        ("leading universal sets", leading_sets),
        ("structural audit below 4000", structural_audit),
        ("exact moment constants", moment_constants),
        ("neighbor case classification", neighbor_cases),
    ]


def _theory_checks(seed: int) -> List[Check]:
    def normal_case() -> None:
        law = theory.limiting_law(5040)
        _expect(law.kind is theory.LawKind.STANDARD_NORMAL, law.kind.value)
        _expect(law.center_coeff == Fraction(1, 40), f"center {law.center_coeff}")
        _expect(law.scale_squared == Fraction(1, 5), f"scale^2 {law.scale_squared}")

    def skew_cases() -> None:
        want = {2520: Fraction(5, 13), 2: Fraction(1, 3), 720720: Fraction(45, 163)}
        for d, alpha2 in want.items():
            law = theory.limiting_law(d)
            _expect(law.kind is theory.LawKind.SKEW_NORMAL, f"d = {d}: {law.kind.value}")
            _expect(
                law.skew_alpha_squared == alpha2,
                f"d = {d}: alpha^2 = {law.skew_alpha_squared}, want {alpha2}",
            )
        _expect(theory.limiting_law(2).flag != "", "d = 2 special-case flag missing")

    def u_case() -> None:
        law = theory.limiting_law(120)
        _expect(law.kind is theory.LawKind.TRIPLE_MINUS_U, law.kind.value)
        _expect(
            law.u_sigmas_squared == (Fraction(49, 6), Fraction(9, 2), Fraction(10, 3)),
            f"sigmas^2 {law.u_sigmas_squared}",
        )
        _expect(law.prescale == 4 and law.scale_squared == Fraction(1, 3), "prescale/scale")

    def rare_orders() -> None:
        for d in (7, 8, 9, 100):
            law = theory.limiting_law(d)
            _expect(law.kind is theory.LawKind.DEGENERATE_ZERO, f"d = {d}: {law.kind.value}")
            formula = theory.expectation_formula(d)
            _expect(
                formula.leading == 0 and formula.secondary_terms == (),
                f"d = {d}: nonzero expectation",
            )

    def expectation_examples() -> None:
        f2520 = theory.expectation_formula(2520)
        _expect(f2520.leading == Fraction(1, 24), f"leading {f2520.leading}")
        _expect(
            abs(f2520.secondary + math.sqrt(5.0 / (36.0 * math.pi))) <= 1e-15,
            f"secondary {f2520.secondary}",
        )
        f12 = theory.expectation_formula(12)
        want12 = -(1.0 / (2.0 * math.sqrt(math.pi)) + math.sqrt(3.0 / (16.0 * math.pi)))
        _expect(f12.leading == Fraction(1, 4), f"leading {f12.leading}")
        _expect(abs(f12.secondary - want12) <= 1e-15, f"secondary {f12.secondary}")
        f360 = theory.expectation_formula(360)
        _expect(f360.leading == 0, f"leading {f360.leading}")
        _expect(
            abs(f360.secondary - math.sqrt(5.0 / (36.0 * math.pi))) <= 1e-15,
            f"secondary {f360.secondary}",
        )

    def mean_consistency() -> None:
        for d in (2, 360, 2520, 720720, 120):
            law = theory.limiting_law(d)
            formula = theory.expectation_formula(d)
            got = law.law_mean() * law.scale_coeff
            _expect(
                abs(got - formula.secondary) <= 1e-8,
                f"d = {d}: law mean x scale = {got}, secondary = {formula.secondary}",
            )

    return [
        ("plain central limit case", normal_case),
        ("skew parameters", skew_cases),
        ("three-term difference law", u_case),
        ("rare orders degenerate at zero", rare_orders),
        ("worked expectation formulas", expectation_examples),
        ("law mean matches secondary coefficient", mean_consistency),
    ]


def _distribution_checks(seed: int) -> List[Check]:
    def owen_t_identities() -> None:
        for h in (-3.0, -1.0, -0.25, 0.0, 0.5, 1.5, 4.0):
            _expect(dist.owen_t(h, 0.0) == 0.0, f"T({h}, 0) != 0")
        for a in (0.25, 1.0, 3.0, 10.0):
            want = math.atan(a) / (2.0 * math.pi)
            _expect(abs(dist.owen_t(0.0, a) - want) <= 1e-12, f"T(0, {a})")
        for h in (0.3, 1.0, 2.2):
            want = 0.5 * dist.norm_cdf(h) * (1.0 - dist.norm_cdf(h))
            _expect(abs(dist.owen_t(h, 1.0) - want) <= 1e-10, f"T({h}, 1)")

    def skew_law_shape() -> None:
        law = dist.skew_normal_law(-math.sqrt(5.0 / 13.0))
        grid = law.grid_values(-8.0, 8.0, 321)
        _expect(grid[0] <= 1e-8 and grid[-1] >= 1.0 - 1e-8, "tails")
        _expect(all(b >= a - 1e-12 for a, b in zip(grid, grid[1:])), "not monotone")
        mean = dist.skew_normal_mean(-1.0 / math.sqrt(3.0))
        _expect(
            abs(mean + math.sqrt(1.0 / (2.0 * math.pi))) <= 1e-12,
            f"closed-form mean {mean}",
        )

    def minmax_duality() -> None:
        for x in np.linspace(-4.0, 4.0, 33):
            x = float(x)
            lo = dist.bivariate_minmax_cdf(x, 1.0 / 3.0, "min")
            hi = dist.bivariate_minmax_cdf(-x, 1.0 / 3.0, "max")
            _expect(abs(lo - (1.0 - hi)) <= 1e-10, f"pair duality at x = {x}")
            # the quadruple CDF is numerically integrated, so the duality
            # holds only to the integrator's accuracy
            qlo = dist.quad_minmax_cdf(x, 0.625, 0.5, 0.125, "min")
            qhi = dist.quad_minmax_cdf(-x, 0.625, 0.5, 0.125, "max")
            _expect(abs(qlo - (1.0 - qhi)) <= 1e-5, f"quadruple duality at x = {x}")

    def sampled_agreement() -> None:
        cov = [[1.0, 1.0 / 3.0], [1.0 / 3.0, 1.0]]
        empirical = dist.mvn_min_sampler(cov, 1_000_000, seed)
        law = dist.bivariate_minmax_law(1.0 / 3.0, "min")
        err = empirical.sup_distance(law.cdf, -6.0, 6.0, 601)
        _expect(err <= 5e-3, f"sup distance {err}")

    def char_transforms() -> None:
        for label, law in (
            ("normal", dist.standard_normal_law()),
            ("half-normal", dist.half_normal_law()),
        ):
            err = dist.char_function_check(law, (0.5, 1.0, 2.0), -10.0, 10.0, 8001)
            _expect(err <= 1e-3, f"{label} transform error {err}")

    def singular_quadruple_shape() -> None:
        lo = dist.special12_cdf(-5.0, n_samples=200_000, seed=seed)
        hi = dist.special12_cdf(3.0, n_samples=200_000, seed=seed)
        _expect(lo <= 0.01 and hi >= 0.97, f"tails ({lo}, {hi})")

    return [
        ("T-function identities", owen_t_identities),
        ("skew law shape and mean", skew_law_shape),
        ("min/max duality", minmax_duality),
        ("sampler matches closed CDF", sampled_agreement),
        ("characteristic-function transforms", char_transforms),
        ("singular quadruple law tails", singular_quadruple_shape),
    ]


def _census_checks(seed: int) -> List[Check]:
    def kernel_matches_chain() -> None:
        bound = 2500
        table = sieve.run_census(bound, 2)
        hist = np.zeros_like(table.hist)
        for m in range(3, bound + 1):
            for s, d in enumerate(table.d_values):
                hist[s, multgroup.inv_count(m, d)] += 1
        _expect(np.array_equal(hist, table.hist), "histogram mismatch")

    def exact_totals() -> None:
        bound = 200_000
        table = sieve.run_census(bound, 2)
        _expect(
            table.sum_inv_total - table.sum_omega == table.count_div8 - table.count_exact2,
            "total-count identity broken",
        )
        _expect(table.count_div8 == bound // 8, f"multiples of 8: {table.count_div8}")
        want = len(range(6, bound + 1, 4))
        _expect(table.count_exact2 == want, f"m = 2 mod 4 count: {table.count_exact2}")
        doubles = sorted({i for i in table.d_set_index if table.d_set_index.count(i) == 2})
        for i in doubles:
            _expect(table.pair_overlap(i) == 0, f"pair overlap at f_{i}")

    def deterministic_threads() -> None:
        one = sieve.run_census(120_000, 2, segment=1 << 14, threads=1)
        three = sieve.run_census(120_000, 2, segment=1 << 14, threads=3)
        _expect(one == three, "threaded census differs from single-threaded")

    def csv_round_trip() -> None:
        import tempfile

        table = sieve.run_census(50_000, 2)
        with tempfile.TemporaryDirectory() as tmp:
            sieve.write_census_dir(table, tmp)
            back = sieve.read_census_dir(tmp)
        _expect(np.array_equal(back.hist, table.hist), "histograms changed")
        _expect(back.typical_count == table.typical_count, "typicality tally changed")
        _expect(sieve.summary_text(back) == sieve.summary_text(table), "summary text changed")

    return [
        ("kernel matches per-m chain (m <= 2500)", kernel_matches_chain),
        ("exact aggregate tallies", exact_totals),
        ("thread-count determinism", deterministic_threads),
        ("CSV round trip", csv_round_trip),
    ]


_SUITES = {
    "structure": _structure_checks,
    "ufo": _ufo_checks,
    "theory": _theory_checks,
    "distributions": _distribution_checks,
    "census": _census_checks,
}


def _cmd_verify(args: argparse.Namespace) -> int:
    names = sorted(_SUITES) if args.suite == "all" else [args.suite]
    total = 0
    failures = 0
    for name in names:
        checks = _SUITES[name](args.seed)
        print(f"suite {name}: {len(checks)} checks")
        for label, check in checks:
            total += 1
            try:
                check()
            except _CheckFailure as exc:
                failures += 1
                print(f"  FAIL {label}: {exc}")
            else:
                print(f"  ok   {label}")
    print(f"{total - failures}/{total} checks passed (seed {args.seed})")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser and entry points
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zmstar",
        description="Invariant-factor statistics of the multiplicative groups (Z/mZ)^x.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("decompose", help="print both decompositions of (Z/mZ)^x")
    p.add_argument("m", type=int, help="modulus (>= 3)")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("ufo", help="table of the leading universal factor order sets")
    p.add_argument("--count", type=int, default=10, help="number of sets (default 10)")
    p.set_defaults(func=_cmd_ufo)

    p = sub.add_parser("predict", help="predicted expectation and limit law of an order")
    p.add_argument("d", type=int, help="factor order (>= 1)")
    p.add_argument("--n", type=float, default=1e7, help="sample bound n (default 1e7)")
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("census", help="exact census of inv(m;d) for 3 <= m <= N")
    p.add_argument("--max", type=int, required=True, help="census bound N")
    p.add_argument(
        "--totient-bound", type=float, default=2.0, help="tracking bound y (default 2)"
    )
    p.add_argument("--threads", type=int, default=1, help="worker threads (default 1)")
    p.add_argument("--out", required=True, help="output directory for the CSV files")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("law", help="tabulate the limiting CDF of an order")
    p.add_argument("d", type=int, help="factor order (>= 1)")
    p.add_argument("--grid", default="-4:4:81", help="evaluation grid lo:hi:steps")
    p.add_argument("--out", default=None, help="CSV file (stdout when omitted)")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled laws (default 0)")
    p.add_argument(
        "--samples", type=int, default=1_000_000, help="sample count for sampled laws"
    )
    p.set_defaults(func=_cmd_law)

    p = sub.add_parser("verify", help="run the library's invariant checks")
    p.add_argument(
        "--suite",
        default="all",
        choices=sorted(_SUITES) + ["all"],
        help="check suite (default all)",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks (default 0)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("profile", help="rebuild summary and profile from census output")
    p.add_argument("--from", dest="src", required=True, help="census output directory")
    p.add_argument("--out", default=None, help="regenerated summary.csv (stdout when omitted)")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("msg", help="largest a with G^a embedding in (Z/mZ)^x")
    p.add_argument("m", type=int, help="modulus (>= 3)")
    p.add_argument("group", help="G as a comma list of cyclic orders, e.g. 2,4")
    p.set_defaults(func=_cmd_msg)

    return parser


def _glue_grid(argv: Sequence[str]) -> List[str]:
    """Rewrite '--grid LO:HI:STEPS' as '--grid=...' so negative bounds parse."""
    out: List[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token == "--grid":
            value = next(tokens, None)
            out.append(token if value is None else f"--grid={value}")
        else:
            out.append(token)
    return out


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv and execute one subcommand, returning the exit code."""
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_glue_grid(argv))
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
