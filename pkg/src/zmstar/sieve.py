"""Bulk census of invariant-factor statistics over m <= N.

One segmented pass factors every m via a smallest-prime-factor table and
derives, for each m, the counts prm(m;q) over a fixed family of prime
powers, the multiplicities inv(m;d) for every universal factor order d in
f_1..f_W(y), and a y-typicality flag.  Aggregates (histograms and exact
integer tallies) are mergeable across disjoint ranges, so segments can be
processed on worker threads and reduced deterministically.

The per-m multiplicity uses an identity that is exact for *every* m, not
just the y-typical ones: writing d = prod p^e over its maximal prime
powers, the invariant-factor chain of (Z/mZ)^x contains Z_d with
multiplicity

    inv(m; d) = max(0, min_{p^e || d} prm(m; p^e) - max_{q' nmid d} prm(m; q')),

where q' ranges over prime powers not dividing d; the maximum is realized
either by some p^(e+1) with p | d, by r^1 for a small prime r nmid d, or
by a prime outside the tracked support entirely (handled as a running
maximum in the kernel).  The classical y-typical difference formula is
kept alongside as an independent route and cross-checked in the tests.

`a_omega_partial` provides the finite partial sums A_omega(x;q,a) =
sum of 1/p over primes p <= x with p = a (mod q) used for finite-n
centering, which converges much faster at desk scale than the asymptotic
loglog slope.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .arith import (
    PrimePower,
    factorize,
    lcm_all,
    primes_upto,
    prime_powers_with_totient_at_most,
    spf_table,
)
from .multgroup import correction, is_y_typical, max_untracked_prm, prm_count
from .ufo import UfoEntry, total_phi_sequence, ufo_sets

__all__ = [
    "CountRecord",
    "CensusLayout",
    "CensusTable",
    "EmpiricalStats",
    "ProfileRow",
    "a_omega_partial",
    "build_layout",
    "count_record",
    "empirical_stats",
    "merge_tables",
    "prm_map",
    "profile_histogram",
    "read_census_dir",
    "run_census",
    "summary_text",
    "typical_inv",
    "typicality_fraction",
    "write_census_dir",
]

_HIST_WIDTH = 64


# ---------------------------------------------------------------------------
# per-m records (reference path)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CountRecord:
    """Per-m counts for the tracked prime powers.

    omega_q maps each tracked q to omega(m;q,1) = #{p | m : p = 1 mod q};
    flags maps q to its divisibility correction (the value that tops
    omega_q[q] up to prm(m;q)).
    """

    m: int
    omega: int
    omega_q: Mapping[int, int]
    flags: Mapping[int, int]


def count_record(m: int, y: float) -> CountRecord:
    """CountRecord of m over the prime powers with totient <= y."""
    if m < 3:
        raise ValueError("m must be >= 3")
    fac = factorize(m)
    omega_q: Dict[int, int] = {}
    flags: Dict[int, int] = {}
    for q in prime_powers_with_totient_at_most(y):
        omega_q[q.value] = sum(1 for p, _ in fac if p % q.value == 1)
        flags[q.value] = correction(m, q.value, "Ebar", fac=fac)
    return CountRecord(m=m, omega=len(fac), omega_q=omega_q, flags=flags)


def prm_map(record: CountRecord) -> Dict[int, int]:
    """prm(m;q) for every tracked q, from the record's counts and flags."""
    return {q: record.omega_q[q] + record.flags[q] for q in record.omega_q}


# ---------------------------------------------------------------------------
# census layout (fixed per totient bound y)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CensusLayout:
    """Index arrays driving the census kernel for a totient bound y.

    q_arr lists prime powers p^beta for every prime p in the small
    support (the primes dividing any sample order or the next totient
    entry), with exponents up to one past the largest needed; the first
    n_tracked entries are the tracked powers in totient order.  Each
    sample slot s describes one member d of some f_i via the component
    indices (maximal prime powers of d) and boundary indices (powers one
    past d, plus the other small primes at exponent one).
    """

    y: int
    n_tracked: int
    tracked: Tuple[PrimePower, ...]
    next_q: PrimePower
    sets: Tuple[UfoEntry, ...]
    d_values: Tuple[int, ...]
    d_set_index: Tuple[int, ...]
    q_arr: np.ndarray
    q_p: np.ndarray
    q_beta: np.ndarray
    level_start: np.ndarray
    untracked_min_idx: np.ndarray
    pstar_mask: np.ndarray
    comp_off: np.ndarray
    comp_flat: np.ndarray
    bound_off: np.ndarray
    bound_flat: np.ndarray
    pair_a: np.ndarray  # slot indices of doubleton members (first of pair)
    pair_b: np.ndarray


def build_layout(y: float) -> CensusLayout:
    """Precompute the kernel index arrays for totient bound y >= 1."""
    tracked = tuple(prime_powers_with_totient_at_most(y))
    W = len(tracked)
    entries = total_phi_sequence(W + 1)
    next_q = entries[W].q
    sets = tuple(ufo_sets(W))

    d_values: List[int] = []
    d_set_index: List[int] = []
    for entry in sets:
        for d in entry.elements:
            d_values.append(d)
            d_set_index.append(entry.index)

    d_top = lcm_all(list(d_values) + [next_q.value])
    support: Dict[int, int] = {}  # prime -> max exponent needed
    for p, e in factorize(d_top):
        support[p] = e

    q_list: List[Tuple[int, int, int]] = []  # (value, p, beta)
    seen = set()
    for q in tracked:
        q_list.append((q.value, q.p, q.alpha))
        seen.add(q.value)
    for p in sorted(support):
        for beta in range(1, support[p] + 2):
            v = p**beta
            if v not in seen:
                q_list.append((v, p, beta))
                seen.add(v)
    index_of = {v: i for i, (v, _, _) in enumerate(q_list)}

    level_start = [0]
    for i in range(1, W):
        if tracked[i].totient != tracked[i - 1].totient:
            level_start.append(i)
    level_start.append(W)

    untracked_min: List[int] = []
    for p in sorted(support):
        beta = 1
        while p ** (beta - 1) * (p - 1) <= y:
            beta += 1
        untracked_min.append(index_of[p**beta])

    pstar_max = max(support)
    pstar_mask = np.zeros(pstar_max + 1, dtype=np.uint8)
    for p in support:
        pstar_mask[p] = 1

    pair_a: List[int] = []
    pair_b: List[int] = []
    s = 0
    for entry in sets:
        if entry.is_doubleton:
            pair_a.append(s)
            pair_b.append(s + 1)
        s += len(entry.elements)

    comp_off = [0]
    comp_flat: List[int] = []
    bound_off = [0]
    bound_flat: List[int] = []
    for d in d_values:
        fac_d = dict(factorize(d))
        for p, e in sorted(fac_d.items()):
            comp_flat.append(index_of[p**e])
            bound_flat.append(index_of[p ** (e + 1)])
        for p in sorted(support):
            if p not in fac_d:
                bound_flat.append(index_of[p])
        comp_off.append(len(comp_flat))
        bound_off.append(len(bound_flat))

    return CensusLayout(
        y=int(y) if float(y).is_integer() else y,
        n_tracked=W,
        tracked=tracked,
        next_q=next_q,
        sets=sets,
        d_values=tuple(d_values),
        d_set_index=tuple(d_set_index),
        q_arr=np.array([v for v, _, _ in q_list], dtype=np.int64),
        q_p=np.array([p for _, p, _ in q_list], dtype=np.int64),
        q_beta=np.array([b for _, _, b in q_list], dtype=np.int64),
        level_start=np.array(level_start, dtype=np.int64),
        untracked_min_idx=np.array(untracked_min, dtype=np.int64),
        pstar_mask=pstar_mask,
        comp_off=np.array(comp_off, dtype=np.int64),
        comp_flat=np.array(comp_flat, dtype=np.int64),
        bound_off=np.array(bound_off, dtype=np.int64),
        bound_flat=np.array(bound_flat, dtype=np.int64),
        pair_a=np.array(pair_a, dtype=np.int64),
        pair_b=np.array(pair_b, dtype=np.int64),
    )


# ---------------------------------------------------------------------------
# census table
# ---------------------------------------------------------------------------


@dataclass(eq=False)
class CensusTable:
    """Mergeable aggregates of a census over disjoint ranges of m.

    hist[s, v] counts the m in the covered ranges with inv(m; d_s) = v,
    where d_s is the s-th entry of d_values.  All tallies are exact
    integers, so merging is associative, commutative, and bit-for-bit
    reproducible in any order.
    """

    y: int
    spans: Tuple[Tuple[int, int], ...]  # disjoint, coalesced [lo, hi)
    d_values: Tuple[int, ...]
    d_set_index: Tuple[int, ...]
    hist: np.ndarray  # int64 [n_slots, 64]
    pair_both: np.ndarray  # int64 [n_doubletons]: m with both members positive
    typical_count: int
    sum_omega: int
    sum_inv_total: int
    count_div8: int
    count_exact2: int
    n_counted: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CensusTable):
            return NotImplemented
        return (
            self.y == other.y
            and self.spans == other.spans
            and self.d_values == other.d_values
            and self.d_set_index == other.d_set_index
            and np.array_equal(self.hist, other.hist)
            and np.array_equal(self.pair_both, other.pair_both)
            and self.typical_count == other.typical_count
            and self.sum_omega == other.sum_omega
            and self.sum_inv_total == other.sum_inv_total
            and self.count_div8 == other.count_div8
            and self.count_exact2 == other.count_exact2
            and self.n_counted == other.n_counted
        )

    @property
    def N(self) -> int:
        """Upper bound when the table covers one contiguous range [3, N]."""
        if len(self.spans) != 1 or self.spans[0][0] != 3:
            raise ValueError("table does not cover a contiguous range starting at 3")
        return self.spans[0][1] - 1

    def slot(self, d: int) -> int:
        try:
            return self.d_values.index(d)
        except ValueError:
            raise ValueError(f"order {d} is not tracked by this table") from None

    def samples(self, d: int) -> np.ndarray:
        """Sorted vector of all inv(m;d) samples (16-bit, one per m)."""
        row = self.hist[self.slot(d)]
        return np.repeat(np.arange(_HIST_WIDTH, dtype=np.uint16), row)

    def pair_overlap(self, i: int) -> int:
        """#m where both members of doubleton f_i were positive (always 0)."""
        doubletons = sorted({j for j in self.d_set_index if self.d_set_index.count(j) == 2})
        if i not in doubletons:
            raise ValueError(f"f_{i} is not a doubleton in this census")
        return int(self.pair_both[doubletons.index(i)])

    def merge(self, other: "CensusTable") -> "CensusTable":
        return merge_tables(self, other)


def _coalesce(spans: Sequence[Tuple[int, int]]) -> Tuple[Tuple[int, int], ...]:
    ordered = sorted(spans)
    out: List[Tuple[int, int]] = []
    for lo, hi in ordered:
        if out and lo < out[-1][1]:
            raise ValueError(f"overlapping census ranges near m={lo}")
        if out and lo == out[-1][1]:
            out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return tuple(out)


def merge_tables(a: CensusTable, b: CensusTable) -> CensusTable:
    """Combine censuses over disjoint ranges (associative, commutative)."""
    if a.y != b.y or a.d_values != b.d_values:
        raise ValueError("cannot merge censuses with different layouts")
    return CensusTable(
        y=a.y,
        spans=_coalesce(list(a.spans) + list(b.spans)),
        d_values=a.d_values,
        d_set_index=a.d_set_index,
        hist=a.hist + b.hist,
        pair_both=a.pair_both + b.pair_both,
        typical_count=a.typical_count + b.typical_count,
        sum_omega=a.sum_omega + b.sum_omega,
        sum_inv_total=a.sum_inv_total + b.sum_inv_total,
        count_div8=a.count_div8 + b.count_div8,
        count_exact2=a.count_exact2 + b.count_exact2,
        n_counted=a.n_counted + b.n_counted,
    )


def _segment_table(layout: CensusLayout, spf: np.ndarray, lo: int, hi: int) -> CensusTable:
    n_slots = len(layout.d_values)
    hist = np.zeros((n_slots, _HIST_WIDTH), dtype=np.int64)
    pair_both = np.zeros(layout.pair_a.shape[0], dtype=np.int64)
    tallies = np.zeros(6, dtype=np.int64)
    try:
        _kernels.census_segment(
            np.int64(lo),
            np.int64(hi),
            spf,
            layout.q_arr,
            layout.q_p,
            layout.q_beta,
            np.int64(layout.n_tracked),
            layout.level_start,
            layout.untracked_min_idx,
            layout.pstar_mask,
            layout.comp_off,
            layout.comp_flat,
            layout.bound_off,
            layout.bound_flat,
            layout.pair_a,
            layout.pair_b,
            hist,
            pair_both,
            tallies,
        )
    except MemoryError as exc:  # pragma: no cover - depends on host limits
        raise RuntimeError(f"census segment [{lo}, {hi}) exhausted memory") from exc
    return CensusTable(
        y=layout.y,
        spans=((lo, hi),),
        d_values=layout.d_values,
        d_set_index=layout.d_set_index,
        hist=hist,
        pair_both=pair_both,
        typical_count=int(tallies[0]),
        sum_omega=int(tallies[1]),
        sum_inv_total=int(tallies[2]),
        count_div8=int(tallies[3]),
        count_exact2=int(tallies[4]),
        n_counted=int(tallies[5]),
    )


def run_census(N: int, y: float, segment: int = 1 << 22, threads: int = 1) -> CensusTable:
    """Census of inv(m;d) for 3 <= m <= N over the f_i reachable at level y.

    Segments of the range are processed independently (on `threads`
    worker threads; the kernel releases the GIL) and merged in a fixed
    order, so the result is identical for any thread count.
    """
    if N < 3:
        raise ValueError("N must be >= 3")
    if y < 1:
        raise ValueError("y must be >= 1")
    if segment < 1:
        raise ValueError("segment must be positive")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    layout = build_layout(y)
    spf = spf_table(N)
    bounds = [(lo, min(lo + segment, N + 1)) for lo in range(3, N + 1, segment)]
    if threads == 1:
        parts = [_segment_table(layout, spf, lo, hi) for lo, hi in bounds]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_segment_table, layout, spf, lo, hi) for lo, hi in bounds]
            parts = [f.result() for f in futures]
    table = parts[0]
    for part in parts[1:]:
        table = merge_tables(table, part)
    return table


# ---------------------------------------------------------------------------
# the classical y-typical route (independent cross-check)
# ---------------------------------------------------------------------------


def typical_inv(m: int, y: float, layout: Optional[CensusLayout] = None) -> Dict[int, int]:
    """inv(m;d) for every census order d via the y-typical differences.

    Valid only when m is y-typical: the tracked prm values are then
    weakly decreasing along the totient order, every untracked prime
    power sits strictly below all of them, and the chain multiplicities
    are plain differences of consecutive prm values (the doubleton
    member carrying the larger prm wins the whole difference; the last
    tracked order is cut off by the best untracked prm).
    """
    if layout is None:
        layout = build_layout(y)
    if not is_y_typical(m, layout.y):
        raise ValueError(f"m={m} is not {layout.y}-typical")
    fac = factorize(m)
    prms = [prm_count(m, q.value, fac=fac) for q in layout.tracked]
    u = max_untracked_prm(m, layout.y, fac=fac)
    W = layout.n_tracked
    out: Dict[int, int] = {}
    for entry, d_list in zip(layout.sets, _members_by_set(layout)):
        i = entry.index
        if entry.is_doubleton:
            # members listed ascending; q-tilde_i maps to lcm(prefix, q_i)
            d_from_qi = _doubleton_member_of(layout, i)
            a, b = prms[i - 1], prms[i]
            for d in d_list:
                diff = a - b if d == d_from_qi else b - a
                out[d] = max(diff, 0)
        else:
            lo = min(a for a in _level_prms(layout, prms, i))
            hi = u if i == W else max(_level_prms(layout, prms, i + 1))
            out[d_list[0]] = lo - hi
    return out


def _members_by_set(layout: CensusLayout) -> List[List[int]]:
    out: List[List[int]] = [[] for _ in layout.sets]
    for d, i in zip(layout.d_values, layout.d_set_index):
        out[i - 1].append(d)
    return out


def _doubleton_member_of(layout: CensusLayout, i: int) -> int:
    """The member of doubleton f_i built from q-tilde_i itself."""
    prefix = lcm_all([q.value for q in layout.tracked[: i - 1]]) if i > 1 else 1
    return math.lcm(prefix, layout.tracked[i - 1].value)


def _level_prms(layout: CensusLayout, prms: List[int], i: int) -> List[int]:
    """prm values of the totient level containing q-tilde_i (size 1 or 2)."""
    t = layout.tracked[i - 1].totient
    return [prms[j] for j in range(layout.n_tracked) if layout.tracked[j].totient == t]


# ---------------------------------------------------------------------------
# partial prime sums
# ---------------------------------------------------------------------------


def a_omega_partial(x: float, q: int, a: int) -> float:
    """A_omega(x;q,a) = sum of 1/p over primes p <= x with p = a (mod q).

    Exact in double precision: the reciprocals are accumulated with
    math.fsum over the ascending primes.
    """
    if x < 3:
        raise ValueError("x must be >= 3")
    if q < 1:
        raise ValueError("q must be >= 1")
    if math.gcd(a, q) != 1:
        raise ValueError(f"residue {a} is not coprime to modulus {q}")
    ps = primes_upto(int(x))
    sel = ps[ps % q == a % q]
    return math.fsum(1.0 / float(p) for p in sel)


# ---------------------------------------------------------------------------
# empirical statistics
# ---------------------------------------------------------------------------


@dataclass
class EmpiricalStats:
    """Summary of the census samples of inv(m;d), with a normalized ECDF.

    The normalization is z = (inv - center) / scale; `centering`
    records whether (center, scale) came from the asymptotic constants
    (mu_i loglog N, sigma_i sqrt(loglog N)) or from the finite partial
    sums A_omega(N; q, 1), which absorb the slow loglog drift.
    """

    d: int
    set_index: int
    n: int
    mean: float
    variance: float
    counts: np.ndarray
    center: float
    scale: float
    centering: str

    def samples(self) -> np.ndarray:
        return np.repeat(np.arange(_HIST_WIDTH, dtype=np.uint16), self.counts)

    def frac_positive(self) -> float:
        return float(self.counts[1:].sum()) / self.n

    def ecdf(self, z: float) -> float:
        """Fraction of samples with normalized value <= z."""
        cut = self.center + self.scale * z
        vals = np.arange(_HIST_WIDTH)
        return float(self.counts[vals <= cut].sum()) / self.n

    def ks_distance_to(self, law) -> float:
        """Kolmogorov-Smirnov distance to a law, over integer thresholds.

        The samples live on the nonnegative integer lattice, so the two
        CDFs are compared where the empirical one is defined: D =
        max_v |P(inv <= v) - F(z_v)| over integer v, with z_v the
        normalized threshold.  (A raw sup over all real x would be
        dominated by the lattice jump heights - roughly half the largest
        atom, here ~0.17 regardless of fit - and could not distinguish a
        good law from a bad one; the threshold form is the standard
        presentation of lattice-variable limit theorems.)
        """
        F: Callable[[float], float] = law if callable(law) else law.cdf
        total = int(self.counts.sum())
        ks = 0.0
        cum = 0
        for v in range(_HIST_WIDTH):
            cum += int(self.counts[v])
            z = (v - self.center) / self.scale
            ks = max(ks, abs(F(z) - cum / total))
        return ks


def empirical_stats(table: CensusTable, d: int, centering: str = "finite") -> EmpiricalStats:
    """Mean, variance and normalized ECDF of the census samples of inv(m;d).

    centering="asymptotic" uses the exact slope constants of the index i
    with d in f_i; centering="finite" (default) replaces mu_i loglog N by
    A(q_i) - A(q_(i+1)) and sigma_i^2 loglog N by
    A(q_i) + A(q_(i+1)) - 2 A(q_i q_(i+1)), the finite prime sums at N.
    Doubleton members keep center 0, matching their limit law.
    """
    if centering not in ("finite", "asymptotic"):
        raise ValueError("centering must be 'finite' or 'asymptotic'")
    s = table.slot(d)
    i = table.d_set_index[s]
    counts = table.hist[s]
    n = int(counts.sum())
    vals = np.arange(_HIST_WIDTH, dtype=np.float64)
    mean = float((counts * vals).sum()) / n
    variance = float((counts * (vals - mean) ** 2).sum()) / n

    N = table.N
    loglog = math.log(math.log(N))
    entries = total_phi_sequence(i + 1)
    q1, q2 = entries[i - 1].q, entries[i].q
    doubleton = q1.totient == q2.totient
    if centering == "asymptotic":
        from .ufo import ufo_constants

        c = ufo_constants(i)
        center = 0.0 if doubleton else float(c.mu) * loglog
        scale = math.sqrt(float(c.sigma2) * loglog)
    else:
        a1 = a_omega_partial(N, q1.value, 1)
        a2 = a_omega_partial(N, q2.value, 1)
        a12 = a_omega_partial(N, q1.value * q2.value, 1)
        center = 0.0 if doubleton else a1 - a2
        scale = math.sqrt(a1 + a2 - 2.0 * a12)
    return EmpiricalStats(
        d=d,
        set_index=i,
        n=n,
        mean=mean,
        variance=variance,
        counts=counts.copy(),
        center=center,
        scale=scale,
        centering=centering,
    )


def typicality_fraction(table: CensusTable) -> float:
    """Fraction of the censused m that were y-typical."""
    return table.typical_count / table.n_counted


@dataclass(frozen=True)
class ProfileRow:
    """One bar of the invariant-factor profile: mean inv / loglog N."""

    index: int
    orders: Tuple[int, ...]
    proportion: float


def profile_histogram(table: CensusTable) -> List[ProfileRow]:
    """Per-index proportions (1/N) sum_m inv(m; d in f_i) / loglog N.

    Doubleton indices contribute three rows: the pair jointly, then each
    member separately.
    """
    N = table.N
    loglog = math.log(math.log(N))
    vals = np.arange(_HIST_WIDTH, dtype=np.int64)
    sums = {d: int((table.hist[s] * vals).sum()) for s, d in enumerate(table.d_values)}

    rows: List[ProfileRow] = []
    by_set: Dict[int, List[int]] = {}
    for d, i in zip(table.d_values, table.d_set_index):
        by_set.setdefault(i, []).append(d)
    for i in sorted(by_set):
        ds = tuple(sorted(by_set[i]))
        if len(ds) > 1:
            joint = sum(sums[d] for d in ds)
            rows.append(ProfileRow(index=i, orders=ds, proportion=joint / N / loglog))
        for d in ds:
            rows.append(ProfileRow(index=i, orders=(d,), proportion=sums[d] / N / loglog))
    return rows


# ---------------------------------------------------------------------------
# CSV output
# ---------------------------------------------------------------------------


def _fmt(x: float) -> str:
    return format(x, ".17g")


def summary_text(table: CensusTable) -> str:
    """The exact text of summary.csv: one row per tracked order.

    Derived purely from the integer histograms and N, so a table rebuilt
    from the sample files reproduces the original text bit for bit.
    """
    N = table.N
    lines = ["d,i,mean,variance,frac_positive,N"]
    for d, i in zip(table.d_values, table.d_set_index):
        st = empirical_stats(table, d, centering="asymptotic")
        lines.append(
            f"{d},{i},{_fmt(st.mean)},{_fmt(st.variance)},{_fmt(st.frac_positive())},{N}"
        )
    return "\n".join(lines) + "\n"


def write_census_dir(table: CensusTable, outdir) -> List[str]:
    """Write samples_<d>.csv, summary.csv and typicality.csv under outdir.

    samples_<d>.csv: value,count rows (nonzero counts only).
    summary.csv: d,i,mean,variance,frac_positive,N per tracked order.
    typicality.csv: y,N,typical_fraction.
    Returns the written file names.
    """
    import os

    os.makedirs(outdir, exist_ok=True)
    written: List[str] = []
    N = table.N

    for s, d in enumerate(table.d_values):
        name = f"samples_{d}.csv"
        with open(os.path.join(outdir, name), "w", encoding="utf-8") as fh:
            fh.write("value,count\n")
            for v in range(_HIST_WIDTH):
                c = int(table.hist[s, v])
                if c:
                    fh.write(f"{v},{c}\n")
        written.append(name)

    with open(os.path.join(outdir, "summary.csv"), "w", encoding="utf-8") as fh:
        fh.write(summary_text(table))
    written.append("summary.csv")

    with open(os.path.join(outdir, "typicality.csv"), "w", encoding="utf-8") as fh:
        fh.write("y,N,typical_fraction\n")
        fh.write(f"{table.y},{N},{_fmt(typicality_fraction(table))}\n")
    written.append("typicality.csv")
    return written


def read_census_dir(indir) -> CensusTable:
    """Rebuild a census table from a directory written by write_census_dir.

    Histograms, spans and the typicality tally round-trip exactly; the
    auxiliary aggregates that have no CSV representation (pair overlaps
    and the omega/inv_total sums) are zeroed in the result, so only
    histogram-backed statistics may be read from a rebuilt table.
    """
    import os

    with open(os.path.join(indir, "typicality.csv"), encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "y,N,typical_fraction":
            raise ValueError(f"unexpected typicality.csv header: {header!r}")
        y_text, n_text, frac_text = fh.readline().strip().split(",")
    y = float(y_text) if "." in y_text else int(y_text)
    N = int(n_text)
    layout = build_layout(y)

    hist = np.zeros((len(layout.d_values), _HIST_WIDTH), dtype=np.int64)
    for s, d in enumerate(layout.d_values):
        name = f"samples_{d}.csv"
        with open(os.path.join(indir, name), encoding="utf-8") as fh:
            header = fh.readline().strip()
            if header != "value,count":
                raise ValueError(f"unexpected header in {name}: {header!r}")
            for line in fh:
                v_text, c_text = line.strip().split(",")
                hist[s, int(v_text)] = int(c_text)

    row_sums = hist.sum(axis=1)
    n_counted = int(row_sums[0])
    if not (row_sums == n_counted).all() or n_counted != N - 2:
        raise ValueError("sample files are inconsistent with N")
    # typical_fraction is the correctly rounded double of an integer ratio
    # with n < 2^53, so the numerator is recovered exactly.
    typical = round(float(frac_text) * n_counted)

    return CensusTable(
        y=layout.y,
        spans=((3, N + 1),),
        d_values=layout.d_values,
        d_set_index=layout.d_set_index,
        hist=hist,
        pair_both=np.zeros(len(layout.pair_a), dtype=np.int64),
        typical_count=typical,
        sum_omega=0,
        sum_inv_total=0,
        count_div8=0,
        count_exact2=0,
        n_counted=n_counted,
    )
