"""Tests for the bulk census, partial prime sums, and empirical statistics.

The census kernel is held to three independent routes: the exact
invariant-factor chain (multgroup), the per-m Python reference path
(CountRecord/prm_map), and the y-typical difference formula.  Aggregate
identities (the inv_total - omega counting identity, merge algebra,
thread determinism) are checked exactly.
"""

from __future__ import annotations

import functools
import math
import random

import numpy as np
import pytest

from zmstar import arith, dist, multgroup as mg, sieve, theory


@pytest.fixture(scope="module")
def table_1e6_y2():
    return sieve.run_census(10**6, 2)


@pytest.fixture(scope="module")
def table_1e6_y6():
    return sieve.run_census(10**6, 6)


# ------------------------------------------------------------- CountRecord


def test_count_record_fields_and_invariants():
    for m in (3, 12, 120, 9240, 65536, 510510):
        rec = sieve.count_record(m, 8)
        fac = arith.factorize(m)
        assert rec.omega == len(fac)
        assert rec.omega_q[2] == rec.omega - (1 if m % 2 == 0 else 0)
        for q, cnt in rec.omega_q.items():
            assert 0 <= cnt <= rec.omega
            assert rec.flags[q] == mg.correction(m, q, "Ebar")


def test_count_record_rejects_small_m():
    with pytest.raises(ValueError):
        sieve.count_record(2, 4)


def test_prm_map_matches_formula_route():
    for m in range(3, 800):
        prms = sieve.prm_map(sieve.count_record(m, 8))
        for q, v in prms.items():
            assert v == mg.prm_count(m, q)


def test_prm_dominance():
    # every prm(m;q) is at most prm(m;2): primes = 1 (mod q) are odd
    for m in range(3, 2000):
        prms = sieve.prm_map(sieve.count_record(m, 8))
        assert all(v <= prms[2] for v in prms.values())


# ------------------------------------------------------------------ layout


def test_layout_y2():
    lay = sieve.build_layout(2)
    assert [q.value for q in lay.tracked] == [2, 3, 4]
    assert lay.next_q.value == 5
    assert lay.d_values == (2, 4, 6, 12)
    assert lay.d_set_index == (1, 2, 2, 3)
    # doubleton f_2 = {4, 6}: slots 1 and 2
    assert lay.pair_a.tolist() == [1]
    assert lay.pair_b.tolist() == [2]
    # tracked powers head the q array in totient order
    assert lay.q_arr[: lay.n_tracked].tolist() == [2, 3, 4]
    # minimal untracked powers: 8 (phi 4), 9 (phi 6), 5 (phi 4)
    untracked = sorted(int(lay.q_arr[i]) for i in lay.untracked_min_idx)
    assert untracked == [5, 8, 9]


def test_layout_y6_members():
    lay = sieve.build_layout(6)
    assert lay.d_values == (2, 4, 6, 12, 24, 60, 120, 360, 840, 2520)
    assert lay.pair_a.tolist() == [1, 4, 7]
    assert lay.pair_b.tolist() == [2, 5, 8]


# ------------------------------------------------- census vs exact chains


def test_census_matches_invariant_chain_per_m():
    # every multiplicity and typicality flag, one m at a time
    N = 1500
    spf = arith.spf_table(N)
    for y in (1, 2, 6):
        lay = sieve.build_layout(y)
        for m in range(3, N + 1):
            part = sieve._segment_table(lay, spf, m, m + 1)
            fac = arith.factorize(m)
            for s, d in enumerate(lay.d_values):
                got = int(np.flatnonzero(part.hist[s])[0])
                assert got == mg.inv_count(m, d, fac=fac), (y, m, d)
            assert (part.typical_count == 1) == mg.is_y_typical(m, y, fac=fac), (y, m)


def test_census_oracle_equivalence_bulk():
    # aggregate histograms over a bigger range against the exact chain
    N = 20000
    tab = sieve.run_census(N, 8)
    oracle = np.zeros_like(tab.hist)
    slot = {d: s for s, d in enumerate(tab.d_values)}
    want = set(tab.d_values)
    for m in range(3, N + 1):
        seen = dict.fromkeys(want, 0)
        for d, k in mg.invariant_factors(m).invariant:
            if d in seen:
                seen[d] = k
        for d, k in seen.items():
            oracle[slot[d], k] += 1
    assert np.array_equal(tab.hist, oracle)


def test_typical_route_matches_exact():
    lay = sieve.build_layout(2)
    checked = 0
    for m in range(3, 20000):
        if not mg.is_y_typical(m, 2):
            continue
        got = sieve.typical_inv(m, 2, lay)
        for d, v in got.items():
            assert v == mg.inv_count(m, d), (m, d)
        checked += 1
    assert checked > 300


def test_typical_route_rejects_nontypical():
    with pytest.raises(ValueError, match="not 2-typical"):
        sieve.typical_inv(3, 2)


# ----------------------------------------------------------- merge algebra


def test_merge_shards_bit_for_bit():
    N, y = 50000, 4
    full = sieve.run_census(N, y)
    lay = sieve.build_layout(y)
    spf = arith.spf_table(N)
    cuts = np.linspace(3, N + 1, 11).astype(int)
    shards = [sieve._segment_table(lay, spf, int(a), int(b)) for a, b in zip(cuts, cuts[1:])]
    assert functools.reduce(sieve.merge_tables, shards) == full
    # commutative: any order gives the identical table
    shuffled = shards[:]
    random.Random(11).shuffle(shuffled)
    assert functools.reduce(sieve.merge_tables, shuffled) == full
    # associative
    a, b, c = shards[0], shards[1], shards[2]
    assert sieve.merge_tables(sieve.merge_tables(a, b), c) == sieve.merge_tables(
        a, sieve.merge_tables(b, c)
    )


def test_merge_rejects_overlap_and_mismatch():
    lay = sieve.build_layout(2)
    spf = arith.spf_table(100)
    a = sieve._segment_table(lay, spf, 3, 50)
    b = sieve._segment_table(lay, spf, 40, 90)
    with pytest.raises(ValueError, match="overlapping"):
        sieve.merge_tables(a, b)
    other = sieve.run_census(50, 4)
    with pytest.raises(ValueError, match="layouts"):
        sieve.merge_tables(a, other)


def test_thread_determinism():
    kw = dict(N=200000, y=2, segment=1 << 15)
    t1 = sieve.run_census(threads=1, **kw)
    t4 = sieve.run_census(threads=4, **kw)
    t16 = sieve.run_census(threads=16, **kw)
    assert t1 == t4
    assert t4 == t16


def test_run_census_validation():
    with pytest.raises(ValueError):
        sieve.run_census(2, 2)
    with pytest.raises(ValueError):
        sieve.run_census(100, 0.5)
    with pytest.raises(ValueError):
        sieve.run_census(100, 2, segment=0)
    with pytest.raises(ValueError):
        sieve.run_census(100, 2, threads=0)


# ------------------------------------------------------- exact identities


def test_inv_total_identity_exact():
    # sum(inv_total - omega) = #{8|m} - #{2||m} over 3 <= m <= N, both
    # sides independently: tallies from the kernel, counts from ranges
    for N in (100, 4096, 10**5):
        tab = sieve.run_census(N, 2)
        lhs = tab.sum_inv_total - tab.sum_omega
        rhs = len(range(8, N + 1, 8)) - len(range(6, N + 1, 4))
        assert lhs == rhs
        assert tab.count_div8 == len(range(8, N + 1, 8))
        assert tab.count_exact2 == len(range(6, N + 1, 4))


def test_doubleton_events_disjoint(table_1e6_y6):
    # both members of a doubleton positive would need prm(q_i) > prm(q_{i+1})
    # and the reverse simultaneously; the kernel tallies the joint event
    for i in (2, 4, 6):
        assert table_1e6_y6.pair_overlap(i) == 0
    with pytest.raises(ValueError, match="doubleton"):
        table_1e6_y6.pair_overlap(3)


# ------------------------------------------------------------ prime sums


def test_a_omega_partial_frozen_values():
    # primes = 1 (mod 4) up to 100, enumerated independently
    ps = [5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97]
    assert sieve.a_omega_partial(100, 4, 1) == math.fsum(1 / p for p in ps)
    assert sieve.a_omega_partial(100, 4, 1) == pytest.approx(0.49215, abs=5e-6)
    assert sieve.a_omega_partial(10, 2, 1) == pytest.approx(1 / 3 + 1 / 5 + 1 / 7, abs=1e-15)


def test_a_omega_partial_growth_matches_loglog():
    got = sieve.a_omega_partial(10**7, 4, 1) - sieve.a_omega_partial(10**3, 4, 1)
    target = (math.log(math.log(1e7)) - math.log(math.log(1e3))) / 2
    assert abs(got - target) < 0.08


def test_a_omega_partial_validation():
    with pytest.raises(ValueError, match="coprime"):
        sieve.a_omega_partial(100, 4, 2)
    with pytest.raises(ValueError):
        sieve.a_omega_partial(2, 4, 1)


# ------------------------------------------------------- empirical stats


def test_empirical_stats_mean_matches_exact_path():
    N = 10**4
    tab = sieve.run_census(N, 2)
    st = sieve.empirical_stats(tab, 2)
    exact = sum(mg.inv_count(m, 2) for m in range(3, N + 1)) / (N - 2)
    assert st.mean == pytest.approx(exact, rel=1e-12)
    assert st.n == N - 2
    assert 0.0 <= st.frac_positive() <= 1.0


def test_empirical_stats_constant_samples_variance_zero(table_1e6_y2):
    t = table_1e6_y2
    hist = np.zeros_like(t.hist)
    hist[:, 3] = 17
    const = sieve.CensusTable(
        y=t.y,
        spans=((3, 20),),
        d_values=t.d_values,
        d_set_index=t.d_set_index,
        hist=hist,
        pair_both=np.zeros_like(t.pair_both),
        typical_count=0,
        sum_omega=0,
        sum_inv_total=0,
        count_div8=0,
        count_exact2=0,
        n_counted=17,
    )
    st = sieve.empirical_stats(const, 2)
    assert st.mean == 3.0
    assert st.variance == 0.0


def test_empirical_stats_rejects_untracked_or_bad_mode(table_1e6_y2):
    with pytest.raises(ValueError, match="not tracked"):
        sieve.empirical_stats(table_1e6_y2, 720)
    with pytest.raises(ValueError, match="centering"):
        sieve.empirical_stats(table_1e6_y2, 2, centering="midway")


def test_ecdf_evaluator(table_1e6_y2):
    st = sieve.empirical_stats(table_1e6_y2, 2)
    assert st.ecdf(-50.0) == 0.0
    assert st.ecdf(50.0) == 1.0
    # ecdf at the largest threshold equals the plain fraction
    z0 = (0 - st.center) / st.scale
    assert st.ecdf(z0) == pytest.approx(1.0 - st.frac_positive(), abs=1e-12)


def test_ks_distance_discriminates_laws(table_1e6_y2):
    st = sieve.empirical_stats(table_1e6_y2, 2)
    skew = st.ks_distance_to(theory.limiting_law(2))
    gauss = st.ks_distance_to(dist.standard_normal_law())
    assert skew < 0.2
    assert skew < gauss - 0.1


def test_ks_finite_centering_tightens_with_N(table_1e6_y2):
    law = theory.limiting_law(2)
    small = sieve.run_census(10**4, 2)
    ks_small = sieve.empirical_stats(small, 2).ks_distance_to(law)
    ks_big = sieve.empirical_stats(table_1e6_y2, 2).ks_distance_to(law)
    assert ks_big < ks_small


def test_sample_mean_window(table_1e6_y2):
    st = sieve.empirical_stats(table_1e6_y2, 2)
    loglog = math.log(math.log(10**6))
    assert 0.4 * loglog < st.mean < 0.5 * loglog


def test_samples_vector_is_sorted_uint16(table_1e6_y2):
    s = table_1e6_y2.samples(12)
    assert s.dtype == np.uint16
    assert s.shape[0] == table_1e6_y2.n_counted
    assert (np.diff(s.astype(np.int32)) >= 0).all()


# ---------------------------------------------------------- typicality


def test_typicality_fraction_brute_force_n30():
    tab = sieve.run_census(30, 1)
    brute = sum(mg.is_y_typical(m, 1) for m in range(3, 31))
    assert tab.n_counted == 28
    assert tab.typical_count == brute
    assert sieve.typicality_fraction(tab) == brute / 28


def test_typicality_monotone_trend(table_1e6_y2):
    f_small = sieve.typicality_fraction(sieve.run_census(10**4, 2))
    f_big = sieve.typicality_fraction(table_1e6_y2)
    assert f_big >= f_small - 0.02


# ------------------------------------------------------------- profile


def test_profile_histogram_targets(table_1e6_y6):
    rows = sieve.profile_histogram(table_1e6_y6)
    # 4 singleton rows + 3 rows per doubleton (joint + two members)
    assert len(rows) == 4 + 3 * 3
    by_key = {(r.index, r.orders): r.proportion for r in rows}
    loglog_scale = by_key[(1, (2,))]
    assert 0.40 < loglog_scale < 0.50
    # the profile decays sharply along the first indices
    lead = [
        by_key[(1, (2,))],
        by_key[(2, (4, 6))],
        by_key[(3, (12,))],
        by_key[(4, (24, 60))],
    ]
    assert all(a > 2 * b for a, b in zip(lead, lead[1:]))
    for (i, orders), prop in by_key.items():
        assert prop >= 0.0
        if i >= 5:
            assert prop < 0.01


# ----------------------------------------------------------------- CSV


def test_write_census_dir_roundtrip(tmp_path):
    tab = sieve.run_census(5000, 2)
    names = sieve.write_census_dir(tab, tmp_path)
    assert set(names) == {"samples_2.csv", "samples_4.csv", "samples_6.csv", "samples_12.csv", "summary.csv", "typicality.csv"}
    lines = (tmp_path / "samples_2.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "value,count"
    hist = np.zeros(64, dtype=np.int64)
    for row in lines[1:]:
        v, c = row.split(",")
        hist[int(v)] = int(c)
    assert np.array_equal(hist, tab.hist[0])

    summary = (tmp_path / "summary.csv").read_text(encoding="utf-8").splitlines()
    assert summary[0] == "d,i,mean,variance,frac_positive,N"
    first = summary[1].split(",")
    assert first[0] == "2" and first[-1] == "5000"
    # 17 significant digits reproduce the double exactly
    st = sieve.empirical_stats(tab, 2, centering="asymptotic")
    assert float(first[2]) == st.mean

    typ = (tmp_path / "typicality.csv").read_text(encoding="utf-8").splitlines()
    assert typ[0] == "y,N,typical_fraction"
    y, n, frac = typ[1].split(",")
    assert (y, n) == ("2", "5000")
    assert float(frac) == sieve.typicality_fraction(tab)
