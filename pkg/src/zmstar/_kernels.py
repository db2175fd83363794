"""Compiled kernels (numba, nogil) for the bulk-census hot paths.

Everything here is deliberately allocation-free inner-loop code; the
orchestration, aggregation and all exactness-sensitive bookkeeping live in
sieve.py.  All kernels release the GIL so segment workers can overlap.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def fill_spf(spf, base_primes, segment):
    """Fill spf[m] = smallest prime factor of m for 2 <= m < len(spf).

    Works segment-by-segment for cache locality: for each window
    [lo, hi) every base prime p marks its unmarked multiples, then
    untouched entries are primes (spf[m] = m).
    """
    N = spf.shape[0] - 1
    lo = 2
    while lo <= N:
        hi = min(lo + segment, N + 1)
        for i in range(base_primes.shape[0]):
            p = base_primes[i]
            start = p * p
            if start < lo:
                start = ((lo + p - 1) // p) * p
            if start >= hi:
                continue
            for m in range(start, hi, p):
                if spf[m] == 0:
                    spf[m] = p
        for m in range(lo, hi):
            if spf[m] == 0:
                spf[m] = m
        lo = hi


@njit(cache=True, nogil=True)
def census_segment(
    lo,
    hi,
    spf,
    q_arr,
    q_p,
    q_beta,
    n_tracked,
    level_start,
    untracked_min_idx,
    pstar_mask,
    comp_off,
    comp_flat,
    bound_off,
    bound_flat,
    pair_a,
    pair_b,
    out_hist,
    out_pair_both,
    out_tallies,
):
    """Census over m in [lo, hi): inv(m;d) histograms plus exact tallies.

    q_arr holds prime powers p^beta (parallel arrays q_p, q_beta); the
    first n_tracked entries are the tracked powers in totient order,
    grouped into equal-totient levels by level_start.  For each m the
    kernel factors via spf, computes prm(m;q) = #{p | m : p = 1 mod q}
    plus the divisibility correction for every q in q_arr, and takes the
    running maximum B of prm(m;r) over primes r outside pstar_mask (their
    higher powers can only do worse).  Then for sample slot s describing
    order d,

        inv(m; d) = max(0, min prm over d's maximal prime powers
                           - max prm over powers just outside d),

    where "just outside" = comp powers bumped one exponent, the other
    small primes at exponent one (bound_flat), and B.  This holds for
    every m: the invariant-factor chain visits d at depth k exactly when
    all of d's component powers survive to depth k and nothing outside d
    does.  Typicality: the tracked prm values must not increase across a
    totient level boundary and min(tracked) must strictly exceed the
    best untracked prm.

    out_hist is int64[n_slots, 64]; out_pair_both[j] counts the m where
    the doubleton slots pair_a[j] and pair_b[j] are *both* positive
    (provably never, since one needs prm(q_i) > prm(q_(i+1)) and the
    other the reverse - tallied so the claim is audited, not assumed);
    out_tallies is int64[6] receiving
    (typical, sum omega, sum inv_total, #{8|m}, #{2||m}, #m).
    """
    nq = q_arr.shape[0]
    n_slots = comp_off.shape[0] - 1
    n_levels = level_start.shape[0] - 1
    pstar_max = pstar_mask.shape[0] - 1

    fac_p = np.empty(32, dtype=np.int64)
    fac_v = np.empty(32, dtype=np.int64)
    prm = np.empty(nq, dtype=np.int64)
    inv_buf = np.empty(n_slots, dtype=np.int64)
    big_val = np.empty(64, dtype=np.int64)
    big_cnt = np.empty(64, dtype=np.int64)

    for m in range(lo, hi):
        mm = m
        r = 0
        while mm > 1:
            p = np.int64(spf[mm])
            v = 0
            while mm % p == 0:
                mm //= p
                v += 1
            fac_p[r] = p
            fac_v[r] = v
            r += 1
        omega = r
        v2 = fac_v[0] if fac_p[0] == 2 else np.int64(0)

        for t in range(nq):
            q = q_arr[t]
            cnt = 0
            for j in range(r):
                if (fac_p[j] - 1) % q == 0:
                    cnt += 1
            p = q_p[t]
            beta = q_beta[t]
            vp = np.int64(0)
            for j in range(r):
                if fac_p[j] == p:
                    vp = fac_v[j]
                    break
            if p == 2:
                if beta == 1:
                    corr = 2 if v2 >= 3 else (1 if v2 == 2 else 0)
                else:
                    corr = 1 if v2 >= beta + 2 else 0
            else:
                corr = 1 if vp >= beta + 1 else 0
            prm[t] = cnt + corr

        # best prm over primes outside the small-prime support
        nb = 0
        for j in range(r):
            x = fac_p[j] - 1
            while x > 1:
                rp = np.int64(spf[x])
                while x % rp == 0:
                    x //= rp
                if rp > pstar_max or pstar_mask[rp] == 0:
                    found = -1
                    for t2 in range(nb):
                        if big_val[t2] == rp:
                            found = t2
                            break
                    if found >= 0:
                        big_cnt[found] += 1
                    else:
                        big_val[nb] = rp
                        big_cnt[nb] = 1
                        nb += 1
        B = np.int64(0)
        for t2 in range(nb):
            c = big_cnt[t2]
            for j in range(r):
                if fac_p[j] == big_val[t2]:
                    if fac_v[j] >= 2:
                        c += 1
                    break
            if c > B:
                B = c
        if B == 0:
            # a squared prime outside the support scores 1 via its correction
            for j in range(r):
                if fac_v[j] >= 2 and (fac_p[j] > pstar_max or pstar_mask[fac_p[j]] == 0):
                    B = 1
                    break

        for s in range(n_slots):
            lo_v = np.int64(1 << 30)
            for ci in range(comp_off[s], comp_off[s + 1]):
                v = prm[comp_flat[ci]]
                if v < lo_v:
                    lo_v = v
            hi_v = B
            for bi in range(bound_off[s], bound_off[s + 1]):
                v = prm[bound_flat[bi]]
                if v > hi_v:
                    hi_v = v
            val = lo_v - hi_v
            if val < 0:
                val = 0
            if val > 63:
                val = 63
            inv_buf[s] = val
            out_hist[s, val] += 1

        for j in range(pair_a.shape[0]):
            if inv_buf[pair_a[j]] > 0 and inv_buf[pair_b[j]] > 0:
                out_pair_both[j] += 1

        typical = True
        for L in range(n_levels - 1):
            mn = np.int64(1 << 30)
            for t in range(level_start[L], level_start[L + 1]):
                if prm[t] < mn:
                    mn = prm[t]
            mx = np.int64(0)
            for t in range(level_start[L + 1], level_start[L + 2]):
                if prm[t] > mx:
                    mx = prm[t]
            if mn < mx:
                typical = False
                break
        if typical:
            u = B
            for k in range(untracked_min_idx.shape[0]):
                if prm[untracked_min_idx[k]] > u:
                    u = prm[untracked_min_idx[k]]
            mn_all = np.int64(1 << 30)
            for t in range(n_tracked):
                if prm[t] < mn_all:
                    mn_all = prm[t]
            if mn_all <= u:
                typical = False

        if typical:
            out_tallies[0] += 1
        out_tallies[1] += omega
        inv_tot = omega + (1 if v2 >= 3 else (-1 if v2 == 1 else 0))
        out_tallies[2] += inv_tot
        if v2 >= 3:
            out_tallies[3] += 1
        if v2 == 1:
            out_tallies[4] += 1
        out_tallies[5] += 1
