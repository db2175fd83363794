"""Integer arithmetic substrate: factorization, totients, lcm, prime-power
enumeration by totient, and the classical counting functions psi, pi*, V, W.

Moduli m are native 64-bit; lcm/V values are arbitrary-precision Python ints
(V(x) ~ e^x overflows 64 bits near x ~ 44, and the universal-factor tables
extend past index 40).
"""

from dataclasses import dataclass
from math import isqrt, lcm, log
from typing import Iterable, List, NamedTuple, Sequence, Tuple

import numpy as np

__all__ = [
    "ClassicalCounts",
    "PrimePower",
    "big_V",
    "carmichael_lambda",
    "classical_counts",
    "euler_phi",
    "factorize",
    "factorize_spf",
    "is_prime",
    "iter_prime_power_divisors",
    "lcm_all",
    "prime_powers_with_totient_at_most",
    "primes_upto",
    "spf_table",
]


@dataclass(frozen=True, order=True)
class PrimePower:
    """A prime power q = p^alpha with cached value and totient."""

    # order: sort by (totient, value) = the total phi-sequence order
    totient: int
    value: int
    p: int
    alpha: int

    @classmethod
    def make(cls, p: int, alpha: int) -> "PrimePower":
        if alpha < 1:
            raise ValueError("alpha must be >= 1")
        value = p ** alpha
        totient = p ** (alpha - 1) * (p - 1)
        return cls(totient=totient, value=value, p=p, alpha=alpha)

    @classmethod
    def from_value(cls, q: int) -> "PrimePower":
        """Parse a prime-power value; rejects non-prime-powers."""
        fac = factorize(q)
        if len(fac) != 1:
            raise ValueError(f"{q} is not a prime power")
        p, alpha = fac[0]
        return cls.make(p, alpha)

    def __repr__(self):
        return f"PrimePower({self.p}^{self.alpha}={self.value})"


def factorize(m: int) -> List[Tuple[int, int]]:
    """Canonical factorization of m >= 1 as an ascending list of (p, e).

    Trial division by 2, 3 and 6k+-1; fine for the <= 10^12 single-m CLI
    scale.  Bulk factorization goes through spf_table instead.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    out = []
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    d = 5
    while d * d <= m:
        for p in (d, d + 2):
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                out.append((p, e))
        d += 6
    if m > 1:
        out.append((m, 1))
    return out


def euler_phi(m: int) -> int:
    """Euler's totient."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    out = 1
    for p, e in factorize(m):
        out *= p ** (e - 1) * (p - 1)
    return out


def carmichael_lambda(m: int) -> int:
    """Carmichael's function: the exponent of the unit group mod m.

    Computed directly from the classical prime-power formula, independently
    of any invariant-factor machinery (it serves as an oracle for the
    largest invariant factor).
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    parts = []
    for p, e in factorize(m):
        if p == 2:
            if e == 1:
                parts.append(1)
            elif e == 2:
                parts.append(2)
            else:
                parts.append(2 ** (e - 2))
        else:
            parts.append(p ** (e - 1) * (p - 1))
    return lcm(*parts) if parts else 1


def lcm_all(values: Sequence[int]) -> int:
    """Exact lcm of a nonempty sequence, arbitrary precision."""
    vals = list(values)
    if not vals:
        raise ValueError("lcm_all of an empty sequence")
    if any(v < 1 for v in vals):
        raise ValueError("lcm_all arguments must be positive")
    return lcm(*vals)


def primes_upto(n: int) -> np.ndarray:
    """All primes <= n as an int64 array (simple numpy sieve)."""
    if n < 2:
        return np.array([], dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def spf_table(N: int, segment: int = 1 << 22) -> np.ndarray:
    """Smallest-prime-factor table for 2 <= m <= N (spf[0]=spf[1]=0).

    Built segment-by-segment from the primes <= sqrt(N); int32 entries, so
    the table costs 4(N+1) bytes and one lookup chain factors any m <= N in
    O(log m).  Immutable after construction and safe to share across
    threads.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    from . import _kernels

    spf = np.zeros(N + 1, dtype=np.int32)
    base = primes_upto(isqrt(N)).astype(np.int64)
    _kernels.fill_spf(spf, base, np.int64(segment))
    return spf


def factorize_spf(m: int, spf: np.ndarray) -> List[Tuple[int, int]]:
    """Factorization via a precomputed SPF table (m within table range)."""
    out = []
    while m > 1:
        p = int(spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        out.append((p, e))
    return out


def prime_powers_with_totient_at_most(y: float) -> List[PrimePower]:
    """All prime powers q with phi(q) <= y, sorted by (totient, value).

    Finite because phi(p^alpha) >= p^alpha / 2, so it suffices to scan
    primes p <= 2y + 2 and exponents until the totient exceeds y.
    """
    if y < 1:
        raise ValueError("y must be >= 1")
    bound = int(2 * y) + 2
    out = []
    for p in primes_upto(bound):
        p = int(p)
        if p - 1 > y:
            continue
        alpha = 1
        while True:
            q = PrimePower.make(p, alpha)
            if q.totient > y:
                break
            out.append(q)
            alpha += 1
    out.sort()
    return out


def _prod_tree(vals: List[int]) -> int:
    """Balanced product of big ints (keeps multiplications near-sized)."""
    if not vals:
        return 1
    while len(vals) > 1:
        nxt = [vals[i] * vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]


class ClassicalCounts(NamedTuple):
    psi: float       # sum of Lambda(n) over n <= x  (= log lcm(1..x), exact)
    pi_star: int     # number of prime powers <= x
    logV: float      # log lcm{q prime power : phi(q) <= x}
    W: int           # number of prime powers with phi(q) <= x


def classical_counts(x: float) -> ClassicalCounts:
    """Exact psi(x), pi*(x) and the totient-bounded logV(x), W(x).

    psi and logV are computed as exact logs of arbitrary-precision
    integers (Python's math.log accepts big ints), not as float sums.
    """
    if x < 3:
        raise ValueError("x must be >= 3")
    n = int(x)
    pp_parts = []
    pi_star = 0
    for p in primes_upto(n):
        p = int(p)
        pe = p
        while pe * p <= n:
            pe *= p
        pp_parts.append(pe)
        # count alpha with p^alpha <= n
        a, t = 1, p
        while t * p <= n:
            t *= p
            a += 1
        pi_star += a
    psi = log(_prod_tree(pp_parts)) if pp_parts else 0.0

    qs = prime_powers_with_totient_at_most(x)
    W = len(qs)
    v_parts = {}
    for q in qs:
        v_parts[q.p] = max(v_parts.get(q.p, 0), q.value)
    logV = log(_prod_tree(list(v_parts.values()))) if v_parts else 0.0
    return ClassicalCounts(psi=psi, pi_star=pi_star, logV=logV, W=W)


def big_V(y: float) -> int:
    """V(y) = lcm of all prime powers with totient <= y (arbitrary precision)."""
    qs = prime_powers_with_totient_at_most(y)
    parts = {}
    for q in qs:
        parts[q.p] = max(parts.get(q.p, 0), q.value)
    return _prod_tree(list(parts.values()))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def iter_prime_power_divisors(n: int) -> Iterable[Tuple[int, int, int]]:
    """Yield (p, beta, p^beta) over all prime-power divisors of n >= 2."""
    for p, e in factorize(n):
        pe = 1
        for beta in range(1, e + 1):
            pe *= p
            yield p, beta, pe
