"""Totient-ordered prime powers and universal factor orders.

Prime powers sorted by (totient, value) form the sequence q_1=2, q_2=3,
q_3=4, q_4=5, q_5=8, ...; at most two consecutive entries can share a
totient, and when they do the first is prime.  Out of the prefix lcms of
this sequence come the *universal factor orders*: the sets f_i of one or
two integers such that, for almost every m, the i-th largest invariant
factor of (Z/mZ)^x is an element of f_i.  The exact rational constants
attached to consecutive totients (mu_i, sigma_i^2, nu_i^2, ...) drive the
limiting distributions in `theory`.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import islice
from math import lcm
from typing import Iterator, List, Optional, Tuple

from .arith import PrimePower, is_prime, prime_powers_with_totient_at_most

__all__ = [
    "AuditReport",
    "NeighborCase",
    "PhiSeqEntry",
    "UfoConstants",
    "UfoEntry",
    "classify",
    "find_ufo_index",
    "structural_audit",
    "total_phi_sequence",
    "ufo_constants",
    "ufo_sets",
]


@dataclass(frozen=True)
class PhiSeqEntry:
    index: int          # 1-based position in the totient order
    q: PrimePower
    totient: int


@dataclass(frozen=True)
class UfoEntry:
    index: int
    elements: Tuple[int, ...]   # ascending; length 1 or 2
    is_doubleton: bool

    def __contains__(self, d: int) -> bool:
        return d in self.elements


@dataclass(frozen=True)
class UfoConstants:
    """Exact rational moment constants for index i.

    With D1 = 1/phi(q_i) and D2 = 1/phi(q_{i+1}):
      mu        = D1 - D2                   (mean slope)
      sigma2    = D1 + D2 - 2 D1 D2         (variance slope)
      sigma2_21 = D1^2 + D2 - 2 D1 D2       (squared-left covariance slope)
      sigma2_12 = D1 + D2^2 - 2 D1 D2       (squared-right covariance slope)
      sigma2_22 = D1^2 + D2^2 - 2 D1 D2     (both squared; equals (D1-D2)^2)
      nu2       = sigma2 - sigma2_21        (equals D1 (1 - D1))
    """

    index: int
    mu: Fraction
    sigma2: Fraction
    sigma2_21: Fraction
    sigma2_12: Fraction
    sigma2_22: Fraction
    nu2: Fraction


class NeighborCase(Enum):
    """Doubleton pattern of (f_{i-1}, f_i, f_{i+1}) governing the limit law."""

    ALL_SINGLETON = "AllSingleton"
    DOUBLETON_LEFT = "DoubletonLeft"
    DOUBLETON_RIGHT = "DoubletonRight"
    DOUBLETON_BOTH = "DoubletonBoth"
    DOUBLETON_SELF = "DoubletonSelf"
    SPECIAL_D2 = "SpecialD2"      # i = 1: no left neighbor exists
    SPECIAL_D12 = "SpecialD12"    # i = 3: both neighbor pairs interact


def _phi_entries(k: int) -> List[PhiSeqEntry]:
    """First k entries of the totient order (grow the scan bound as needed)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    y = 16
    qs = prime_powers_with_totient_at_most(y)
    while len(qs) <= k:  # one spare entry so ties at the boundary resolve
        y *= 2
        qs = prime_powers_with_totient_at_most(y)
    return [PhiSeqEntry(index=i + 1, q=q, totient=q.totient) for i, q in enumerate(qs[:k])]


def total_phi_sequence(k: int) -> List[PhiSeqEntry]:
    """First k prime powers sorted by (totient ascending, value ascending)."""
    return _phi_entries(k)


def _iter_ufo() -> Iterator[UfoEntry]:
    """Lazily yield f_1, f_2, ...

    f_i = {lcm(q_1..q_i)} when phi(q_i) < phi(q_{i+1}); when the totients
    tie, f_i = {lcm(q_1..q_{i-1}, q_i), lcm(q_1..q_{i-1}, q_{i+1})} and
    f_{i+1} resumes the full prefix lcm.
    """
    k = 64
    entries = _phi_entries(k)
    prefix = 1  # lcm of q_1 .. q_{i-1}
    i = 1
    while True:
        if i + 1 > len(entries) - 1:
            k *= 2
            entries = _phi_entries(k)
        qi = entries[i - 1]
        qnext = entries[i]
        if qi.totient == qnext.totient:
            elems = sorted((lcm(prefix, qi.q.value), lcm(prefix, qnext.q.value)))
            yield UfoEntry(index=i, elements=tuple(elems), is_doubleton=True)
        else:
            elems = (lcm(prefix, qi.q.value),)
            yield UfoEntry(index=i, elements=elems, is_doubleton=False)
        prefix = lcm(prefix, qi.q.value)
        i += 1


def ufo_sets(k: int) -> List[UfoEntry]:
    """First k universal factor order sets f_1 .. f_k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = []
    for entry in _iter_ufo():
        out.append(entry)
        if len(out) == k:
            return out
    raise AssertionError("unreachable")


def ufo_constants(i: int) -> UfoConstants:
    """Exact rational constants (mu_i, sigma_i^2, ...) for index i >= 1."""
    if i < 1:
        raise ValueError("index must be >= 1")
    entries = _phi_entries(i + 1)
    d1 = Fraction(1, entries[i - 1].totient)
    d2 = Fraction(1, entries[i].totient)
    d3 = d1 * d2
    sigma2 = d1 + d2 - 2 * d3
    sigma2_21 = d1 * d1 + d2 - 2 * d3
    return UfoConstants(
        index=i,
        mu=d1 - d2,
        sigma2=sigma2,
        sigma2_21=sigma2_21,
        sigma2_12=d1 + d2 * d2 - 2 * d3,
        sigma2_22=d1 * d1 + d2 * d2 - 2 * d3,
        nu2=sigma2 - sigma2_21,
    )


def classify(i: int) -> NeighborCase:
    """Neighborhood case of index i (which limit law applies)."""
    if i < 1:
        raise ValueError("index must be >= 1")
    sets = ufo_sets(i + 1)
    if sets[i - 1].is_doubleton:
        return NeighborCase.DOUBLETON_SELF
    if i == 1:
        return NeighborCase.SPECIAL_D2
    if i == 3:
        return NeighborCase.SPECIAL_D12
    left = sets[i - 2].is_doubleton
    right = sets[i].is_doubleton
    if left and right:
        return NeighborCase.DOUBLETON_BOTH
    if left:
        return NeighborCase.DOUBLETON_LEFT
    if right:
        return NeighborCase.DOUBLETON_RIGHT
    return NeighborCase.ALL_SINGLETON


def find_ufo_index(d: int) -> Optional[int]:
    """Index i with d in f_i, or None when d is a rare factor order.

    Terminates because every element of f_i is a multiple of the prefix
    lcm of q_1..q_{i-1}, which tends to infinity.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    for entry in _iter_ufo():
        if d in entry.elements:
            return entry.index
        if min(entry.elements) > d:
            return None
    raise AssertionError("unreachable")


def _next_prime_above(n: int) -> int:
    c = n + 1
    while not is_prime(c):
        c += 1
    return c


@dataclass
class AuditReport:
    limit: int
    n_prime_powers: int
    n_sets: int
    violations: List[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def structural_audit(limit: int) -> AuditReport:
    """Exhaustively check the structure lemmas up to a totient bound.

    (i)  every totient value <= limit has at most two prime-power
         preimages, and when there are two the smaller is prime;
    (ii) for every prime power p^a >= 5 with totient <= limit, some prime
         l satisfies phi(p^a) < l-1 < phi(p^(a+1)) (so consecutive powers
         of p never tie and doubletons cannot chain);
    (iii) no two adjacent f_i are both doubletons.
    """
    if limit < 2:
        raise ValueError("limit must be >= 2")
    qs = prime_powers_with_totient_at_most(limit)
    violations = []

    by_totient = {}
    for q in qs:
        by_totient.setdefault(q.totient, []).append(q.value)
    for t, vals in sorted(by_totient.items()):
        if len(vals) > 2:
            violations.append(f"totient {t} has {len(vals)} preimages {vals}")
        elif len(vals) == 2 and not is_prime(min(vals)):
            violations.append(f"totient {t} pair {vals}: smaller is not prime")

    for q in qs:
        if q.value < 5:
            continue
        lo = q.totient                      # phi(p^a)
        hi = q.value * (q.p - 1)            # phi(p^(a+1)) = p^a (p-1)
        ell = _next_prime_above(lo + 1)
        if not (lo < ell - 1 < hi):
            violations.append(f"no prime l with {lo} < l-1 < {hi} (q={q.value})")

    sets = list(islice(_iter_ufo(), len(qs)))
    for a, b in zip(sets, sets[1:]):
        if a.is_doubleton and b.is_doubleton:
            violations.append(f"adjacent doubletons at indices {a.index}, {b.index}")

    return AuditReport(limit=limit, n_prime_powers=len(qs), n_sets=len(sets), violations=violations)
