"""Exact structure of the unit groups (Z/mZ)^x.

Per-m group theory, all integer-exact: elementary divisors via CRT over the
prime powers dividing m, the counting functions prm/pri with their
divisibility correction terms, the invariant-factor chain, totals,
y-typicality, and the maximal embedding multiplicity msg(m;G) = max{a : G^a
embeds in (Z/mZ)^x}.

Every counting function is implemented along two independent routes (a
residue-class formula with correction table, and direct counting in the
elementary-divisor multiset); the test suite holds them against each other
and against brute-force order counting in the actual group.
"""

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .arith import PrimePower, factorize

__all__ = [
    "AbelianGroupSpec",
    "Factorization",
    "GroupStructure",
    "QLike",
    "correction",
    "elementary_divisors",
    "inv_count",
    "inv_total",
    "invariant_factors",
    "is_y_typical",
    "max_untracked_prm",
    "msg_multiplicity",
    "pri_count",
    "pri_count_via_residues",
    "prm_count",
    "prm_count_via_divisors",
]

Factorization = List[Tuple[int, int]]
QLike = Union[int, PrimePower]


@lru_cache(maxsize=None)
def _prime_power_parts(n: int) -> Tuple[Tuple[int, int], ...]:
    """Factorization of n as ((p, e), ...); cached (n = ell - 1 repeats a lot)."""
    return tuple(factorize(n))


def _q_parts(q: QLike) -> Tuple[int, int, int]:
    """Normalize a prime-power argument to (p, alpha, value)."""
    if isinstance(q, PrimePower):
        return q.p, q.alpha, q.value
    fac = _prime_power_parts(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, alpha = fac[0]
    return p, alpha, q


def _check_m(m: int) -> None:
    if m < 3:
        raise ValueError("m must be >= 3 (unit groups mod 1 and 2 are trivial)")


def correction(m: int, q: QLike, kind: str, fac: Optional[Factorization] = None) -> int:
    """Divisibility correction terms E (exact) and Ebar (cumulative).

    Ebar(m; p^a) tops up omega(m; p^a, 1) to prm(m; p^a); E(m; p^a) tops up
    the exact-residue count to pri(m; p^a).  Values:

      Ebar: 2 if q=2 and 8|m; 1 if q=2 and 4||m; 1 if p=2, a>=2, 2^(a+2)|m;
            1 if p odd and p^(a+1)|m; else 0.
      E:    same rows with exact divisibility: 2 if q=2 and 8||m; 1 if q=2
            and (4||m or 16|m); 1 if p=2, a>=2, 2^(a+2)||m; 1 if p odd and
            p^(a+1)||m; else 0.
    """
    _check_m(m)
    if kind not in ("E", "Ebar"):
        raise ValueError("kind must be 'E' or 'Ebar'")
    p, alpha, _ = _q_parts(q)
    if fac is None:
        fac = factorize(m)
    exps = dict(fac)
    e2 = exps.get(2, 0)
    if kind == "Ebar":
        if p == 2 and alpha == 1:
            if e2 >= 3:
                return 2
            if e2 == 2:
                return 1
            return 0
        if p == 2:  # alpha >= 2
            return 1 if e2 >= alpha + 2 else 0
        return 1 if exps.get(p, 0) >= alpha + 1 else 0
    # kind == "E"
    if p == 2 and alpha == 1:
        if e2 == 3:
            return 2
        if e2 == 2 or e2 >= 4:
            return 1
        return 0
    if p == 2:  # alpha >= 2
        return 1 if e2 == alpha + 2 else 0
    return 1 if exps.get(p, 0) == alpha + 1 else 0


def _elementary_parts(m: int, fac: Optional[Factorization]) -> List[Tuple[int, int, int]]:
    """Elementary divisors as sorted (p, beta, p^beta) triples.

    CRT per prime power dividing m: an odd p^e || m contributes the
    prime-power parts of Z_(p-1) and (for e >= 2) p^(e-1); 4 || m
    contributes {2}; 2^e || m with e >= 3 contributes {2, 2^(e-2)}.
    """
    if fac is None:
        fac = factorize(m)
    parts: List[Tuple[int, int, int]] = []
    for p, e in fac:
        if p == 2:
            if e == 2:
                parts.append((2, 1, 2))
            elif e >= 3:
                parts.append((2, 1, 2))
                parts.append((2, e - 2, 2 ** (e - 2)))
        else:
            for r, s in _prime_power_parts(p - 1):
                parts.append((r, s, r**s))
            if e >= 2:
                parts.append((p, e - 1, p ** (e - 1)))
    parts.sort()
    return parts


def elementary_divisors(m: int, fac: Optional[Factorization] = None) -> List[int]:
    """Elementary divisors of (Z/mZ)^x, sorted by (prime, value)."""
    _check_m(m)
    return [v for _, _, v in _elementary_parts(m, fac)]


def _exps_by_prime(parts: List[Tuple[int, int, int]]) -> Dict[int, List[int]]:
    """{p: ascending exponent list} from (p, beta, value) triples."""
    out: Dict[int, List[int]] = {}
    for p, beta, _ in parts:
        out.setdefault(p, []).append(beta)
    for lst in out.values():
        lst.sort()
    return out


def _prm_from_exps(exps: Dict[int, List[int]], p: int, alpha: int) -> int:
    lst = exps.get(p)
    if not lst:
        return 0
    return len(lst) - bisect_left(lst, alpha)


def prm_count(m: int, q: QLike, fac: Optional[Factorization] = None) -> int:
    """prm(m; p^a): number of elementary divisors p^b with b >= a.

    Formula route: omega(m; p^a, 1) + Ebar(m; p^a), i.e. the number of
    distinct primes ell | m with ell = 1 (mod p^a), plus the correction.
    """
    _check_m(m)
    _, _, value = _q_parts(q)
    if fac is None:
        fac = factorize(m)
    omega = sum(1 for ell, _ in fac if ell % value == 1)
    return omega + correction(m, q, "Ebar", fac=fac)


def prm_count_via_divisors(m: int, q: QLike, fac: Optional[Factorization] = None) -> int:
    """prm(m; p^a) counted directly in the elementary-divisor multiset."""
    _check_m(m)
    p, alpha, _ = _q_parts(q)
    exps = _exps_by_prime(_elementary_parts(m, fac))
    return _prm_from_exps(exps, p, alpha)


def pri_count(m: int, q: QLike, fac: Optional[Factorization] = None) -> int:
    """pri(m; p^a): number of elementary divisors exactly p^a."""
    _check_m(m)
    p, _, value = _q_parts(q)
    return prm_count(m, value, fac=fac) - prm_count(m, value * p, fac=fac)


def pri_count_via_residues(m: int, q: QLike, fac: Optional[Factorization] = None) -> int:
    """pri(m; p^a) along the independent exact-residue route.

    Counts primes ell | m with p^a || ell - 1 and adds the exact
    correction E(m; p^a).
    """
    _check_m(m)
    p, _, value = _q_parts(q)
    if fac is None:
        fac = factorize(m)
    omega = sum(
        1 for ell, _ in fac if (ell - 1) % value == 0 and ((ell - 1) // value) % p != 0
    )
    return omega + correction(m, q, "E", fac=fac)


@dataclass(frozen=True)
class GroupStructure:
    """Both decompositions of (Z/mZ)^x.

    `elementary` is the prime-power multiset; `invariant` is the ascending
    divisibility chain ((d_1, mult_1), ...) with d_1 | d_2 | ... and every
    d_i even; the product over all factors is euler_phi(m) and the largest
    d_i is carmichael_lambda(m).
    """

    m: int
    elementary: Tuple[int, ...]
    invariant: Tuple[Tuple[int, int], ...]

    def expanded(self) -> List[int]:
        out = []
        for d, k in self.invariant:
            out.extend([d] * k)
        return out

    @property
    def total(self) -> int:
        return sum(k for _, k in self.invariant)

    def __str__(self) -> str:
        return " x ".join(f"Z{d}" for d in self.expanded())


def invariant_factors(m: int, fac: Optional[Factorization] = None) -> GroupStructure:
    """Invariant-factor chain from the elementary divisors.

    Distinct elementary prime powers are sorted by (prm descending, totient
    ascending, value ascending); d_i is the lcm of the first i entries and
    receives multiplicity prm(q_i) - prm(q_(i+1)) (the final entry keeps
    prm(q_M)); zero-multiplicity entries are dropped.  Ties in (prm,
    totient) are pairs sharing a totient and do not affect the surviving
    chain (the tied head always gets multiplicity zero).
    """
    _check_m(m)
    parts = _elementary_parts(m, fac)
    exps = _exps_by_prime(parts)
    distinct: List[Tuple[int, int, int, int]] = []  # (-prm, totient, value, prm)
    for p, betas in exps.items():
        for alpha in sorted(set(betas)):
            prm = _prm_from_exps(exps, p, alpha)
            tot = p ** (alpha - 1) * (p - 1)
            distinct.append((-prm, tot, p**alpha, prm))
    distinct.sort()
    chain: List[Tuple[int, int]] = []
    d = 1
    for j, (_, _, value, prm) in enumerate(distinct):
        d = lcm(d, value)
        nxt = distinct[j + 1][3] if j + 1 < len(distinct) else 0
        mult = prm - nxt
        if mult > 0:
            chain.append((d, mult))
    return GroupStructure(m=m, elementary=tuple(v for _, _, v in parts), invariant=tuple(chain))


def inv_count(m: int, d: int, fac: Optional[Factorization] = None) -> int:
    """inv(m; d): multiplicity of Z_d in the invariant-factor chain."""
    _check_m(m)
    if d < 1:
        raise ValueError("d must be >= 1")
    for order, k in invariant_factors(m, fac=fac).invariant:
        if order == d:
            return k
    return 0


def inv_total(m: int, fac: Optional[Factorization] = None) -> int:
    """inv(m): total number of invariant factors, by the omega formula.

    Equals omega(m)+1 when 8 | m, omega(m)-1 when 2 || m, else omega(m);
    independent of the chain construction (the suite checks they agree).
    """
    _check_m(m)
    if fac is None:
        fac = factorize(m)
    omega = len(fac)
    e2 = fac[0][1] if fac and fac[0][0] == 2 else 0
    if e2 >= 3:
        return omega + 1
    if e2 == 1:
        return omega - 1
    return omega


def max_untracked_prm(m: int, y: float, fac: Optional[Factorization] = None) -> int:
    """Largest prm(m; r) over prime powers r with phi(r) > y."""
    _check_m(m)
    exps = _exps_by_prime(_elementary_parts(m, fac))
    best = 0
    for p, betas in exps.items():
        for alpha in range(1, betas[-1] + 1):
            if p ** (alpha - 1) * (p - 1) > y:
                best = max(best, _prm_from_exps(exps, p, alpha))
                break  # prm only shrinks as alpha grows
    return best


def is_y_typical(m: int, y: float, fac: Optional[Factorization] = None) -> bool:
    """Whether the prm counts of m are in the canonical order up to level y.

    Two conditions over the tracked prime powers q (those with phi(q) <= y):
    (a) phi(q) < phi(q') <= y implies prm(m;q) >= prm(m;q'); and (b) every
    tracked prm strictly exceeds prm(m;r) for every untracked r (phi(r) >
    y).  (b) compares against the finitely many r with prm(m;r) > 0, and
    forces every tracked prm to be positive.
    """
    from .arith import prime_powers_with_totient_at_most

    _check_m(m)
    if y < 1:
        raise ValueError("y must be >= 1")
    if fac is None:
        fac = factorize(m)
    exps = _exps_by_prime(_elementary_parts(m, fac))
    tracked = prime_powers_with_totient_at_most(y)
    prms = [_prm_from_exps(exps, q.p, q.alpha) for q in tracked]
    # (a): tracked list is sorted by totient; compare across strict
    # totient increases (equal-totient pairs are unconstrained)
    for i, qi in enumerate(tracked):
        for j in range(i + 1, len(tracked)):
            if tracked[j].totient > qi.totient and prms[i] < prms[j]:
                return False
    # (b): strict dominance over every untracked prime power
    u = max_untracked_prm(m, y, fac=fac)
    return all(v > u for v in prms)


@dataclass(frozen=True)
class AbelianGroupSpec:
    """A finite abelian group given by its elementary divisors.

    `elementary` is the sorted prime-power multiset; prm(q) counts the
    elementary divisors p^b with b >= a for q = p^a (weakly decreasing in a
    for fixed p).  Embedding criterion: A embeds in B iff prm_A(q) <=
    prm_B(q) for every prime power q.
    """

    elementary: Tuple[int, ...]

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "AbelianGroupSpec":
        """Build from cyclic orders (each factors into prime-power parts)."""
        parts: List[Tuple[int, int, int]] = []
        for n in orders:
            if n < 1:
                raise ValueError("cyclic orders must be positive")
            for p, e in factorize(n):
                parts.append((p, e, p**e))
        if not parts:
            raise ValueError("the trivial group is rejected")
        parts.sort()
        return cls(elementary=tuple(v for _, _, v in parts))

    def _exps(self) -> Dict[int, List[int]]:
        out: Dict[int, List[int]] = {}
        for v in self.elementary:
            p, alpha, _ = _q_parts(v)
            out.setdefault(p, []).append(alpha)
        for lst in out.values():
            lst.sort()
        return out

    def prm(self, q: QLike) -> int:
        p, alpha, _ = _q_parts(q)
        return _prm_from_exps(self._exps(), p, alpha)

    def prm_levels(self) -> List[Tuple[int, int]]:
        """All (p^a, prm) with prm > 0, i.e. a up to the largest exponent."""
        exps = self._exps()
        out = []
        for p, betas in sorted(exps.items()):
            for alpha in range(1, betas[-1] + 1):
                out.append((p**alpha, _prm_from_exps(exps, p, alpha)))
        return out

    @property
    def order(self) -> int:
        n = 1
        for v in self.elementary:
            n *= v
        return n


GroupLike = Union[AbelianGroupSpec, int, Iterable[int]]


def _as_group(G: GroupLike) -> AbelianGroupSpec:
    if isinstance(G, AbelianGroupSpec):
        return G
    if isinstance(G, int):
        return AbelianGroupSpec.from_orders([G])
    return AbelianGroupSpec.from_orders(G)


def msg_multiplicity(m: int, G: GroupLike, fac: Optional[Factorization] = None) -> int:
    """msg(m; G) = max{a >= 0 : G^a embeds in (Z/mZ)^x}.

    By the prm embedding criterion this is the minimum over prime powers q
    with prm_G(q) > 0 of floor(prm(m;q) / prm_G(q)).
    """
    _check_m(m)
    g = _as_group(G)
    exps = _exps_by_prime(_elementary_parts(m, fac))
    best = None
    for value, gprm in g.prm_levels():
        p, alpha, _ = _q_parts(value)
        a = _prm_from_exps(exps, p, alpha) // gprm
        best = a if best is None else min(best, a)
    assert best is not None  # from_orders rejects the trivial group
    return best
