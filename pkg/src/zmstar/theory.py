"""Dispatcher from a fixed order d to its predicted statistics.

Given d, locate its position in the chain of universal orders and return
(a) the limiting law of the normalized multiplicity

    I_n = (inv(m; d) - c loglog n) / (s sqrt(loglog n)),

and (b) the two-term expectation prediction

    E inv(m; d) = leading * loglog n + secondary * sqrt(loglog n) + O(1).

The case analysis follows the doubleton pattern of the neighboring
universal sets (see :mod:`zmstar.ufo`):

* all neighbors singleton        -> standard normal;
* doubleton on the left/right    -> skew-normal, parameter an exact
  radical of a rational;
* doubletons on both sides       -> the minimum law of four correlated
  Gaussians, expressed through the three-scale convolution U;
* d itself in a doubleton        -> a Gaussian branch truncated at zero;
* d = 2 and d = 12               -> flagged special cases (d = 2 uses the
  right-doubleton skew formula; d = 12 has its own singular covariance
  because 4 and 8 share the prime 2);
* d in no universal set          -> degenerate at zero.

All coefficients are carried as exact rationals, or as sums of signed
square roots of rationals divided by sqrt(pi), so that downstream
comparisons can be made exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from . import dist, ufo

__all__ = [
    "ExpectationFormula",
    "LawKind",
    "LimitLaw",
    "expectation_formula",
    "expected_count",
    "limiting_law",
]

_SQRT_2PI = math.sqrt(2.0 * math.pi)


class LawKind(Enum):
    """The six limit-law shapes."""

    STANDARD_NORMAL = "StandardNormal"
    SKEW_NORMAL = "SkewNormal"
    TRUNCATED_AT_ZERO = "TruncatedAtZero"
    TRIPLE_MINUS_U = "TripleMinusU"
    SPECIAL12 = "Special12"
    DEGENERATE_ZERO = "DegenerateZero"


@dataclass(frozen=True)
class LimitLaw:
    """Limiting law of I_n = (inv(m; d) - c loglog n)/(s sqrt(loglog n)).

    ``center_coeff`` (c) and ``scale_squared`` (s^2) are exact rationals:
    c = mu_i and s^2 = sigma_i^2 for a singleton universal d, c = 0 and
    s^2 = sigma_i^2 for doubleton members, both zero for the degenerate
    case.  Skew parameters are stored by their exact square (the sign is
    always negative); the U-law scales by their exact squares with the
    prescale applied to the argument.
    """

    kind: LawKind
    center_coeff: Fraction
    scale_squared: Fraction
    index: Optional[int] = None
    skew_alpha_squared: Optional[Fraction] = None
    u_sigmas_squared: Optional[Tuple[Fraction, Fraction, Fraction]] = None
    prescale: int = 1
    flag: str = ""

    @property
    def scale_coeff(self) -> float:
        return math.sqrt(float(self.scale_squared))

    @property
    def alpha(self) -> Optional[float]:
        if self.skew_alpha_squared is None:
            return None
        return -math.sqrt(float(self.skew_alpha_squared))

    @property
    def u_sigmas(self) -> Optional[Tuple[float, float, float]]:
        if self.u_sigmas_squared is None:
            return None
        return tuple(math.sqrt(float(s2)) for s2 in self.u_sigmas_squared)

    def cdf(self, x: float, *, n_samples: int = 10_000_000, seed: int = 0) -> float:
        """Evaluate the law's CDF (the sampling knobs apply only to Special12)."""
        if self.kind is LawKind.STANDARD_NORMAL:
            return dist.norm_cdf(x)
        if self.kind is LawKind.SKEW_NORMAL:
            return dist.skew_normal_cdf(x, self.alpha)
        if self.kind is LawKind.TRUNCATED_AT_ZERO:
            return dist.norm_cdf(x) if x >= 0.0 else 0.0
        if self.kind is LawKind.TRIPLE_MINUS_U:
            return dist.u_function(self.prescale * x, self.u_sigmas)
        if self.kind is LawKind.SPECIAL12:
            return dist.special12_cdf(x, n_samples=n_samples, seed=seed)
        return 1.0 if x >= 0.0 else 0.0  # DegenerateZero

    def law_mean(self, *, n_samples: int = 10_000_000, seed: int = 0) -> float:
        """Mean of the law (exact closed forms; Monte Carlo for Special12)."""
        if self.kind is LawKind.STANDARD_NORMAL or self.kind is LawKind.DEGENERATE_ZERO:
            return 0.0
        if self.kind is LawKind.SKEW_NORMAL:
            return dist.skew_normal_mean(self.alpha)
        if self.kind is LawKind.TRUNCATED_AT_ZERO:
            return 1.0 / _SQRT_2PI
        if self.kind is LawKind.TRIPLE_MINUS_U:
            return dist.conv_mean(self.u_sigmas, "minus") / self.prescale
        return dist._special12_empirical(n_samples, seed).mean()


@dataclass(frozen=True)
class ExpectationFormula:
    """Two-term prediction leading*loglog n + secondary*sqrt(loglog n).

    ``leading`` is an exact rational; ``secondary_terms`` is a sum of
    signed radicals, each pair (sign, r) contributing sign*sqrt(r/pi)
    with r rational, so e.g. -sigma/sqrt(2 pi) is (-1, sigma^2/2).
    """

    leading: Fraction
    secondary_terms: Tuple[Tuple[int, Fraction], ...]
    case: str

    @property
    def secondary(self) -> float:
        return sum(
            sign * math.sqrt(float(r) / math.pi) for sign, r in self.secondary_terms
        )

    def evaluate(self, n: float) -> float:
        if n < 16:
            raise ValueError(f"sample bound must be at least 16, got {n!r}")
        loglog = math.log(math.log(n))
        return float(self.leading) * loglog + self.secondary * math.sqrt(loglog)


def _skew_alpha_squared_left(i: int) -> Fraction:
    """alpha^2 for a left doubleton: nu_i^2 / (sigma_i^2 + sigma_{i;2,1}^2)."""
    k = ufo.ufo_constants(i)
    return k.nu2 / (k.sigma2 + k.sigma2_21)


def _skew_alpha_squared_right(i: int) -> Fraction:
    """alpha^2 for a right doubleton: nu_{i+1}^2 / (sigma_i^2 + sigma_{i;1,2}^2)."""
    k = ufo.ufo_constants(i)
    k_next = ufo.ufo_constants(i + 1)
    return k_next.nu2 / (k.sigma2 + k.sigma2_12)


def _quad_correlations(i: int) -> Tuple[Fraction, Fraction, Fraction]:
    """Exact correlation pattern (a, b, c) for a both-sides doubleton index."""
    k = ufo.ufo_constants(i)
    return (
        k.sigma2_12 / k.sigma2,
        k.sigma2_21 / k.sigma2,
        k.sigma2_22 / k.sigma2,
    )


def _u_sigmas_squared(i: int) -> Tuple[Fraction, Fraction, Fraction]:
    """Exact squared scales (2 sqrt(lambda_j))^2 = 4 lambda_j of the U law."""
    a, b, c = _quad_correlations(i)
    return (4 * (1 + a + b + c), 4 * (1 + a - b - c), 4 * (1 - a + b - c))


_D2_FLAG = (
    "special case d = 2: no left neighbor exists; the right-doubleton "
    "skew formula applies with index 1 constants"
)
_D12_FLAG = (
    "special case d = 12: the four tracked prime powers 3, 4, 5, 8 include "
    "4 and 8 sharing the prime 2, so the covariance leaves the (a, b, c) "
    "pattern and the law is Monte Carlo only"
)


def limiting_law(d: int) -> LimitLaw:
    """The limiting law of the multiplicity of d, per the case analysis."""
    if d < 1:
        raise ValueError(f"order must be a positive integer, got {d!r}")
    i = ufo.find_ufo_index(d)
    if i is None:
        return LimitLaw(
            kind=LawKind.DEGENERATE_ZERO,
            center_coeff=Fraction(0),
            scale_squared=Fraction(0),
        )
    entry = ufo.ufo_sets(i)[i - 1]
    k = ufo.ufo_constants(i)
    if entry.is_doubleton:
        return LimitLaw(
            kind=LawKind.TRUNCATED_AT_ZERO,
            center_coeff=Fraction(0),
            scale_squared=k.sigma2,
            index=i,
        )
    case = ufo.classify(i)
    common = dict(center_coeff=k.mu, scale_squared=k.sigma2, index=i)
    if case is ufo.NeighborCase.ALL_SINGLETON:
        return LimitLaw(kind=LawKind.STANDARD_NORMAL, **common)
    if case is ufo.NeighborCase.DOUBLETON_LEFT:
        return LimitLaw(
            kind=LawKind.SKEW_NORMAL,
            skew_alpha_squared=_skew_alpha_squared_left(i),
            **common,
        )
    if case is ufo.NeighborCase.DOUBLETON_RIGHT or case is ufo.NeighborCase.SPECIAL_D2:
        return LimitLaw(
            kind=LawKind.SKEW_NORMAL,
            skew_alpha_squared=_skew_alpha_squared_right(i),
            flag=_D2_FLAG if case is ufo.NeighborCase.SPECIAL_D2 else "",
            **common,
        )
    if case is ufo.NeighborCase.DOUBLETON_BOTH:
        return LimitLaw(
            kind=LawKind.TRIPLE_MINUS_U,
            u_sigmas_squared=_u_sigmas_squared(i),
            prescale=4,
            **common,
        )
    # SPECIAL_D12: the singular d = 12 covariance
    return LimitLaw(kind=LawKind.SPECIAL12, flag=_D12_FLAG, **common)


def expectation_formula(d: int) -> ExpectationFormula:
    """Exact two-term expectation prediction for the multiplicity of d."""
    if d < 1:
        raise ValueError(f"order must be a positive integer, got {d!r}")
    i = ufo.find_ufo_index(d)
    if i is None:
        return ExpectationFormula(
            leading=Fraction(0), secondary_terms=(), case="Rare"
        )
    entry = ufo.ufo_sets(i)[i - 1]
    k = ufo.ufo_constants(i)
    if entry.is_doubleton:
        return ExpectationFormula(
            leading=k.mu,
            secondary_terms=((1, k.sigma2 / 2),),
            case="DoubletonSelf",
        )
    case = ufo.classify(i)
    if case is ufo.NeighborCase.ALL_SINGLETON:
        return ExpectationFormula(leading=k.mu, secondary_terms=(), case=case.value)
    if case is ufo.NeighborCase.DOUBLETON_LEFT:
        left = ufo.ufo_constants(i - 1)
        return ExpectationFormula(
            leading=k.mu,
            secondary_terms=((-1, left.sigma2 / 2),),
            case=case.value,
        )
    if case is ufo.NeighborCase.DOUBLETON_RIGHT or case is ufo.NeighborCase.SPECIAL_D2:
        right = ufo.ufo_constants(i + 1)
        return ExpectationFormula(
            leading=k.mu,
            secondary_terms=((-1, right.sigma2 / 2),),
            case=case.value,
        )
    # DOUBLETON_BOTH and SPECIAL_D12 share the two-sided secondary term
    left = ufo.ufo_constants(i - 1)
    right = ufo.ufo_constants(i + 1)
    return ExpectationFormula(
        leading=k.mu,
        secondary_terms=((-1, left.sigma2 / 2), (-1, right.sigma2 / 2)),
        case=case.value,
    )


def expected_count(d: int, n: float) -> float:
    """Predicted E(inv(m; d)) for m up to n: both terms, evaluated."""
    if n < 16:
        raise ValueError(f"sample bound must be at least 16, got {n!r}")
    return expectation_formula(d).evaluate(n)
