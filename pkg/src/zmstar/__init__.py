"""zmstar: invariant factors of the unit groups (Z/mZ)^x.

Exact decomposition of (Z/mZ)^x into invariant factors, censuses of
invariant-factor counts over m <= N, and the limiting distributions
(normal, skew-normal, and min/max-of-Gaussians laws) those counts obey.

Modules
-------
arith      integer substrate: factorization, totients, prime-power tables
multgroup  per-m group structure, prm/pri counts, inv(m;d), msg(m;G)
ufo        totient-ordered prime powers, universal factor orders, constants
sieve      segmented censuses of inv(m;d) over all m <= N
dist       the limit-law distribution engine (Owen T, skew normal, min/max)
theory     per-order predictions: expectation formulas and limit laws
cli        command-line interface (`zmstar ...` or `python -m zmstar.cli`)
"""

from .arith import (
    PrimePower,
    carmichael_lambda,
    classical_counts,
    euler_phi,
    factorize,
    factorize_spf,
    lcm_all,
    prime_powers_with_totient_at_most,
    primes_upto,
    spf_table,
)
from .dist import (
    EmpiricalCdf,
    half_normal_cdf,
    mvn_min_sampler,
    norm_cdf,
    owen_t,
    skew_normal_cdf,
)
from .multgroup import (
    AbelianGroupSpec,
    GroupStructure,
    elementary_divisors,
    inv_count,
    inv_total,
    invariant_factors,
    msg_multiplicity,
    prm_count,
)
from .sieve import (
    CensusTable,
    empirical_stats,
    read_census_dir,
    run_census,
    write_census_dir,
)
from .theory import ExpectationFormula, LawKind, LimitLaw, expectation_formula, limiting_law
from .ufo import (
    NeighborCase,
    UfoConstants,
    classify,
    find_ufo_index,
    structural_audit,
    ufo_constants,
    ufo_sets,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupSpec",
    "CensusTable",
    "EmpiricalCdf",
    "ExpectationFormula",
    "GroupStructure",
    "LawKind",
    "LimitLaw",
    "NeighborCase",
    "PrimePower",
    "UfoConstants",
    "carmichael_lambda",
    "classical_counts",
    "classify",
    "elementary_divisors",
    "empirical_stats",
    "euler_phi",
    "expectation_formula",
    "factorize",
    "factorize_spf",
    "find_ufo_index",
    "half_normal_cdf",
    "inv_count",
    "inv_total",
    "invariant_factors",
    "lcm_all",
    "limiting_law",
    "msg_multiplicity",
    "mvn_min_sampler",
    "norm_cdf",
    "owen_t",
    "prime_powers_with_totient_at_most",
    "primes_upto",
    "prm_count",
    "read_census_dir",
    "run_census",
    "skew_normal_cdf",
    "spf_table",
    "structural_audit",
    "ufo_constants",
    "ufo_sets",
    "write_census_dir",
    "__version__",
]
