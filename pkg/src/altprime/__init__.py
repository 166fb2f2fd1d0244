"""Primes in alternating sums of consecutive primes: sequences, censuses,
conjecture checks, and a streaming verification harness."""

__version__ = "0.1.0"

from altprime.kernels import BACKEND, is_prime_64, is_prime_batch
from altprime.primes import (
    PrimeStream,
    ResourceBudgetError,
    gap_sum,
    nth_prime_bounds,
    pi_of,
    primes_up_to,
    wolf_estimate,
)
from altprime.sequences import (
    KIND_A,
    KIND_ABS,
    KIND_T,
    SequenceKind,
    a_values,
    abs_alt,
    offset_kind,
    offset_term,
    parse_kind,
    shifted_kind,
    shifted_term,
    stream_terms,
    term_A,
    term_T,
)
from altprime.census import (
    dirichlet_census,
    ratio_proxy,
    restricted_pi,
    rpnt_ratio,
    special_prime_counts,
)
from altprime.conjectures import (
    CONJECTURES,
    SolverError,
    lemma29_ratio,
    pillai_ratio,
    solve_Rk,
)
from altprime.driver import RunConfig, RunConfigError, RunResult, run

__all__ = [
    "BACKEND",
    "CONJECTURES",
    "KIND_A",
    "KIND_ABS",
    "KIND_T",
    "PrimeStream",
    "ResourceBudgetError",
    "RunConfig",
    "RunConfigError",
    "RunResult",
    "SequenceKind",
    "SolverError",
    "__version__",
    "a_values",
    "abs_alt",
    "dirichlet_census",
    "gap_sum",
    "is_prime_64",
    "is_prime_batch",
    "lemma29_ratio",
    "nth_prime_bounds",
    "offset_kind",
    "offset_term",
    "parse_kind",
    "pi_of",
    "pillai_ratio",
    "primes_up_to",
    "ratio_proxy",
    "restricted_pi",
    "rpnt_ratio",
    "run",
    "shifted_kind",
    "shifted_term",
    "solve_Rk",
    "special_prime_counts",
    "stream_terms",
    "term_A",
    "term_T",
    "wolf_estimate",
]
