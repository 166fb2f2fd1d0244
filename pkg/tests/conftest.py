import math

import numpy as np
import pytest

# Big enough that the table holds the first 10^4 primes (p_10000 = 104729).
TABLE_LIMIT = 105_000


def trial_division_primes(limit: int) -> list[int]:
    """Dumb but independent prime list for oracle comparisons."""
    out = []
    for v in range(2, limit + 1):
        if all(v % q for q in range(2, int(math.isqrt(v)) + 1)):
            out.append(v)
    return out


def is_prime_slow(v: int) -> bool:
    if v < 2:
        return False
    return all(v % q for q in range(2, int(math.isqrt(v)) + 1))


@pytest.fixture(scope="session")
def prime_table() -> np.ndarray:
    """Primes up to TABLE_LIMIT from an independent sieve (not the code under test)."""
    flags = np.ones(TABLE_LIMIT + 1, dtype=bool)
    flags[:2] = False
    for q in range(2, int(math.isqrt(TABLE_LIMIT)) + 1):
        if flags[q]:
            flags[q * q :: q] = False
    return np.flatnonzero(flags).astype(np.int64)


@pytest.fixture(scope="session")
def a_oracle(prime_table) -> np.ndarray:
    """a_n for n = 1..len(prime_table), by direct alternating summation."""
    signs = np.where(np.arange(len(prime_table)) % 2 == 0, 1, -1)
    acc = np.cumsum(signs * prime_table)
    return np.abs(acc)
