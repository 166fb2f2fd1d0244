"""Kernel backend facade.

Selects the compiled extension when available, falling back to the pure-python
kernels. Override with ALTPRIME_BACKEND=python|cython (default: auto).
Both backends are exact, so every caller sees identical results.
"""

import os

import numpy as np

from altprime import _pykernels


def _select():
    choice = os.environ.get("ALTPRIME_BACKEND", "auto").lower()
    if choice == "python":
        return _pykernels
    try:
        from altprime import _kernels
    except ImportError:
        if choice == "cython":
            raise ImportError(
                "ALTPRIME_BACKEND=cython but the compiled extension is not built"
            ) from None
        return _pykernels
    return _kernels


_impl = _select()
BACKEND = _impl.BACKEND_NAME


def is_prime_64(v):
    """Deterministic Miller-Rabin, exact for all 0 <= v < 2**64."""
    if v < 0:
        return False
    if v >> 64:
        raise OverflowError(f"value {v} exceeds 64 bits")
    return bool(_impl.is_prime_u64(int(v)))


def is_prime_batch(vals):
    """Vector version of is_prime_64 over an int64 array; returns a bool array."""
    vals = np.ascontiguousarray(vals, dtype=np.int64)
    out = np.zeros(len(vals), dtype=np.uint8)
    if len(vals):
        _impl.mr_batch(vals, out)
    return out.astype(bool)


def simple_sieve(limit):
    """All primes <= limit as a uint64 array (plain sieve; used for base primes)."""
    if limit < 2:
        return np.empty(0, dtype=np.uint64)
    comp = np.zeros(limit + 1, dtype=bool)
    comp[:2] = True
    for p in range(2, int(limit**0.5) + 1):
        if not comp[p]:
            comp[p * p :: p] = True
    return np.flatnonzero(~comp).astype(np.uint64)


def sieve_segment(lo, hi, base_primes):
    """Primes in [lo, hi) as a uint64 array, given odd base primes to sqrt(hi).

    lo must be odd and >= 3; the caller prepends 2 itself.
    """
    if lo % 2 == 0 or lo < 3:
        raise ValueError("segment start must be odd and >= 3")
    if hi <= lo:
        return np.empty(0, dtype=np.uint64)
    n_odd = (hi - lo + 1) // 2
    flags = np.zeros(n_odd, dtype=np.uint8)
    _impl.mark_composites(int(lo), flags, np.ascontiguousarray(base_primes, dtype=np.uint64))
    return (lo + 2 * np.flatnonzero(flags == 0)).astype(np.uint64)
