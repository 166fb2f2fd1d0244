"""Pure-python kernel fallback. Same contract as the compiled module, numpy for the sieve."""

import numpy as np

BACKEND_NAME = "python"

_TRIAL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_BASES_SMALL = (2, 7, 61)
_BASES_FULL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime_u64(v):
    """Exact primality for 0 <= v < 2**64."""
    if v < 2:
        return False
    for p in _TRIAL:
        if v % p == 0:
            return v == p
    if v < 41 * 41:
        return True
    d = v - 1
    s = 0
    while d % 2 == 0:
        d >>= 1
        s += 1
    bases = _BASES_SMALL if v < 4759123141 else _BASES_FULL
    for b in bases:
        if b % v == 0:  # witness divides v (v = 61): skip, decided by other bases
            continue
        x = pow(b, d, v)
        if x == 1 or x == v - 1:
            continue
        for _ in range(s - 1):
            x = x * x % v
            if x == v - 1:
                break
        else:
            return False
    return True


def mr_batch(vals, out):
    """out[i] = 1 iff vals[i] is prime (negatives and 0/1 are composite)."""
    isp = is_prime_u64
    for i, v in enumerate(vals.tolist()):
        out[i] = 1 if v >= 2 and isp(v) else 0


def mark_composites(lo, flags, base_primes):
    """Mark odd composites: flags[i] covers value lo + 2*i, lo odd and >= 3."""
    n = len(flags)
    hi = lo + 2 * n
    view = np.asarray(flags)
    for p in np.asarray(base_primes).tolist():
        if p * p >= hi:
            break
        start = p * p
        if start < lo:
            start = lo + (p - lo % p) % p
            if start % 2 == 0:
                start += p
        view[(start - lo) >> 1 :: p] = 1
