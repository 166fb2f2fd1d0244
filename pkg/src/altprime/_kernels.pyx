# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels: odd-wheel composite marking and deterministic 64-bit Miller-Rabin."""

ctypedef unsigned long long u64
ctypedef unsigned char u8
ctypedef long long i64

cdef extern from *:
    ctypedef unsigned long long u128 "__uint128_t"

BACKEND_NAME = "cython"

# deterministic witness tiers: (2, 7, 61) covers v < 4_759_123_141 (Jaeschke),
# the 12-prime set covers all 64-bit integers
cdef u64[3] _BASES_SMALL
cdef u64[12] _BASES_FULL
_BASES_SMALL[:] = [2, 7, 61]
_BASES_FULL[:] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]

cdef u64[12] _TRIAL
_TRIAL[:] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


cdef inline u64 _mulmod(u64 a, u64 b, u64 m) nogil:
    return <u64>((<u128>a * b) % m)


cdef inline u64 _powmod(u64 b, u64 e, u64 m) nogil:
    cdef u64 r = 1
    b %= m
    while e:
        if e & 1:
            r = _mulmod(r, b, m)
        b = _mulmod(b, b, m)
        e >>= 1
    return r


cdef inline bint _mr_round(u64 v, u64 d, int s, u64 base) nogil:
    cdef u64 x = _powmod(base, d, v)
    cdef int i
    if x == 1 or x == v - 1:
        return 1
    for i in range(s - 1):
        x = _mulmod(x, x, v)
        if x == v - 1:
            return 1
    return 0


cdef bint _is_prime(u64 v) nogil:
    cdef u64 d, p, b
    cdef int s, i, nb
    if v < 2:
        return 0
    for i in range(12):
        p = _TRIAL[i]
        if v % p == 0:
            return v == p
    if v < 41 * 41:
        return 1
    d = v - 1
    s = 0
    while d % 2 == 0:
        d >>= 1
        s += 1
    if v < 4759123141ULL:
        nb = 3
    else:
        nb = 12
    for i in range(nb):
        b = _BASES_SMALL[i] if nb == 3 else _BASES_FULL[i]
        if b % v == 0:  # witness divides v (v = 61): skip, decided by other bases
            continue
        if not _mr_round(v, d, s, b):
            return 0
    return 1


def is_prime_u64(v):
    """Exact primality for 0 <= v < 2**64."""
    return bool(_is_prime(<u64>v))


def mr_batch(i64[::1] vals, u8[::1] out):
    """out[i] = 1 iff vals[i] is prime (negatives and 0/1 are composite)."""
    cdef Py_ssize_t i, n = vals.shape[0]
    with nogil:
        for i in range(n):
            out[i] = _is_prime(<u64>vals[i]) if vals[i] >= 2 else 0


def mark_composites(u64 lo, u8[::1] flags, u64[::1] base_primes):
    """Mark odd composites: flags[i] covers value lo + 2*i, lo odd and >= 3.

    base_primes must hold the odd primes up to sqrt(lo + 2*len(flags)).
    """
    cdef Py_ssize_t n = flags.shape[0]
    cdef Py_ssize_t nb = base_primes.shape[0]
    cdef u64 hi = lo + 2 * <u64>n
    cdef u64 p, start
    cdef Py_ssize_t j, idx
    with nogil:
        for j in range(nb):
            p = base_primes[j]
            if p * p >= hi:
                break
            start = p * p
            if start < lo:
                start = lo + (p - lo % p) % p
                if start % 2 == 0:
                    start += p
            idx = <Py_ssize_t>((start - lo) >> 1)
            while idx < n:
                flags[idx] = 1
                idx += <Py_ssize_t>p
