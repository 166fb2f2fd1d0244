"""Prime generation and prime-side estimates.

Segmented odd-only sieve behind a streaming facade, exact 64-bit primality,
classic n-th prime bounds, and prime-gap sums with the quadratic gap estimate.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from altprime.kernels import BACKEND, is_prime_64, is_prime_batch, sieve_segment, simple_sieve

__all__ = [
    "BACKEND",
    "DEFAULT_SEGMENT_SIZE",
    "DEFAULT_SIEVE_BUDGET",
    "PrimeBounds",
    "PrimeStream",
    "ResourceBudgetError",
    "cipolla_approx",
    "gap_sum",
    "is_prime_64",
    "is_prime_batch",
    "nth_prime_bounds",
    "nth_prime_upper",
    "pi_of",
    "primes_up_to",
    "wolf_estimate",
]

DEFAULT_SEGMENT_SIZE = 1 << 22
DEFAULT_SIEVE_BUDGET = 1 << 34


class ResourceBudgetError(RuntimeError):
    """Raised when a sieve request exceeds the configured budget."""


@dataclass(frozen=True)
class PrimeBounds:
    """n log n < p_n < n (log n + log log n); the upper bound is valid for n >= 6."""

    n: int
    lower: float
    upper: float


def nth_prime_bounds(n: int) -> PrimeBounds:
    if n < 1:
        raise ValueError(f"prime index must be >= 1, got {n}")
    log_n = math.log(n)
    lower = n * log_n
    upper = n * (log_n + math.log(log_n)) if n >= 2 else math.nan
    return PrimeBounds(n=n, lower=lower, upper=upper)


def nth_prime_upper(n: int) -> int:
    """Integer upper bound for p_n, safe for any n >= 1."""
    if n < 6:
        return 14  # p_5 = 11, p_6 = 13
    return math.ceil(n * (math.log(n) + math.log(math.log(n))))


class PrimeStream:
    """All primes in [start, limit], in order (start defaults to 2).

    Segments are sieved independently (optionally by a worker pool) and
    re-serialized in index order, so output never depends on worker count.
    """

    def __init__(
        self,
        limit: int,
        *,
        start: int = 2,
        segment_size: int = DEFAULT_SEGMENT_SIZE,
        workers: int = 1,
        budget: int = DEFAULT_SIEVE_BUDGET,
    ):
        if limit < 0:
            raise ValueError(f"limit must be >= 0, got {limit}")
        if limit > budget:
            raise ResourceBudgetError(
                f"sieve limit {limit} exceeds configured budget {budget}"
            )
        if segment_size < 2 or segment_size % 2:
            raise ValueError(f"segment_size must be even and >= 2, got {segment_size}")
        self.limit = int(limit)
        self.start = max(2, int(start))
        self.segment_size = int(segment_size)
        self.workers = max(1, int(workers))
        self._base = simple_sieve(math.isqrt(limit))[1:]  # odd base primes

    def _ranges(self):
        lo = max(3, self.start | 1)
        while lo <= self.limit:
            hi = min(lo + self.segment_size, self.limit + 1)
            yield lo, hi
            lo = hi if hi % 2 else hi + 1

    def arrays(self) -> Iterator[np.ndarray]:
        """Yield primes as consecutive uint64 arrays (2 rides in the first one)."""
        want_two = self.start <= 2 <= self.limit
        first = np.array([2], dtype=np.uint64) if want_two else np.empty(0, np.uint64)
        if self.limit < 3:
            if len(first):
                yield first
            return
        if self.workers == 1:
            for lo, hi in self._ranges():
                seg = sieve_segment(lo, hi, self._base)
                if len(first):
                    seg = np.concatenate([first, seg])
                    first = np.empty(0, np.uint64)
                yield seg
            return
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            pending: deque = deque()
            ranges = self._ranges()
            depth = self.workers * 2

            def submit_next():
                try:
                    lo, hi = next(ranges)
                except StopIteration:
                    return
                pending.append(pool.submit(sieve_segment, lo, hi, self._base))

            for _ in range(depth):
                submit_next()
            while pending:
                seg = pending.popleft().result()
                submit_next()
                if len(first):
                    seg = np.concatenate([first, seg])
                    first = np.empty(0, np.uint64)
                yield seg

    def __iter__(self) -> Iterator[int]:
        for arr in self.arrays():
            yield from arr.tolist()

    def indexed(self) -> Iterator[tuple[int, int]]:
        """Yield (i, p_i) with 1-based i."""
        i = 0
        for arr in self.arrays():
            for p in arr.tolist():
                i += 1
                yield i, p


def primes_up_to(x: int, **kwargs) -> PrimeStream:
    """Streaming view of all primes <= x."""
    return PrimeStream(x, **kwargs)


def pi_of(x: int, **kwargs) -> int:
    """Prime counting function via the segmented stream; no tables stored."""
    if x < 2:
        return 0
    return sum(len(arr) for arr in PrimeStream(x, **kwargs).arrays())


def pi_of_many(values, **kwargs) -> list[int]:
    """pi(x) for several thresholds in one sieve pass."""
    vals = sorted(int(v) for v in values)
    if not vals:
        return []
    counts = {}
    seen = 0
    pending = deque(vals)
    for arr in PrimeStream(max(vals), **kwargs).arrays():
        while pending and pending[0] < (arr[0] if len(arr) else 0):
            counts[pending.popleft()] = seen
        if not len(arr):
            continue
        while pending and pending[0] <= arr[-1]:
            v = pending.popleft()
            counts[v] = seen + int(np.searchsorted(arr, v, side="right"))
        seen += len(arr)
    while pending:
        counts[pending.popleft()] = seen
    return [counts[int(v)] for v in values]


def cipolla_approx(k: int) -> float:
    """k (log k + log log k - 1), the classic p_k approximation; needs k >= 3."""
    if k < 3:
        raise ValueError(f"cipolla_approx needs k >= 3, got {k}")
    log_k = math.log(k)
    return k * (log_k + math.log(log_k) - 1.0)


def gap_sum(x: int, d: int, **kwargs) -> int:
    """Sum of prime gaps p_i - p_{i-1} >= d over primes p_i < x."""
    if x < 3:
        raise ValueError(f"gap_sum needs x >= 3, got {x}")
    if d < 2:
        raise ValueError(f"gap threshold must be >= 2, got {d}")
    total = 0
    prev = None
    for arr in PrimeStream(x - 1, **kwargs).arrays():
        if not len(arr):
            continue
        if prev is not None:
            g = int(arr[0]) - prev
            if g >= d:
                total += g
        gaps = np.diff(arr.astype(np.int64))
        total += int(gaps[gaps >= d].sum())
        prev = int(arr[-1])
    return total


def wolf_estimate(x: float, d: int) -> float:
    """x + d(d-1)/2 * x / log^2 x, companion estimate for gap_sum."""
    if x <= 1:
        raise ValueError(f"wolf_estimate needs x > 1, got {x}")
    return x + d * (d - 1) / 2 * x / math.log(x) ** 2
