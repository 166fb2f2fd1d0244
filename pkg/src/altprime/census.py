"""Prime census over term streams: restricted prime counting, residue classes,
and the special-form counters (Sophie Germain / twin-neighbor hits)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from altprime.kernels import is_prime_64
from altprime.primes import PrimeStream, nth_prime_upper
from altprime.sequences import KIND_A, SequenceKind, a_values, stream_terms

__all__ = [
    "CensusRecord",
    "DirichletCensus",
    "SpecialCounts",
    "census_step",
    "dirichlet_census",
    "ratio_proxy",
    "restricted_pi",
    "rpnt_ratio",
    "run_census",
    "special_prime_counts",
]

DEFAULT_HIT_CAP = 10**7


@dataclass
class CensusRecord:
    """Running census of prime values in a term stream.

    k counts hits; last_hit is (k, m, r) for the latest one; hits logs every
    hit up to hit_cap (the count keeps going after the log fills up).
    """

    n: int = 0
    k: int = 0
    last_hit: tuple[int, int, int] | None = None
    hits: list[tuple[int, int, int]] = field(default_factory=list)
    hit_cap: int = DEFAULT_HIT_CAP
    hits_truncated: bool = False


def census_step(record: CensusRecord, term: int, m: int) -> CensusRecord:
    """Account one term (updates record in place and returns it)."""
    record.n = m
    if term >= 2 and is_prime_64(term):
        record.k += 1
        record.last_hit = (record.k, m, term)
        if len(record.hits) < record.hit_cap:
            record.hits.append(record.last_hit)
        else:
            record.hits_truncated = True
    return record


def run_census(kind: SequenceKind, n: int, primes: PrimeStream | None = None) -> CensusRecord:
    """Census the first n terms of a family."""
    if n < 0:
        raise ValueError(f"term count must be >= 0, got {n}")
    record = CensusRecord()
    for m, term in stream_terms(kind, n, primes):
        census_step(record, term, m)
    return record


def restricted_pi(kind: SequenceKind, n: int, primes: PrimeStream | None = None) -> int:
    """Number of prime terms among the first n terms of the family."""
    return run_census(kind, n, primes).k


def rpnt_ratio(k: int, n: int, kind: SequenceKind = KIND_A) -> float:
    """Hit count over its prime-number-theorem comparator.

    Pair-indexed families consume two primes per term, so the comparator is
    2n/log n; for the abs family it is n/log n.
    """
    if n < 3:
        raise ValueError(f"rpnt_ratio needs n >= 3, got {n}")
    if k < 0:
        raise ValueError(f"hit count must be >= 0, got {k}")
    denom = 2 * n if kind.pair_indexed() else n
    return k * math.log(n) / denom


def ratio_proxy(k: int, m: int) -> float:
    """k log m / (2m) with m the index of the latest hit."""
    if m < 2:
        raise ValueError(f"ratio_proxy needs m >= 2, got {m}")
    if k < 0:
        raise ValueError(f"hit count must be >= 0, got {k}")
    return k * math.log(m) / (2 * m)


@dataclass(frozen=True)
class DirichletCensus:
    """Hit counts by residue class r mod d (classes coprime to d only).

    Hits sharing a factor with d land in shared_count, so
    sum(class_counts.values()) + shared_count == k.
    """

    modulus: int
    n: int
    class_counts: dict[int, int]
    shared_count: int

    @property
    def k(self) -> int:
        return sum(self.class_counts.values()) + self.shared_count


def dirichlet_census(
    kind: SequenceKind, n: int, d: int, primes: PrimeStream | None = None
) -> DirichletCensus:
    """Classify the prime hits among the first n terms by residue mod d."""
    if d < 2:
        raise ValueError(f"modulus must be >= 2, got {d}")
    record = run_census(kind, n, primes)
    classes: dict[int, int] = {}
    shared = 0
    for _, _, r in record.hits:
        if math.gcd(r, d) == 1:
            res = r % d
            classes[res] = classes.get(res, 0) + 1
        else:
            shared += 1
    return DirichletCensus(modulus=d, n=n, class_counts=classes, shared_count=shared)


@dataclass(frozen=True)
class SpecialCounts:
    """Counts over a_1..a_n: a_i and 2a_i+1 both prime; a_i-1 and a_i+1 both prime."""

    n: int
    sophie_germain: int
    twin_neighbor: int


def special_prime_counts(n: int, primes: PrimeStream | None = None) -> SpecialCounts:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if primes is None:
        primes = PrimeStream(nth_prime_upper(n))
    sg = 0
    twin = 0
    for v in a_values(n, primes).tolist():
        if is_prime_64(v) and is_prime_64(2 * v + 1):
            sg += 1
        if is_prime_64(v - 1) and is_prime_64(v + 1):
            twin += 1
    return SpecialCounts(n=n, sophie_germain=sg, twin_neighbor=twin)
