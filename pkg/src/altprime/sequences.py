"""Alternating prime sums.

Core recurrence a_n = p_n - a_{n-1} (a_0 = 0), so a_n is the absolute value of
the alternating sum over the first n primes. Derived families:

  A_n = a_{2n}                 (even subsequence; the alternating pair sums)
  T_n = A_n - 2
  shifted(d)_n = 2d + A_n
  offset(k)_n = sum_{i=1}^{2n+1} (-1)^(i-1) p_{i+k}
  abs_n = a_n
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from altprime.primes import PrimeStream, nth_prime_upper

__all__ = [
    "AltState",
    "KIND_A",
    "KIND_ABS",
    "KIND_T",
    "SequenceKind",
    "a_values",
    "abs_alt",
    "alt_block",
    "alt_states",
    "offset_kind",
    "offset_term",
    "parse_kind",
    "shifted_kind",
    "shifted_term",
    "step",
    "stream_terms",
    "term_A",
    "term_T",
]


@dataclass(frozen=True)
class SequenceKind:
    """Tag for one term family; param is the shift d or the offset k."""

    name: str
    param: int = 0

    def label(self) -> str:
        if self.name in ("shifted", "offset"):
            return f"{self.name}:{self.param}"
        return self.name

    def pair_indexed(self) -> bool:
        """True when terms are indexed by prime pairs (one term per two primes)."""
        return self.name != "abs"


KIND_A = SequenceKind("A")
KIND_T = SequenceKind("T")
KIND_ABS = SequenceKind("abs")


def shifted_kind(d: int) -> SequenceKind:
    if d < 0:
        raise ValueError(f"shift must be >= 0 (d = -1 is kind T), got {d}")
    return SequenceKind("shifted", d)


def offset_kind(k: int) -> SequenceKind:
    if k < 1:
        raise ValueError(f"offset must be >= 1, got {k}")
    return SequenceKind("offset", k)


def parse_kind(text: str) -> SequenceKind:
    """Parse 'A', 'T', 'abs', 'shifted:D' or 'offset:K'."""
    t = text.strip()
    plain = {"A": KIND_A, "T": KIND_T, "abs": KIND_ABS}
    if t in plain:
        return plain[t]
    name, sep, arg = t.partition(":")
    if sep and name in ("shifted", "offset"):
        try:
            param = int(arg)
        except ValueError:
            raise ValueError(f"bad kind parameter in {text!r}") from None
        return shifted_kind(param) if name == "shifted" else offset_kind(param)
    raise ValueError(f"unknown sequence kind {text!r}")


@dataclass(frozen=True)
class AltState:
    """Position in the a_n stream: index, a_n, and p_n."""

    n: int
    a: int
    p: int


def step(state: AltState, next_prime: int) -> AltState:
    """Advance one prime: a_{n+1} = p_{n+1} - a_n."""
    if next_prime <= state.p:
        raise ValueError(f"primes must increase: p_{state.n}={state.p}, next={next_prime}")
    a = next_prime - state.a
    if not 0 < a <= next_prime:
        raise ArithmeticError(f"recurrence out of range at n={state.n + 1}: a={a}")
    return AltState(n=state.n + 1, a=a, p=next_prime)


def alt_block(a_prev: int, start_index: int, primes_block: np.ndarray) -> np.ndarray:
    """Vector recurrence: a-values for primes p_{s+1}..p_{s+j} given a_s.

    Closed form: a_{s+j} = (-1)^j (sum_{i<=j} (-1)^i p_{s+i} + a_s).
    """
    j = np.arange(1, len(primes_block) + 1, dtype=np.int64)
    sg = np.where(j & 1, -1, 1).astype(np.int64)
    u = np.cumsum(sg * primes_block.astype(np.int64))
    a = sg * (u + a_prev)
    if len(a):
        if not (0 < a.min() and (a <= primes_block.astype(np.int64)).all()):
            raise ArithmeticError(f"recurrence out of range after n={start_index}")
        # a_n is even exactly when n is odd
        g = start_index + j
        if ((a & 1) == (g & 1)).any():
            raise ArithmeticError(f"parity broken after n={start_index}")
    return a


def alt_states(primes: Iterable[int]) -> Iterator[AltState]:
    """Yield AltState for n = 1, 2, ... over the given prime iterable."""
    state = AltState(n=0, a=0, p=1)
    for p in primes:
        state = step(state, int(p))
        yield state


def a_values(n_max: int, primes: PrimeStream | None = None) -> np.ndarray:
    """a_1..a_{n_max} as an int64 array."""
    if n_max < 1:
        return np.empty(0, dtype=np.int64)
    if primes is None:
        primes = PrimeStream(nth_prime_upper(n_max))
    out = []
    a_prev = 0
    n = 0
    for arr in primes.arrays():
        take = arr[: n_max - n]
        if not len(take):
            break
        block = alt_block(a_prev, n, take)
        out.append(block)
        a_prev = int(block[-1])
        n += len(take)
        if n >= n_max:
            break
    if n < n_max:
        raise ValueError(f"prime stream exhausted at n={n} < {n_max}")
    return np.concatenate(out)


def term_A(n: int, primes: PrimeStream | None = None) -> int:
    """A_n = a_{2n}."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return int(a_values(2 * n, primes)[-1])


def term_T(n: int, primes: PrimeStream | None = None) -> int:
    """T_n = A_n - 2."""
    return term_A(n, primes) - 2


def shifted_term(d: int, n: int, primes: PrimeStream | None = None) -> int:
    """2d + A_n."""
    if d < 0:
        raise ValueError(f"shift must be >= 0, got {d}")
    return 2 * d + term_A(n, primes)


def offset_term(k: int, n: int, primes: PrimeStream | None = None) -> int:
    """sum_{i=1}^{2n+1} (-1)^(i-1) p_{i+k}."""
    if k < 1 or n < 1:
        raise ValueError(f"need offset >= 1 and index >= 1, got k={k}, n={n}")
    for m, term in stream_terms(offset_kind(k), n, primes):
        if m == n:
            return term
    raise ValueError(f"prime stream exhausted before offset term {n}")


def abs_alt(n: int, primes: PrimeStream | None = None) -> int:
    """|sum_{i=1}^n (-1)^i p_i| = a_n."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return int(a_values(n, primes)[-1])


def stream_terms(
    kind: SequenceKind, n_max: int, primes: PrimeStream | None = None
) -> Iterator[tuple[int, int]]:
    """Yield (index, term) for the first n_max terms of the family."""
    if n_max < 1:
        return
    if kind.name == "offset":
        k = kind.param
        if primes is None:
            primes = PrimeStream(nth_prime_upper(2 * n_max + 1 + k))
        term = 0
        pending = []
        n = 0
        for i, p in primes.indexed():
            if i <= k:
                continue
            pending.append(p)
            j = i - k  # position within the offset window
            if j % 2 == 1 and j >= 3:
                term = term - pending[-2] + pending[-1] if n else sum(
                    s * q for s, q in zip((1, -1, 1), pending)
                )
                n += 1
                yield n, term
                pending = pending[-1:]
                if n >= n_max:
                    return
        raise ValueError(f"prime stream exhausted at offset term {n} < {n_max}")

    needed = 2 * n_max if kind.pair_indexed() else n_max
    if primes is None:
        primes = PrimeStream(nth_prime_upper(needed))
    if kind.name == "abs":
        for st in alt_states(primes):
            yield st.n, st.a
            if st.n >= n_max:
                return
        raise ValueError(f"prime stream exhausted before term {n_max}")
    delta = {"A": 0, "T": -2}.get(kind.name, 2 * kind.param)
    for st in alt_states(primes):
        if st.n % 2 == 0:
            yield st.n // 2, st.a + delta
            if st.n // 2 >= n_max:
                return
    raise ValueError(f"prime stream exhausted before term {n_max}")
