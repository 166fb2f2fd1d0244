"""Checks and monitored ratios for the conjecture catalog.

Each check takes plain integers from the run (term index, hit count, hit
value, ...) and returns a bool, or None when the statement does not apply at
that index. Monitored quantities return the float ratio for trend reporting.
Catalog ids ("2.10", "sun-18", ...) are the stable names used by the CLI and
the report files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from altprime.primes import pi_of

__all__ = [
    "CONJECTURES",
    "RkSolution",
    "SolverError",
    "check_conj_2_10",
    "check_conj_2_14",
    "check_conj_2_18",
    "check_cor_2_11",
    "check_cor_2_19_20",
    "check_sun_18",
    "cor_2_11_rhs",
    "lemma29_ratio",
    "pi_A_ratio",
    "pillai_ratio",
    "r_k_asymptote_ratio",
    "refined_growth_ratio",
    "rk_equation",
    "solve_Rk",
]


def pillai_ratio(n: int, a_n: int, p_n: int) -> float:
    """2*a_n / p_n; tends to 1."""
    if n < 1 or a_n < 1 or p_n < 2:
        raise ValueError(f"bad pillai_ratio args n={n} a_n={a_n} p_n={p_n}")
    return 2 * a_n / p_n


def refined_growth_ratio(n: int, big_a: int) -> float:
    """A_n over n(log n + log log n - 1)."""
    if n < 3:
        raise ValueError(f"refined_growth_ratio needs n >= 3, got {n}")
    ln = math.log(n)
    return big_a / (n * (ln + math.log(ln) - 1.0))


class SolverError(RuntimeError):
    """Root not bracketed for the R_k equation."""


@dataclass(frozen=True)
class RkSolution:
    k: int
    r: int
    R: float
    residual: float


def rk_equation(big_r: float, k: int) -> float:
    """(1/2) R^3 k log k (log k + log log k + 2 log R)."""
    if k < 3:
        raise ValueError(f"rk_equation needs k >= 3, got {k}")
    lk = math.log(k)
    return 0.5 * big_r**3 * k * lk * (lk + math.log(lk) + 2.0 * math.log(big_r))


def solve_Rk(
    k: int,
    r: int,
    lo: float = 0.5,
    hi: float = 4.0,
    tol: float = 1e-10,
) -> RkSolution:
    """Solve rk_equation(R, k) == r for R by bisection on [lo, hi].

    The left side is strictly increasing in R on the bracket, so plain
    bisection to |delta R| < tol is enough; no derivative games needed.
    """
    if k < 3:
        raise ValueError(f"solve_Rk needs k >= 3, got {k}")
    if r < 2:
        raise ValueError(f"solve_Rk needs r >= 2, got {r}")
    f_lo = rk_equation(lo, k) - r
    f_hi = rk_equation(hi, k) - r
    if f_lo > 0.0 or f_hi < 0.0:
        raise SolverError(
            f"R_k root not bracketed for k={k}, r={r}: "
            f"f({lo})={f_lo:.6g}, f({hi})={f_hi:.6g}"
        )
    a, b = lo, hi
    while b - a > tol:
        mid = 0.5 * (a + b)
        if rk_equation(mid, k) - r <= 0.0:
            a = mid
        else:
            b = mid
    big_r = 0.5 * (a + b)
    return RkSolution(k=k, r=r, R=big_r, residual=abs(rk_equation(big_r, k) - r))


def lemma29_ratio(k: int, m: int, r: int) -> float:
    """r sqrt(k log k) / (m sqrt(2m) log m)."""
    if k < 2:
        raise ValueError(f"lemma29_ratio needs k >= 2, got {k}")
    if m < 2:
        raise ValueError(f"lemma29_ratio needs m >= 2, got {m}")
    return r * math.sqrt(k * math.log(k)) / (m * math.sqrt(2.0 * m) * math.log(m))


def check_conj_2_10(k: int, m: int) -> bool:
    """floor(k log k) + 1 <= 2m for the k-th hit at index m."""
    if k < 1 or m < 1:
        raise ValueError(f"check_conj_2_10 needs k, m >= 1, got k={k} m={m}")
    return math.floor(k * math.log(k)) + 1 <= 2 * m


def cor_2_11_rhs(k: int) -> float:
    """(k/2) log k (log k + log log k), taken as 0 for k <= 2."""
    if k < 1:
        raise ValueError(f"cor_2_11_rhs needs k >= 1, got {k}")
    if k <= 2:
        return 0.0
    lk = math.log(k)
    return 0.5 * k * lk * (lk + math.log(lk))


def check_cor_2_11(k: int, r: int) -> bool:
    """r_k > (k/2) log k (log k + log log k)."""
    return r > cor_2_11_rhs(k)


def check_conj_2_14(k: int, m: int, r: int) -> bool | None:
    """lemma29_ratio > 1; asserted only for k >= 15234 (None below)."""
    if k < 15234:
        return None
    return lemma29_ratio(k, m, r) > 1.0


def check_conj_2_18(n: int, big_a: int, p_n: int) -> tuple[bool, bool, float]:
    """Envelope n log log n / 5 < A_n - p_n < n log log n / 4.

    Returns (lower_holds, upper_holds, C_n) with C_n = (A_n - p_n) / (n log log n).
    The lower bound is the asserted part at desk scale; the upper bound is
    only claimed far beyond it, so callers treat the second flag as a monitor.
    """
    if n < 3:
        raise ValueError(f"check_conj_2_18 needs n >= 3, got {n}")
    diff = big_a - p_n
    nlln = n * math.log(math.log(n))
    return (diff > nlln / 5.0, diff < nlln / 4.0, diff / nlln)


def check_cor_2_19_20(n: int, big_a: int, p_n: int) -> tuple[float, float, float]:
    """Returns (A_n/p_n - 1, log log n / (5 log n), log log n / (4 log n)).

    The ratio exceeding the first bound is the asserted statement; staying
    under the second is monitored.
    """
    if n < 3:
        raise ValueError(f"check_cor_2_19_20 needs n >= 3, got {n}")
    ln = math.log(n)
    lln = math.log(ln)
    return (big_a / p_n - 1.0, lln / (5.0 * ln), lln / (4.0 * ln))


def check_sun_18(
    a_prev: int, a_next: int, n: int, float_margin: float = 1e-9
) -> bool | None:
    """a_{n+1} < a_{n-1}^(1 + 2/(n+2)), asserted for n > 9 (None otherwise).

    Compared in floats first; when the relative margin is within float_margin
    the comparison escalates to the exact integer form
    a_{n+1}^(n+2) < a_{n-1}^(n+4).
    """
    if n <= 9:
        return None
    if a_prev < 2:
        raise ValueError(f"check_sun_18 needs a_prev >= 2, got {a_prev}")
    if a_next < 1:
        raise ValueError(f"check_sun_18 needs a_next >= 1, got {a_next}")
    rhs = math.exp((1.0 + 2.0 / (n + 2)) * math.log(a_prev))
    if abs(rhs - a_next) / rhs < float_margin:
        return a_next ** (n + 2) < a_prev ** (n + 4)
    return a_next < rhs


def r_k_asymptote_ratio(k: int, r: int) -> float:
    """r_k over k log^2 k / 2; tends to 1 if hits track the PNT density."""
    if k < 2:
        raise ValueError(f"r_k_asymptote_ratio needs k >= 2, got {k}")
    return r / (0.5 * k * math.log(k) ** 2)


def pi_A_ratio(n: int, big_a: int, **pi_kwargs) -> float:
    """pi(A_n) / n; tends to 1/2."""
    if n < 1:
        raise ValueError(f"pi_A_ratio needs n >= 1, got {n}")
    return pi_of(big_a, **pi_kwargs) / n


# Catalog: id -> (kind of result, one-line statement).
CONJECTURES: dict[str, tuple[str, str]] = {
    "2.2": ("monitor", "2 a_n / p_n tends to 1"),
    "2.3": ("monitor", "A_n ~ n (log n + log log n - 1)"),
    "2.5": ("monitor", "hit count k over PNT comparator per family"),
    "2.6": ("monitor", "r_k over k log^2 k / 2 tends to 1"),
    "2.7": ("monitor", "pi(A_n)/n tends to 1/2"),
    "2.10": ("check", "floor(k log k) + 1 <= 2m at every hit"),
    "2.11": ("check", "r_k > (k/2) log k (log k + log log k)"),
    "2.12": ("check", "R_k > 1 for every hit with k >= 3"),
    "2.13-sophie": ("monitor", "a_n and 2 a_n + 1 both prime infinitely often"),
    "2.13-twin": ("monitor", "a_n - 1 and a_n + 1 both prime infinitely often"),
    "2.14": ("check", "lemma29_ratio > 1 for k >= 15234"),
    "2.15": ("monitor", "shifted families 2d + A_n keep producing primes"),
    "2.16": ("monitor", "offset alternating sums keep producing primes"),
    "2.17": ("monitor", "hits equidistribute over coprime residue classes"),
    "2.18-20": ("check", "n log log n / 5 < A_n - p_n for 50 <= n"),
    "2.18-21": ("monitor", "A_n - p_n < n log log n / 4 (asserted only far out)"),
    "2.19": ("check", "A_n/p_n - 1 > log log n / (5 log n) for 50 <= n"),
    "2.20": ("monitor", "A_n/p_n - 1 < log log n / (4 log n) (far out)"),
    "2.21": ("monitor", "C_n range and drift over checkpoints"),
    "sun-18": ("check", "a_{n+1} < a_{n-1}^(1+2/(n+2)) for n > 9"),
}
