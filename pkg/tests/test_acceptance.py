"""Shipping gate for the verification engine.

Eight criteria, one test each, one PASS/FAIL line each.  The criteria pin the
published reference table at desk scale (n <= 10^6, plus the 10^7 row), the
derived-column tolerances, oracle equivalence for the restricted counting
function, the Pillai convergence milestones, the inequality suites, the R_k
solver, and determinism across workers and save/resume.  Criterion 8 records
what is deliberately out of scope.

Known red: the derived column k*log(m)/(2m) at n = 10^6 evaluates to
0.8941932 while the reference prints 0.89412 -- a gap of 7.3e-5 against the
2e-5 tolerance.  Criterion 2 asserts the stated tolerance anyway and fails
with the witness rather than papering over the discrepancy.
"""

import math
import random

import numpy as np
import pytest

from altprime.census import restricted_pi
from altprime.conjectures import rk_equation, solve_Rk
from altprime.driver import RunConfig, run
from altprime.kernels import is_prime_64
from altprime.reports import render_csv
from altprime.sequences import KIND_A, KIND_ABS, KIND_T

# Reference table, transcribed digits (n: k, r_k, n-m, R_k, A/(n log n),
# C_n, k log m/(2m), r_k sqrt(k log k)/(m sqrt(2m) log m)).
PRINTED = {
    10: (6, 29, 1, "1.24290", "1.43317", "0.47960", "0.73241", "1.03381"),
    10**2: (33, 563, 4, "1.23573", "1.29637", "0.36670", "0.78450", "1.00799"),
    10**3: (254, 8807, 1, "1.23573", "1.27523", "0.46051", "0.87804", "0.95632"),
    10**4: (1982, 113557, 4, "1.15094", "1.23334", "0.39931", "0.91307", "0.92720"),
    10**5: (15234, 1379813, 8, "1.15567", "1.19862", "0.32845", "0.87700", "1.02665"),
    10**6: (129447, 16230881, 6, "1.13701", "1.17484", "0.28379", "0.89412", "1.02546"),
}
TEN_MILLION = (1116732, 186806173, 11)


def announce(num, ok, detail):
    print(f"[criterion {num}] {'PASS' if ok else 'FAIL'}: {detail}")


@pytest.fixture(scope="session")
def desk_run():
    """The standard desk-scale run every milestone criterion reads from."""
    return run(RunConfig(
        n_max=10**6,
        kinds=(KIND_A, KIND_T, KIND_ABS),
        shifts=(1, 2, 3),
        offsets=(1, 2),
        moduli=(3, 4),
        workers=4,
    ))


@pytest.fixture(scope="session")
def ten_million_run():
    return run(RunConfig(n_max=10**7, kinds=(KIND_A,), track_specials=False, workers=4))


def rows_by_n(result):
    return {row.n: row for row in result.rows}


def test_criterion_1_census_milestones_exact(desk_run, ten_million_run):
    rows = rows_by_n(desk_run)
    bad = []
    for n, printed in PRINTED.items():
        row = rows[n]
        got = (row.k, int(row.r_k), row.n_minus_m)
        if got != printed[:3]:
            bad.append(f"n={n}: (k, r_k, n-m)={got}, expected {printed[:3]}")
    big = rows_by_n(ten_million_run)[10**7]
    got_big = (big.k, int(big.r_k), big.n_minus_m)
    if got_big != TEN_MILLION:
        bad.append(f"n=10^7: {got_big}, expected {TEN_MILLION}")
    if desk_run.elapsed_s >= 60.0:
        bad.append(f"n_max=10^6 took {desk_run.elapsed_s:.1f}s (budget 60s)")
    if ten_million_run.elapsed_s >= 900.0:
        bad.append(f"n_max=10^7 took {ten_million_run.elapsed_s:.1f}s (budget 900s)")
    ok = not bad
    announce(1, ok, f"k/r_k/(n-m) exact at 7 milestones; 10^6 in "
                    f"{desk_run.elapsed_s:.1f}s, 10^7 in {ten_million_run.elapsed_s:.1f}s"
             if ok else "; ".join(bad))
    assert ok, bad


def test_criterion_2_derived_columns_within_tolerance(desk_run):
    rows = rows_by_n(desk_run)
    bad = []

    def check(n, label, got, printed, tol):
        want = float(printed)
        if got is None or abs(got - want) > tol:
            bad.append(f"n={n} {label}: computed {got:.7f}, printed {printed}, "
                       f"|diff|={abs(got - want):.1e} > {tol:.0e}")

    for n, printed in PRINTED.items():
        row = rows[n]
        if n != 10**3:
            check(n, "R_k", row.R_k, printed[3], 2e-5)
        check(n, "A/(n log n)", row.A_over_nlogn, printed[4], 2e-5)
        check(n, "C_n", row.C_n, printed[5], 2e-5)
        check(n, "k log m/(2m)", row.k_logm_over_2m, printed[6], 2e-5)
        if n >= 10**5:
            check(n, "lemma-2.9 ratio", row.lemma29_ratio, printed[7], 2e-4)
    # The n=10^3 reference cell repeats the n=10^2 value verbatim; our solver's
    # own root for (k=254, r=8807) is recorded instead of asserted against it.
    if abs(rows[10**3].R_k - 1.1820125) > 1e-5:
        bad.append(f"n=10^3 solver R_k drifted: {rows[10**3].R_k:.7f} != 1.1820125")
    ok = not bad
    announce(2, ok, "columns 4-8 within stated tolerances at all asserted cells"
             if ok else "; ".join(bad))
    assert ok, bad


def test_criterion_3_restricted_pi_matches_brute_force():
    n = 10**4
    # Independent oracle: fresh numpy sieve, direct alternating summation,
    # trial-division primality.  No shared code with the package kernels.
    limit = 230_000  # > p_{2n} = 224737
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for q in range(2, int(limit**0.5) + 1):
        if flags[q]:
            flags[q * q:: q] = False
    primes = np.flatnonzero(flags)[: 2 * n].astype(np.int64)

    def is_prime_slow(v):
        if v < 2:
            return False
        d = 2
        while d * d <= v:
            if v % d == 0:
                return False
            d += 1
        return True

    signs = np.where(np.arange(1, 2 * n + 1) % 2 == 1, 1, -1)
    a = np.abs(np.cumsum(signs * primes))  # |a_i|, i = 1..2n
    big_a = a[1::2]  # A_1..A_n

    want = {
        KIND_A: sum(is_prime_slow(int(v)) for v in big_a),
        KIND_T: sum(is_prime_slow(int(v) - 2) for v in big_a),
        KIND_ABS: sum(is_prime_slow(int(v)) for v in a[:n]),  # per-term index
    }
    got = {kind: restricted_pi(kind, n) for kind in want}
    ok = got == want
    announce(3, ok, f"restricted_pi == trial-division recount at n={n}: "
                    f"A={got[KIND_A]}, T={got[KIND_T]}, Abs={got[KIND_ABS]}"
             if ok else f"mismatch: got {got}, recount {want}")
    assert ok, (got, want)


def test_criterion_4_pillai_convergence(desk_run):
    series = dict(next(m for m in desk_run.monitors if m.name == "pillai").points)
    near = abs(series[10**4] - 1.0)   # index k = 2*10^4 of the sum
    far = abs(series[10**6] - 1.0)    # index k = 2*10^6
    ok = far < 0.01 and far < near
    announce(4, ok, f"|2A_n/p_2n - 1| = {far:.7f} at k=2e6 (< 0.01), "
                    f"down from {near:.7f} at k=2e4")
    assert ok, (near, far)


def test_criterion_5_inequality_suites(desk_run):
    reports = {r.conjecture_id: r for r in desk_run.reports}
    bad = []
    for cid in ("2.10", "2.11", "2.14", "2.18-20", "sun-18"):
        rep = reports[cid]
        if rep.status != "holds":
            bad.append(f"{cid}: {rep.status} witness={rep.details.get('witness')}")
    ok = not bad
    announce(5, ok, "2.10, 2.11, 2.14, 2.18 lower bound, and Sun's inequality "
                    "hold over their full asserted ranges"
             if ok else "; ".join(bad))
    assert ok, bad


def test_criterion_6_solver_round_trip():
    bad = []
    for k, r, printed in ((6, 29, 1.24290), (1982, 113557, 1.15094), (129447, 16230881, 1.13701)):
        sol = solve_Rk(k, r)
        if abs(sol.R - printed) > 1e-5:
            bad.append(f"solve_Rk({k},{r}) = {sol.R:.6f}, printed {printed}")
    rng = random.Random(20260814)
    worst = 0.0
    cases = 0
    while cases < 1000:
        k = rng.randrange(3, 10**7)
        r = round(rk_equation(rng.uniform(0.8, 3.5), k))
        if r < 2 or rk_equation(4.0, k) < r:
            continue
        sol = solve_Rk(k, r)
        worst = max(worst, sol.residual / r)
        cases += 1
    if worst >= 1e-9:
        bad.append(f"round-trip relative residual {worst:.2e} >= 1e-9")
    ok = not bad
    announce(6, ok, f"three table roots within 1e-5; {cases} random round-trips, "
                    f"worst relative residual {worst:.1e}"
             if ok else "; ".join(bad))
    assert ok, bad


def test_criterion_7_determinism_and_resume(tmp_path_factory):
    base = tmp_path_factory.mktemp("determinism")
    kw = dict(n_max=2 * 10**5, kinds=(KIND_A, KIND_T, KIND_ABS), moduli=(3, 4))
    csvs = {w: render_csv(run(RunConfig(workers=w, **kw)).rows) for w in (1, 4, 8)}
    bad = []
    if not (csvs[1] == csvs[4] == csvs[8]):
        bad.append("CSV differs across worker counts {1, 4, 8}")
    split, cold = base / "split", base / "cold"
    first = run(RunConfig(out_dir=split, stop_after=10**5, **kw))
    assert first.stopped_early
    run(RunConfig(out_dir=split, resume_from=split / "checkpoint.json", **kw))
    run(RunConfig(out_dir=cold, **kw))
    if (split / "rows.csv").read_bytes() != (cold / "rows.csv").read_bytes():
        bad.append("CSV differs between save/resume split at n=1e5 and cold run")
    if (cold / "rows.csv").read_text() != csvs[1]:
        bad.append("on-disk CSV differs from in-memory rendering")
    ok = not bad
    announce(7, ok, "byte-identical CSV across workers {1,4,8} and across a "
                    "save/resume split at n=1e5 (n_max=2e5)"
             if ok else "; ".join(bad))
    assert ok, bad


def test_criterion_8_full_range_out_of_scope(desk_run):
    # The reference table continues to n = 5*10^8.  Those rows are NOT
    # recomputed here; tail claims sourced from that range are carried as
    # monitored reports with an explicit provenance marker instead.
    reports = {r.conjecture_id: r for r in desk_run.reports}
    marked = [cid for cid in ("2.18-21", "2.20")
              if reports[cid].details.get("asserted_from") == 150_000_000]
    ok = marked == ["2.18-21", "2.20"] and all(
        reports[cid].status in ("holds", "monitored") for cid in marked)
    announce(8, ok, "rows beyond 10^7 not reproduced at desk scale; tail claims "
                    "carried as monitored reports with provenance markers")
    assert ok

    # sanity: the suite above never silently claims the full range
    assert max(PRINTED) == 10**6 and is_prime_64(TEN_MILLION[1])
