"""Census counts against brute-force recounts and frozen spot values."""

import math

import pytest

from altprime.census import (
    CensusRecord,
    census_step,
    dirichlet_census,
    ratio_proxy,
    restricted_pi,
    rpnt_ratio,
    run_census,
    special_prime_counts,
)
from altprime.sequences import KIND_A, KIND_ABS, KIND_T, offset_kind, shifted_kind
from conftest import is_prime_slow

# restricted_pi checkpoints, frozen after an independent recount.
PI_A = {10: 6, 100: 33, 1000: 254, 10_000: 1982}
PI_T_10K = 1908
PI_ABS_10K = 1024


@pytest.mark.parametrize("n,expect", sorted(PI_A.items()))
def test_restricted_pi_A(n, expect):
    assert restricted_pi(KIND_A, n) == expect


def test_restricted_pi_other_kinds():
    assert restricted_pi(KIND_T, 10_000) == PI_T_10K
    assert restricted_pi(KIND_ABS, 10_000) == PI_ABS_10K
    assert restricted_pi(KIND_ABS, 100) == 25


def test_census_matches_trial_division_recount(a_oracle):
    """Exhaustive recount of the first 2000 indices with naive primality."""
    n = 2000
    big_a = a_oracle[1 : 2 * n : 2].tolist()
    assert restricted_pi(KIND_A, n) == sum(is_prime_slow(v) for v in big_a)
    assert restricted_pi(KIND_T, n) == sum(is_prime_slow(v - 2) for v in big_a)
    assert restricted_pi(KIND_ABS, n) == sum(is_prime_slow(int(v)) for v in a_oracle[:n])


def test_first_hits_of_A():
    rec = run_census(KIND_A, 10)
    assert rec.hits == [(1, 2, 3), (2, 3, 5), (3, 4, 7), (4, 5, 13), (5, 6, 19), (6, 9, 29)]
    assert rec.last_hit == (6, 9, 29)
    assert rec.k == 6 and rec.n == 10


def test_first_hit_of_T_and_negative_terms():
    # T_1 = -1 and T_2 = 1 are non-hits, not errors
    rec = run_census(KIND_T, 10)
    assert rec.hits[0] == (1, 3, 3)


def test_hits_are_strictly_increasing():
    rec = run_census(KIND_A, 2000)
    ks = [k for k, _, _ in rec.hits]
    ms = [m for _, m, _ in rec.hits]
    rs = [r for _, _, r in rec.hits]
    assert ks == list(range(1, rec.k + 1))
    assert ms == sorted(set(ms))
    assert rs == sorted(set(rs))  # A_n strictly increasing -> so are its hits


def test_abs_census_contains_doubled_A_hits():
    """abs_{2m} = A_m, so every A hit reappears in the abs census at 2m."""
    a_hits = run_census(KIND_A, 500).hits
    abs_pairs = {(m, r) for _, m, r in run_census(KIND_ABS, 1000).hits}
    for _, m, r in a_hits:
        assert (2 * m, r) in abs_pairs


def test_census_step_increments_by_at_most_one():
    rec = CensusRecord()
    ks = []
    for m, term in enumerate([1, 3, 4, 5, -7, 13], start=1):
        ks.append(census_step(rec, term, m).k)
    assert ks == [0, 1, 1, 2, 2, 3]
    assert rec.n == 6


def test_census_hit_cap():
    rec = CensusRecord(hit_cap=2)
    for m, term in enumerate([3, 5, 7, 11], start=1):
        census_step(rec, term, m)
    assert rec.k == 4
    assert len(rec.hits) == 2
    assert rec.hits_truncated
    assert rec.last_hit == (4, 4, 11)


def test_run_census_rejects_negative_n():
    with pytest.raises(ValueError):
        run_census(KIND_A, -1)


def test_dirichlet_mod_4_small():
    cen = dirichlet_census(KIND_A, 10, 4)
    assert cen.class_counts == {1: 3, 3: 3}
    assert cen.shared_count == 0
    assert cen.k == 6


def test_dirichlet_mod_2_all_odd():
    cen = dirichlet_census(KIND_A, 10, 2)
    assert cen.class_counts == {1: 6}
    assert cen.shared_count == 0


def test_dirichlet_mod_3_shares_the_hit_3():
    cen = dirichlet_census(KIND_A, 10_000, 3)
    assert cen.class_counts == {1: 955, 2: 1026}
    assert cen.shared_count == 1  # the hit r = 3 itself
    assert cen.k == PI_A[10_000]


def test_dirichlet_rejects_bad_modulus():
    with pytest.raises(ValueError):
        dirichlet_census(KIND_A, 10, 1)


def test_dirichlet_works_for_derived_kinds():
    for kind in (KIND_T, shifted_kind(1), offset_kind(1)):
        cen = dirichlet_census(kind, 200, 4)
        assert cen.k == restricted_pi(kind, 200)


def test_rpnt_ratio():
    assert rpnt_ratio(6, 10) == pytest.approx(6 * math.log(10) / 20)
    assert rpnt_ratio(25, 100, KIND_ABS) == pytest.approx(25 * math.log(100) / 100)
    assert rpnt_ratio(0, 10) == 0.0
    with pytest.raises(ValueError):
        rpnt_ratio(6, 2)
    with pytest.raises(ValueError):
        rpnt_ratio(-1, 10)


def test_ratio_proxy():
    # the printed n=10 and n=100 reporting values
    assert ratio_proxy(6, 9) == pytest.approx(0.73241, abs=5e-6)
    assert ratio_proxy(33, 96) == pytest.approx(0.78450, abs=5e-6)
    with pytest.raises(ValueError):
        ratio_proxy(6, 1)


def test_special_prime_counts(a_oracle):
    for n, sg, twin in [(20, 4, 3), (100, 10, 8), (1000, 34, 22)]:
        got = special_prime_counts(n)
        assert (got.sophie_germain, got.twin_neighbor) == (sg, twin), n
    # a_1 = 2: 2 and 5 prime -> Sophie Germain hit at the very first index
    assert special_prime_counts(1).sophie_germain == 1
    # a_7 = 12 sits between the twin pair (11, 13)
    assert special_prime_counts(7).twin_neighbor >= 1
    # recount 500 indices naively
    want_sg = sum(1 for v in a_oracle[:500] if is_prime_slow(v) and is_prime_slow(2 * v + 1))
    want_tw = sum(1 for v in a_oracle[:500] if is_prime_slow(v - 1) and is_prime_slow(v + 1))
    got = special_prime_counts(500)
    assert (got.sophie_germain, got.twin_neighbor) == (want_sg, want_tw)
    with pytest.raises(ValueError):
        special_prime_counts(0)
