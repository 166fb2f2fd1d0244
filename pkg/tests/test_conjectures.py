"""Checker and solver unit tests: frozen spot values, brackets, round-trips."""

import math
import random

import pytest

from altprime.conjectures import (
    CONJECTURES,
    SolverError,
    check_conj_2_10,
    check_conj_2_14,
    check_conj_2_18,
    check_cor_2_11,
    check_cor_2_19_20,
    check_sun_18,
    cor_2_11_rhs,
    lemma29_ratio,
    pi_A_ratio,
    pillai_ratio,
    r_k_asymptote_ratio,
    refined_growth_ratio,
    rk_equation,
    solve_Rk,
)


# ---- R_k solver ----

@pytest.mark.parametrize(
    "k,r,expect",
    [
        (6, 29, 1.24290),
        (1982, 113557, 1.15094),
        (129447, 16230881, 1.13701),
        (254, 8807, 1.1820125),  # regression pin on the solver's own value
    ],
)
def test_solve_rk_spot_values(k, r, expect):
    assert solve_Rk(k, r).R == pytest.approx(expect, abs=1e-5)


def test_solve_rk_monotone_in_r():
    rs = [1000, 2000, 4000, 8000]
    roots = [solve_Rk(100, r).R for r in rs]
    assert roots == sorted(roots)
    assert roots[0] < roots[-1]


def test_solve_rk_bracket_errors():
    with pytest.raises(SolverError):
        solve_Rk(3, 10**9)  # r above f(hi)
    with pytest.raises(SolverError):
        solve_Rk(10**6, 2)  # r below f(lo)


def test_solve_rk_rejects_bad_args():
    with pytest.raises(ValueError):
        solve_Rk(2, 29)
    with pytest.raises(ValueError):
        solve_Rk(6, 1)
    with pytest.raises(ValueError):
        rk_equation(1.0, 2)


def test_solve_rk_random_round_trips():
    """Draw (k, R*), push R* through the closed form, and demand the solver
    lands back on it with relative residual < 1e-9."""
    rng = random.Random(20260814)
    for _ in range(1000):
        k = rng.randrange(3, 10**7)
        big_r = rng.uniform(0.8, 3.5)
        r = round(rk_equation(big_r, k))
        if r < 2 or rk_equation(4.0, k) < r:
            continue  # outside the solver's documented domain
        sol = solve_Rk(k, r)
        assert sol.residual / r < 1e-9, (k, r, sol)
        assert sol.residual == abs(rk_equation(sol.R, k) - r)


# ---- scalar ratios ----

def test_pillai_ratio():
    assert pillai_ratio(1, 2, 2) == 2.0
    assert pillai_ratio(4, 3, 7) == pytest.approx(6 / 7)
    with pytest.raises(ValueError):
        pillai_ratio(1, 0, 2)


def test_refined_growth_ratio():
    assert refined_growth_ratio(10, 33) == pytest.approx(1.5445, abs=1e-4)
    with pytest.raises(ValueError):
        refined_growth_ratio(2, 5)


def test_lemma29_ratio():
    assert lemma29_ratio(6, 9, 29) == pytest.approx(1.13334, abs=1e-5)
    assert lemma29_ratio(15234, 99992, 1379813) > 1.0
    with pytest.raises(ValueError):
        lemma29_ratio(1, 9, 29)
    with pytest.raises(ValueError):
        lemma29_ratio(6, 1, 29)


def test_r_k_asymptote_ratio():
    assert r_k_asymptote_ratio(2, 5) == pytest.approx(10.4068, abs=1e-4)
    assert r_k_asymptote_ratio(33, 563) == pytest.approx(2.7910, abs=1e-4)
    with pytest.raises(ValueError):
        r_k_asymptote_ratio(1, 3)


def test_pi_A_ratio():
    assert pi_A_ratio(5, 13) == pytest.approx(1.2)
    assert pi_A_ratio(10, 33) == pytest.approx(1.1)
    with pytest.raises(ValueError):
        pi_A_ratio(0, 13)


# ---- inequality checks ----

def test_check_2_10():
    assert check_conj_2_10(1, 2)
    assert check_conj_2_10(6, 9)
    assert check_conj_2_10(33, 96)
    assert not check_conj_2_10(100, 10)
    with pytest.raises(ValueError):
        check_conj_2_10(0, 5)


def test_check_2_11():
    assert cor_2_11_rhs(1) == 0.0
    assert cor_2_11_rhs(2) == 0.0
    assert cor_2_11_rhs(3) == pytest.approx(0.5 * 3 * math.log(3) * (math.log(3) + math.log(math.log(3))))
    assert check_cor_2_11(1, 3)
    assert check_cor_2_11(6, 29)
    assert check_cor_2_11(254, 8807)
    assert not check_cor_2_11(1000, 2)


def test_check_2_14():
    assert check_conj_2_14(15233, 5, 7) is None
    assert check_conj_2_14(1, 2, 3) is None
    assert check_conj_2_14(15234, 99992, 1379813) is True


def test_check_2_18():
    lower, upper, c_n = check_conj_2_18(10, 33, 29)
    assert c_n == pytest.approx(0.47960, abs=1e-5)
    assert lower and not upper  # 0.2 < C_10 but C_10 > 0.25
    with pytest.raises(ValueError):
        check_conj_2_18(2, 3, 3)


def test_check_2_19_20():
    ratio, lo, hi = check_cor_2_19_20(10, 33, 29)
    assert ratio == pytest.approx(33 / 29 - 1)
    assert lo == pytest.approx(math.log(math.log(10)) / (5 * math.log(10)))
    assert hi == pytest.approx(lo * 5 / 4)
    assert ratio > lo


def test_check_sun_18():
    assert check_sun_18(2, 1, 9) is None  # below the asserted range
    assert check_sun_18(16, 18, 10) is True  # a_9, a_11
    assert check_sun_18(18, 22, 12) is True  # a_11, a_13
    with pytest.raises(ValueError):
        check_sun_18(1, 5, 10)
    with pytest.raises(ValueError):
        check_sun_18(16, 0, 10)


def test_check_sun_18_exact_escalation():
    """64^(7/6) = 128 exactly, so at n=10 the pair (64, 128) is an exact tie:
    the escalated integer comparison must call it False (strict inequality),
    where a sloppy float path could go either way."""
    assert check_sun_18(64, 128, 10, float_margin=0.5) is False
    # one below the tie: exact path confirms it holds
    assert check_sun_18(64, 127, 10, float_margin=0.5) is True
    # same pair through the float path (margin 0 disables escalation)
    assert check_sun_18(64, 127, 10, float_margin=0.0) is True


def test_catalog_shape():
    assert len(CONJECTURES) == 20
    for cid, (kind, statement) in CONJECTURES.items():
        assert kind in ("check", "monitor"), cid
        assert statement
    for cid in ("2.10", "2.14", "2.18-20", "2.18-21", "sun-18", "2.13-sophie"):
        assert cid in CONJECTURES
