"""Series module: Bernoulli table, the four trig expansions, coefficient laws.

Expected values come from two independent oracles: mpmath (bernfrac and
40-digit evaluation of the closed trig forms) and exact Fraction arithmetic
applied to the printed coefficient formulas. Everything frozen here was
computed outside the package.
"""

import math
import random
from fractions import Fraction

import mpmath as mp
import pytest

from ineqforge import series as S
from ineqforge.errors import DomainError, PrecisionError

mp.mp.dps = 40

DIRECT = {
    "csc": lambda t: 1.0 / math.sin(t),
    "cot": lambda t: math.cos(t) / math.sin(t),
    "tan": math.tan,
    "csc2": lambda t: 1.0 / math.sin(t) ** 2,
}
RADIUS = {"csc": math.pi, "cot": math.pi, "tan": math.pi / 2, "csc2": math.pi}


# --- Bernoulli table ---------------------------------------------------------

def test_bernoulli_matches_mpmath_exactly():
    for n in range(1, 61):
        num, den = mp.bernfrac(2 * n)
        want = abs(Fraction(int(num), int(den)))
        assert S.bernoulli_abs_exact(n) == want, f"n={n}"


def test_bernoulli_top_of_table():
    num, den = mp.bernfrac(240)
    assert S.bernoulli_abs_exact(120) == abs(Fraction(int(num), int(den)))
    assert S.bernoulli_abs(120) == float(abs(Fraction(int(num), int(den))))


def test_bernoulli_small_values():
    assert S.bernoulli_abs_exact(1) == Fraction(1, 6)
    assert S.bernoulli_abs_exact(2) == Fraction(1, 30)
    assert S.bernoulli_abs_exact(3) == Fraction(1, 42)
    assert S.bernoulli_abs_exact(4) == Fraction(1, 30)


@pytest.mark.parametrize("n", [0, -1, 121, 1.5, "2"])
def test_bernoulli_rejects_bad_n(n):
    with pytest.raises(DomainError):
        S.bernoulli_abs_exact(n)


# --- coefficient magnitudes of the four expansions ---------------------------

COEFF_SPOTS = {
    "csc": [Fraction(1, 6), Fraction(7, 360), Fraction(31, 15120)],
    "cot": [Fraction(1, 3), Fraction(1, 45), Fraction(2, 945)],
    "tan": [Fraction(1, 1), Fraction(1, 3), Fraction(2, 15)],
    "csc2": [Fraction(1, 3), Fraction(1, 15), Fraction(2, 189)],
}


@pytest.mark.parametrize("sid", S.SERIES_IDS)
def test_leading_coefficients(sid):
    for n, want in enumerate(COEFF_SPOTS[sid], start=1):
        assert S._coeff_exact(sid, n) == want, f"{sid} n={n}"


def test_coeff_unknown_id():
    with pytest.raises(DomainError):
        S._coeff_exact("sec", 1)


# --- partial sums against direct evaluation ----------------------------------

@pytest.mark.parametrize("sid", S.SERIES_IDS)
def test_series_matches_direct_at_random_points(sid):
    # Interior of the radius: beyond ~0.85*radius the 120-term cap cannot
    # push the truncation below 1e-13, so sampling stops at 0.8.
    rng = random.Random(0x5E1)
    for _ in range(200):
        t = rng.uniform(1e-6, 0.8 * RADIUS[sid])
        value, terms = S.series_eval(sid, t)
        exact = DIRECT[sid](t)
        assert abs(value - exact) <= 1e-12 * abs(exact), f"{sid} t={t}"
        assert 1 <= terms <= S.N_MAX


def test_cot_spot_tight():
    value, _ = S.series_eval("cot", 1.0)
    exact = math.cos(1.0) / math.sin(1.0)
    assert abs(value - exact) < 1e-13 * abs(exact)


def test_csc2_spot_tight():
    value, _ = S.series_eval("csc2", 0.5)
    exact = 1.0 / math.sin(0.5) ** 2
    assert abs(value - exact) < 1e-13 * abs(exact)


def test_negative_argument_is_symmetric():
    vp, _ = S.series_eval("csc", 0.7)
    vn, _ = S.series_eval("csc", -0.7)
    assert vn == -vp  # odd function, term-by-term
    vp, _ = S.series_eval("csc2", 0.7)
    vn, _ = S.series_eval("csc2", -0.7)
    assert vn == vp  # even function


def test_tan_near_radius_converges_slowly():
    value, terms = S.series_eval("tan", 1.4, tol=1e-11)
    assert terms > 80  # slow convergence is visible in the term count
    assert terms <= S.N_MAX
    assert abs(value - math.tan(1.4)) < 1e-10 * abs(math.tan(1.4))


def test_tan_near_radius_default_tol_overflows_term_budget():
    with pytest.raises(PrecisionError):
        S.series_eval("tan", 1.4)


@pytest.mark.parametrize(
    "sid,t",
    [("csc", 0.0), ("csc", math.pi), ("tan", math.pi / 2), ("cot", -4.0)],
)
def test_series_domain_errors(sid, t):
    with pytest.raises(DomainError):
        S.series_eval(sid, t)


def test_series_rejects_bad_id_and_tol():
    with pytest.raises(DomainError):
        S.series_eval("sec", 0.5)
    with pytest.raises(DomainError):
        S.series_eval("csc", 0.5, tol=0.0)


# --- ML1/ML2 ratio-difference laws --------------------------------------------

def test_ml1_threshold_values():
    assert S.ml1_threshold(1) == 0.4
    # maximum sits at n = 1, tail decreases toward 1/4
    values = [S.ml1_threshold(n) for n in range(1, 201)]
    assert max(values) == values[0]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert values[-1] > 0.25


def test_ml2_threshold_values():
    assert S.ml2_threshold(1) == pytest.approx(1.0 / 3.0, abs=0)
    assert S.ml2_threshold(2) == S.ml2_threshold(1)  # twin maximum
    values = [S.ml2_threshold(n) for n in range(2, 201)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_ml1_signs_exact_to_200():
    half = Fraction(1, 4)  # p = 1/2
    upper = Fraction(2, 5)  # p = sqrt(10)/5
    for n in range(1, 201):
        assert S.ml1_ratio_diff_exact(half, n) <= 0, f"n={n}"
        assert S.ml1_ratio_diff_exact(upper, n) >= 0, f"n={n}"
    # the upper case touches zero exactly at the threshold maximum
    assert S.ml1_ratio_diff_exact(upper, 1) == 0


def test_ml2_signs_exact_to_200():
    half = Fraction(1, 4)
    upper = Fraction(1, 3)  # p = 1/sqrt(3)
    for n in range(1, 201):
        assert S.ml2_ratio_diff_exact(half, n) <= 0, f"n={n}"
        assert S.ml2_ratio_diff_exact(upper, n) >= 0, f"n={n}"
    assert S.ml2_ratio_diff_exact(upper, 1) == 0
    assert S.ml2_ratio_diff_exact(upper, 2) == 0


def test_ml_signs_with_the_actual_doubles():
    # fl(sqrt(10)/5)^2 rounds to exactly 0.4; fl(1/sqrt(3))^2 lands one ulp
    # above 1/3, which keeps it on the safe side of the threshold.
    p_ml1 = math.sqrt(10.0) / 5.0
    p_ml2 = 1.0 / math.sqrt(3.0)
    assert p_ml1 * p_ml1 == 0.4
    assert p_ml2 * p_ml2 > 1.0 / 3.0
    for n in range(1, 201):
        assert S.ml1_ratio_diff(0.5, n) <= 0
        assert S.ml1_ratio_diff(p_ml1, n) >= 0
        assert S.ml2_ratio_diff(0.5, n) <= 0
        assert S.ml2_ratio_diff(p_ml2, n) >= 0


@pytest.mark.parametrize("fn", [S.ml1_ratio_diff, S.ml2_ratio_diff])
def test_ml_rejects_bad_arguments(fn):
    with pytest.raises(DomainError):
        fn(0.0, 1)
    with pytest.raises(DomainError):
        fn(1.5, 1)
    with pytest.raises(DomainError):
        fn(0.5, 0)


# --- c(n) ratio --------------------------------------------------------------

def test_m6_ratio_spot_values():
    assert S.m6_coeff_ratio_exact(2) == Fraction(6, 5)
    assert S.m6_coeff_ratio_exact(3) == Fraction(60, 56)
    assert S.m6_coeff_ratio(2) == 1.2
    # tail distance from 1 is (2n - 2)/(4^n - 2n - 2)
    assert S.m6_coeff_ratio_exact(20) - 1 == Fraction(38, 4**20 - 42)


def test_m6_ratio_strictly_decreasing_exact():
    prev = None
    for n in range(2, 101):
        c = S.m6_coeff_ratio_exact(n)
        assert c > 1
        if prev is not None:
            assert c < prev, f"n={n}"
        prev = c


def test_m6_ratio_double_flattens_but_exact_does_not():
    # (4^n - 4)/(4^n - 2n - 2) differs from 1 by ~(2n - 2)/4^n; by n = 40
    # that is far below double resolution while the rational form still
    # carries it. This is why the strict-decrease check uses Fractions.
    assert S.m6_coeff_ratio(40) == 1.0
    assert S.m6_coeff_ratio_exact(40) > 1


def test_m6_ratio_rejects_n_below_2():
    with pytest.raises(DomainError):
        S.m6_coeff_ratio(1)
    with pytest.raises(DomainError):
        S.m6_coeff_ratio_exact(0)


# --- g1 coefficients ----------------------------------------------------------

def test_g1_displayed_spot_values():
    assert S.m5_g1_coefficients(1) == 0.0
    assert S.m5_g1_coefficients(2) == float(Fraction(1, 360))
    assert S.m5_g1_coefficients(3) == float(Fraction(13, 30240))


def test_g1_nonnegative_to_100():
    for n in range(1, 101):
        assert S.m5_g1_coefficients(n) >= 0.0
        assert S.m5_g1_taylor_coefficient(n) >= 0.0


def test_g1_taylor_is_four_times_displayed():
    # 4^n - 4n = 4 (4^(n-1) - n); scaling by 4 is exact in binary too.
    for n in range(1, 61):
        assert S.m5_g1_taylor_coefficient(n) == 4.0 * S.m5_g1_coefficients(n)


def test_g1_taylor_coefficients_match_the_function():
    # Independent check of the corrected coefficient law: partial sums built
    # from exact rationals must reproduce -t^2 (1+cos t)/sin^2 t + t/sin t + 1
    # to far beyond double precision, and the displayed (un-scaled) law must
    # not. Eight evaluation points per the resolved open question.
    def direct(t):
        t = mp.mpf(t)
        return -t * t * (1 + mp.cos(t)) / mp.sin(t) ** 2 + t / mp.sin(t) + 1

    for i in range(8):
        t = mp.mpf("0.02") * (i + 1)
        total = mp.mpf(0)
        displayed = mp.mpf(0)
        for n in range(1, 26):
            b = S.bernoulli_abs_exact(n)
            c = Fraction(4**n - 4 * n, math.factorial(2 * n)) * b
            total += mp.mpf(c.numerator) / mp.mpf(c.denominator) * t ** (2 * n)
            d = Fraction(4 ** (n - 1) - n, math.factorial(2 * n)) * b
            displayed += mp.mpf(d.numerator) / mp.mpf(d.denominator) * t ** (2 * n)
        want = direct(t)
        assert abs(total - want) < mp.mpf("1e-30"), f"t={t}"
        assert abs(displayed - want) > abs(want) / 2  # off by the factor 4


def test_g1_rejects_bad_n():
    with pytest.raises(DomainError):
        S.m5_g1_coefficients(0)
    with pytest.raises(DomainError):
        S.m5_g1_taylor_coefficient(-3)
