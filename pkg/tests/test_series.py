import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbral.series import (
    ConvergenceFlag,
    PoleError,
    TruncatedPowerSeries,
    beta,
    bessel_j0_series,
    classify_tail,
    default_order,
    exp_series,
    from_coefficients,
    gamma,
    geometric_series,
    log_abs_gamma,
    monomial_series,
    named_series,
    pochhammer,
    reciprocal_gamma,
    series_add,
    series_antiderivative,
    series_derivative,
    series_eval,
    series_mul,
    series_scale,
    tricomi_c0_series,
)

finite = st.floats(-3, 3, allow_nan=False, allow_subnormal=False)


# --- Gamma kernel ---------------------------------------------------------------

def test_gamma_factorial_and_half():
    assert gamma(5) == 24
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)


@pytest.mark.parametrize("x", [0, -1, -2, -7, -1e-13])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        gamma(x)


def test_gamma_reflection_region():
    # Gamma(-1/2) = -2 sqrt(pi)
    assert gamma(-0.5) == pytest.approx(-2 * math.sqrt(math.pi), rel=1e-14)
    assert gamma(-2.5) == pytest.approx(-8 * math.sqrt(math.pi) / 15, rel=1e-14)


def test_gamma_accuracy_against_lgamma():
    for x in np.linspace(-49.7, 50, 307):
        if abs(x - round(x)) < 1e-9 and x <= 0:
            continue
        lg, sign = log_abs_gamma(x)
        assert gamma(x) == pytest.approx(sign * math.exp(lg), rel=1e-12)


def test_reciprocal_gamma_values():
    assert reciprocal_gamma(-1) == 0.0
    assert reciprocal_gamma(0) == 0.0
    assert reciprocal_gamma(1) == 1.0
    assert reciprocal_gamma(0.5) == pytest.approx(1 / math.sqrt(math.pi), rel=1e-15)
    assert reciprocal_gamma(200.0) == 0.0 or reciprocal_gamma(200.0) < 1e-300


def test_reciprocal_gamma_factorial_product():
    for n in range(21):
        assert abs(reciprocal_gamma(n + 1) * math.factorial(n) - 1) <= 1e-13


@settings(max_examples=100, deadline=None)
@given(st.floats(0.1, 30))
def test_gamma_recurrence(x):
    assert gamma(x + 1) == pytest.approx(x * gamma(x), rel=1e-12)


def test_beta_values():
    assert beta(1, 1) == 1
    assert beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-15)
    # integral of t (1-t)^2 over [0, 1]: 1/2 - 2/3 + 1/4
    assert beta(2, 3) == pytest.approx(1 / 2 - 2 / 3 + 1 / 4, rel=1e-15)


def test_beta_large_arguments_use_logs():
    b = beta(150.0, 160.0)
    lg = math.lgamma(150) + math.lgamma(160) - math.lgamma(310)
    assert b == pytest.approx(math.exp(lg), rel=1e-10)


@settings(max_examples=50, deadline=None)
@given(st.floats(0.05, 20), st.floats(0.05, 20))
def test_beta_symmetric(a, b):
    assert beta(a, b) == pytest.approx(beta(b, a), rel=1e-14)


def test_pochhammer():
    assert pochhammer(1.0, 5) == 120
    assert pochhammer(0.5, 3) == pytest.approx(0.5 * 1.5 * 2.5)
    assert pochhammer(-2.0, 3) == 0.0


# --- TruncatedPowerSeries ---------------------------------------------------------------

def test_series_invariants():
    f = from_coefficients([1.0, 2.0, 3.0], "f")
    assert f.order == 2
    assert len(f.coeffs) == f.order + 1
    with pytest.raises(ValueError):
        f.coeffs[0] = 5.0
    with pytest.raises(ValueError):
        from_coefficients([1.0, float("nan")])
    with pytest.raises(ValueError):
        from_coefficients([])


def test_mul_examples():
    a = from_coefficients([1.0, 1.0, 0.0])
    b = from_coefficients([1.0, -1.0, 0.0])
    assert np.array_equal(series_mul(a, b).coeffs, [1.0, 0.0, -1.0])
    f = from_coefficients([0.3, -1.2, 4.0, 2.5])
    one = from_coefficients([1.0, 0.0, 0.0, 0.0])
    assert series_mul(f, one) == f


def test_exp_squared_is_exp_2x():
    e = exp_series(10)
    sq = series_mul(e, e)
    expected = [2.0 ** k / math.factorial(k) for k in range(11)]
    assert np.allclose(sq.coeffs, expected, rtol=1e-14, atol=0)


def test_mul_truncates_to_min_order():
    assert series_mul(exp_series(5), exp_series(9)).order == 5
    assert series_add(exp_series(5), exp_series(9)).order == 5


def test_eval_examples():
    f = from_coefficients([0.7, 3.0, -2.0])
    assert series_eval(f, 0.0) == 0.7
    assert abs(series_eval(exp_series(20), 1.0) - math.e) <= 1e-12
    assert abs(series_eval(geometric_series(30), 0.5) - 2.0) <= 1e-8


def test_derivative_antiderivative():
    one = from_coefficients([1.0])
    x = series_antiderivative(one)
    assert np.array_equal(x.coeffs, [0.0, 1.0])
    for s in range(6):
        anti = series_antiderivative(monomial_series(s, 8))
        assert anti.coeffs[s + 1] == pytest.approx(1 / (s + 1))
        assert anti.order == 9


@settings(max_examples=60, deadline=None)
@given(st.lists(finite, min_size=1, max_size=15))
def test_derivative_undoes_antiderivative(cs):
    f = from_coefficients(cs)
    assert np.allclose(series_derivative(series_antiderivative(f)).coeffs, f.coeffs, rtol=1e-15, atol=0)


coeff12 = st.lists(finite, min_size=13, max_size=13)


@settings(max_examples=50, deadline=None)
@given(coeff12, coeff12, coeff12)
def test_mul_commutative_associative(a, b, c):
    A, B, C = (from_coefficients(v) for v in (a, b, c))
    assert np.allclose(series_mul(A, B).coeffs, series_mul(B, A).coeffs, atol=1e-12, rtol=0)
    left = series_mul(series_mul(A, B), C).coeffs
    right = series_mul(A, series_mul(B, C)).coeffs
    assert np.allclose(left, right, atol=1e-12 * max(1.0, np.abs(left).max()), rtol=0)


def test_scale_and_operators():
    f = exp_series(6)
    assert series_scale(f, 2.0) == 2.0 * f
    assert (f - f).coeffs.tolist() == [0.0] * 7
    assert (-f).coeffs[1] == -1.0
    assert f(1.0) == series_eval(f, 1.0)


# --- tail classification -------------------------------------------------------------------

def test_classify_exp_converged():
    assert classify_tail(exp_series(40)).status == "converged"


def test_classify_factorial_divergent():
    f = from_coefficients([(-1) ** k * math.factorial(k) for k in range(41)])
    flag = classify_tail(f)
    assert flag.status == "divergent"
    assert flag.witness > 1


def test_classify_unit_ratio():
    flag = classify_tail(geometric_series(40, -1.0))
    assert flag.status in ("conditionally-convergent", "undetermined")


def test_classify_lacunary_series():
    # odd coefficients vanish; ratios are measured across the gaps
    assert classify_tail(bessel_j0_series(40)).status == "converged"


def test_classify_requires_order_8():
    with pytest.raises(ValueError):
        classify_tail(exp_series(7))


def test_convergence_flag_validation():
    with pytest.raises(ValueError):
        ConvergenceFlag("divergent", 0.5)
    with pytest.raises(ValueError):
        ConvergenceFlag("exploded", 2.0)


# --- named series ----------------------------------------------------------------------------

def test_named_series():
    c0 = named_series("tricomi_c0", 5)
    assert np.allclose(c0.coeffs, [1, -1, 1 / 4, -1 / 36, 1 / 576, -1 / 14400], rtol=1e-15)
    assert tricomi_c0_series(3).label == "tricomi_c0"
    with pytest.raises(KeyError):
        named_series("nope")


def test_default_order_env(monkeypatch):
    monkeypatch.delenv("UMBRAL_ORDER", raising=False)
    assert default_order() == 40
    monkeypatch.setenv("UMBRAL_ORDER", "12")
    assert default_order() == 12
    assert exp_series().order == 12
    monkeypatch.setenv("UMBRAL_ORDER", "banana")
    with pytest.raises(ValueError):
        default_order()


def test_series_is_hashable_and_immutable():
    f = exp_series(5)
    g = exp_series(5)
    assert f == g and hash(f) == hash(g)
    assert isinstance(f, TruncatedPowerSeries)
