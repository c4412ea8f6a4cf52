import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special as sps

from umbral import special as sf
from umbral.numeric import (
    MAX_DEGREE,
    DegreeOverflowError,
    DensePolynomial,
    bisect_root,
    euler_accelerate,
    finite_difference,
    integrate_finite,
    integrate_halfline_decaying,
    integrate_halfline_oscillatory,
    integrate_line_decaying,
    monomial,
    poly_add,
    poly_antiderivative,
    poly_compose_affine,
    poly_derivative,
    poly_eval,
    poly_mul,
    poly_pow,
    sign_change_points,
)


# --- quadrature -----------------------------------------------------------------------

def test_integrate_finite_examples():
    assert integrate_finite(lambda x: 1.0, 0, 1).value == pytest.approx(1.0, abs=1e-15)
    assert integrate_finite(lambda x: x * x, 0, 1).value == pytest.approx(1 / 3, abs=1e-15)
    assert abs(integrate_finite(math.sin, 0, math.pi, 1e-13).value - 2) <= 1e-12


def test_integrate_finite_degenerate_and_reversed():
    assert integrate_finite(math.exp, 2.0, 2.0).value == 0.0
    assert integrate_finite(math.exp, 1.0, 0.0).value == pytest.approx(1 - math.e, abs=1e-14)


@pytest.mark.parametrize("degree", range(11))
def test_error_estimate_bounds_polynomials(degree):
    rng = np.random.default_rng(degree)
    c = rng.uniform(-1, 1, degree + 1)
    p = DensePolynomial(c)
    exact = poly_eval(poly_antiderivative(p), 1.3) - poly_eval(poly_antiderivative(p), -0.4)
    res = integrate_finite(p, -0.4, 1.3, 1e-12)
    assert abs(res.value - exact) <= max(res.abs_err_estimate, 1e-14)


def test_converged_result_honours_tolerance_and_cap():
    res = integrate_finite(lambda x: math.sqrt(x), 0, 1, 1e-10)
    assert res.converged and res.abs_err_estimate <= 1e-10
    capped = integrate_finite(lambda x: math.sin(1 / x) if x else 0.0, 0, 1, 1e-14, max_evaluations=300)
    assert not capped.converged
    assert capped.evaluations <= 300


def test_halfline_examples():
    assert integrate_halfline_decaying(lambda x: math.exp(-x)).value == pytest.approx(1.0, abs=1e-10)
    assert integrate_halfline_decaying(lambda x: math.exp(-x * x)).value == pytest.approx(
        math.sqrt(math.pi) / 2, abs=1e-10)
    assert integrate_line_decaying(lambda x: math.exp(-x * x)).value == pytest.approx(math.sqrt(math.pi), abs=1e-10)


def test_oscillatory_calibration_sinc():
    res = integrate_halfline_oscillatory(lambda x: math.sin(x) / x if x else 1.0, tol=1e-8,
                                         zeros=lambda k: (k + 1) * math.pi)
    assert abs(res.value - math.pi / 2) <= 1e-6


def test_oscillatory_by_sign_scan():
    res = integrate_halfline_oscillatory(lambda x: float(sps.j0(x)), tol=1e-8)
    assert abs(res.value - 1.0) <= 1e-4


def test_euler_accelerate_alternating_harmonic():
    partial = np.cumsum([(-1) ** k / (k + 1) for k in range(30)])
    value, err = euler_accelerate(list(partial))
    assert abs(value - math.log(2)) <= 1e-8
    assert err >= 0
    with pytest.raises(ValueError):
        euler_accelerate([1.0, 0.5])


def test_root_helpers():
    assert bisect_root(math.cos, 0, 3) == pytest.approx(math.pi / 2, abs=1e-13)
    pts = sign_change_points(math.sin, 0.1, 3)
    assert pts == pytest.approx([math.pi, 2 * math.pi, 3 * math.pi], abs=1e-12)


# --- finite differences ------------------------------------------------------------------

def test_finite_difference_examples():
    assert finite_difference(lambda x: x * x, 3.0, 1) == pytest.approx(6.0, abs=1e-10)
    assert finite_difference(math.sin, 0.0, 2) == pytest.approx(0.0, abs=1e-12)
    assert abs(finite_difference(math.exp, 0.0, 4) - 1.0) <= 1e-6
    with pytest.raises(ValueError):
        finite_difference(math.exp, 0.0, 5)


@pytest.mark.parametrize("n", [1, 3, 5, 8])
def test_finite_difference_hermite_recurrence(n):
    y = 0.4
    for x in (-0.8, 0.1, 0.9):
        d = finite_difference(lambda s: sf.hermite2(n, s, y), x, 1)
        assert abs(d - n * sf.hermite2(n - 1, x, y)) <= 1e-6


# --- dense polynomials --------------------------------------------------------------------

def test_polynomial_examples():
    sq = poly_pow(DensePolynomial([1.0, 1.0]), 2)
    assert sq.coeffs.tolist() == [1.0, 2.0, 1.0]
    assert poly_derivative(sq).coeffs.tolist() == [2.0, 2.0]
    assert poly_derivative(sq, 5).coeffs.tolist() == [0.0]


def test_polynomial_trailing_coefficient_trimmed():
    p = DensePolynomial([1.0, 2.0, 0.0, 0.0])
    assert p.degree == 1
    assert DensePolynomial([0.0, 0.0]).degree == 0
    assert (p - p).coeffs.tolist() == [0.0]


def test_polynomial_degree_cap():
    with pytest.raises(DegreeOverflowError):
        monomial(MAX_DEGREE + 1)
    with pytest.raises(DegreeOverflowError):
        poly_pow(monomial(9), 8)


def test_polynomial_immutable_and_hashable():
    p = DensePolynomial([1.0, 2.0])
    with pytest.raises(ValueError):
        p.coeffs[0] = 3.0
    assert hash(p) == hash(DensePolynomial([1.0, 2.0, 0.0]))


def test_compose_affine():
    p = DensePolynomial([1.0, 0.0, 1.0])  # 1 + x^2
    q = poly_compose_affine(p, 2.0, 1.0)  # 1 + (2x + 1)^2
    assert q.coeffs.tolist() == [2.0, 4.0, 4.0]


coeffs = st.lists(st.floats(-3, 3, allow_nan=False, allow_subnormal=False), min_size=1, max_size=8)


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs, st.floats(-2, 2, allow_subnormal=False))
def test_polynomial_ring_operations_evaluate_pointwise(a, b, x):
    p, q = DensePolynomial(a), DensePolynomial(b)
    assert poly_eval(poly_add(p, q), x) == pytest.approx(poly_eval(p, x) + poly_eval(q, x), abs=1e-10)
    assert poly_eval(poly_mul(p, q), x) == pytest.approx(poly_eval(p, x) * poly_eval(q, x), abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(coeffs)
def test_derivative_of_antiderivative(a):
    p = DensePolynomial(a)
    assert np.allclose(poly_derivative(poly_antiderivative(p)).coeffs, p.coeffs, rtol=1e-15, atol=0)
