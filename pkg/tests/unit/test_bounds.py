from dataclasses import replace
from fractions import Fraction
from math import ceil, log2

import numpy as np
import pytest
from unittest.mock import patch

from qenum import bounds
from qenum.bounds import (
    BoundKind,
    CertificateMode,
    KeyInequalityCertificate,
    binary_entropy,
    check_key_inequality,
    finite_lp_bound,
    hamming_asymptotic_bound,
    hamming_finite_bound,
    hamming_finite_certificate,
    lp_asymptotic_bound,
    lp_axis_candidates,
    lp_F_coefficients,
    lp_F_direct,
    lp_F_value,
    lp_root,
    singleton_bound,
    singleton_certificate,
)
from qenum.errors import DomainError, IdentityFailureError, KeyInequalityViolation, ValidityWindowError


def _with_cell(grid, r, s, value):
    rows = [list(row) for row in grid]
    rows[r][s] = value
    return tuple(tuple(row) for row in rows)


# --- Key inequality and Singleton ---


@pytest.mark.parametrize("n", range(1, 13))
def test_singleton_bound_is_exact(n):
    for dx in range(1, n + 2):
        for dz in range(1, n + 3 - dx):
            assert singleton_bound(n, dx, dz) == 2 ** (n - dx - dz + 2)


@pytest.mark.parametrize("n", range(13, 21))
def test_singleton_bound_is_exact_for_larger_n(n):
    for dx in range(1, n // 2 + 2):
        for dz in range(1, n // 2 + 2):
            assert singleton_bound(n, dx, dz) == 2 ** (n - dx - dz + 2)


def test_singleton_maximum_sits_at_the_origin():
    result = check_key_inequality(singleton_certificate(10, 3, 4))
    assert result.cell == (0, 0)
    assert result.bound == 2**5


def test_singleton_g_ratio():
    n, d = 12, 5
    for i in range(d - 1):
        ratio = bounds.singleton_g(n, i, d) / bounds.singleton_g(n, i + 1, d)
        assert ratio == Fraction(n - i - d + 1, d - 1 - i)


def test_singleton_check():
    assert bounds.singleton_check(5, 1, 3, 3)
    assert not bounds.singleton_check(5, 2, 3, 3)
    assert bounds.singleton_asymptotic_bound(0.1, 0.2) == pytest.approx(0.7)


def test_condition_one_violation():
    certificate = singleton_certificate(6, 3, 3)
    broken = replace(certificate, alpha_grid=_with_cell(certificate.alpha_grid, 0, 1, Fraction(-1)))
    with pytest.raises(KeyInequalityViolation) as excinfo:
        check_key_inequality(broken)
    assert excinfo.value.condition == 1
    assert excinfo.value.cell == (0, 1)


def test_condition_two_violation():
    certificate = singleton_certificate(6, 3, 3)
    broken = replace(certificate, f_values=_with_cell(certificate.f_values, 1, 1, Fraction(0)))
    with pytest.raises(KeyInequalityViolation) as excinfo:
        check_key_inequality(broken)
    assert excinfo.value.condition == 2
    assert excinfo.value.cell == (1, 1)


def test_condition_three_violation():
    certificate = singleton_certificate(6, 3, 3)
    broken = replace(certificate, f_values=_with_cell(certificate.f_values, 5, 0, Fraction(1)))
    with pytest.raises(KeyInequalityViolation) as excinfo:
        check_key_inequality(broken)
    assert excinfo.value.condition == 3
    assert excinfo.value.cell == (5, 0)


def test_float_certificate_tolerates_rounding_noise():
    certificate = singleton_certificate(6, 3, 3)
    noisy = KeyInequalityCertificate(
        n=6,
        dx=3,
        dz=3,
        alpha_grid=tuple(tuple(float(v) for v in row) for row in certificate.alpha_grid),
        f_values=_with_cell(tuple(tuple(float(v) for v in row) for row in certificate.f_values), 5, 5, 1e-12),
        tolerance=1e-9,
    )
    assert not noisy.exact
    assert check_key_inequality(noisy).bound == pytest.approx(4)


def test_certificate_shape_is_validated():
    with pytest.raises(DomainError):
        KeyInequalityCertificate(n=2, dx=4, dz=1, alpha_grid=((1,) * 3,) * 3, f_values=((1,) * 3,) * 3)
    with pytest.raises(DomainError):
        KeyInequalityCertificate(n=2, dx=1, dz=1, alpha_grid=((1,) * 2,) * 2, f_values=((1,) * 3,) * 3)


# --- Hamming-type ---


def test_hamming_certificate_for_five_qubits():
    certificate = hamming_finite_certificate(5, 3, 3)
    assert certificate.mode == CertificateMode.EVEN_FACTORED
    assert certificate.x_values == (160, 0, 64, 0, 0, 0)
    assert certificate.f_values[0][0] == 25600
    result = check_key_inequality(certificate)
    assert result.bound == 128
    assert result.cell == (2, 2)


def test_hamming_bound_names_the_vanishing_factor():
    with pytest.raises(KeyInequalityViolation) as excinfo:
        hamming_finite_bound(4, 3, 3)
    assert excinfo.value.condition == 1
    assert excinfo.value.cell == (0, 2)
    assert "P_1(2) = 0" in str(excinfo.value)


@pytest.mark.parametrize("n", [3, 6, 9])
def test_hamming_bound_without_distance(n):
    assert hamming_finite_bound(n, 1, 1) == 2**n


def test_hamming_parity_violation():
    certificate = hamming_finite_certificate(5, 3, 3)
    broken = replace(certificate, x_values=(160, 5, 64, 0, 0, 0))
    with pytest.raises(KeyInequalityViolation) as excinfo:
        check_key_inequality(broken)
    assert excinfo.value.condition == 2
    assert excinfo.value.cell == 1


def test_hamming_needs_factors():
    certificate = hamming_finite_certificate(5, 3, 3)
    with pytest.raises(DomainError):
        check_key_inequality(replace(certificate, z_values=None))


def test_hamming_closed_form_mismatch_is_reported():
    with patch("qenum.bounds.product_expansion", return_value=(1, 0, 0, 0, 0, 0)):
        with pytest.raises(IdentityFailureError):
            hamming_finite_certificate(5, 3, 3)


# --- First LP bound ---


def test_lp_root_for_ten_qubits():
    params = lp_root(10, 2)
    assert params.a == pytest.approx(2.7161, abs=1e-3)
    assert params.residue < 1e-9


def test_lp_axis_candidates_scan_when_neighbours_fail():
    candidates = lp_axis_candidates(10, 3)
    assert [params.t for params in candidates] == [2]
    assert 2 < candidates[0].a <= 3


def test_lp_F_forms_agree():
    params = lp_root(10, 2)
    for x in range(11):
        assert lp_F_value(params, x) == pytest.approx(lp_F_direct(params, x), rel=1e-6, abs=1e-6)
    with pytest.raises(DomainError):
        lp_F_direct(params, params.a)


def test_lp_F_vanishes_continuously_at_a():
    params = lp_root(10, 2)
    assert lp_F_value(params, params.a) == pytest.approx(0, abs=1e-9)
    assert abs(lp_F_value(params, params.a - 1e-9)) < 1e-3
    assert abs(lp_F_value(params, params.a + 1e-9)) < 1e-3
    nearby = params.a - 1e-7
    assert lp_F_value(params, nearby) == pytest.approx(lp_F_direct(params, nearby), rel=1e-3)


def test_lp_F_sign_pattern():
    params = lp_root(10, 2)
    assert all(c >= -1e-9 for c in lp_F_coefficients(params))
    assert all(lp_F_value(params, x) > 0 for x in range(3))
    assert all(lp_F_value(params, x) <= 1e-9 for x in range(ceil(params.a), 11))


def test_lp_parameters_range():
    with pytest.raises(DomainError):
        bounds.lp_parameters(10, 0.7)
    with pytest.raises(DomainError):
        lp_root(10, 10)


def test_finite_lp_bound_reports_the_corner_violation():
    report = finite_lp_bound(10, 3, 3)
    assert report.x_params.t == 2 and report.z_params.t == 2
    assert report.bound is None
    assert "condition 3" in report.violation
    assert report.singleton == 64
    assert report.box_bound == pytest.approx(109.0175, rel=1e-4)
    assert report.exceeds_singleton


# --- Asymptotics ---


def test_binary_entropy():
    assert binary_entropy(0.0) == 0
    assert binary_entropy(1.0) == 0
    assert binary_entropy(0.5) == pytest.approx(1)
    assert binary_entropy(0.11) == pytest.approx(0.4999, abs=1e-3)
    with pytest.raises(DomainError):
        binary_entropy(1.2)


def test_h_function():
    assert bounds.h_function(0.1) == pytest.approx(0)
    assert bounds.h_function(0.0) == -0.5
    assert bounds.h_function(0.2) > 0


@pytest.mark.parametrize("tau", [0.05, 0.1, 0.2])
def test_integrand_at_origin(tau):
    width = 1e-6
    assert bounds.log_ratio_integral(tau, width) / width == pytest.approx(log2(1 - 2 * tau), rel=1e-4)
    assert bounds.omega(tau, 0.0) == pytest.approx(-binary_entropy(tau))
    assert bounds.gamma(tau, 0.0) == pytest.approx(binary_entropy(tau))


def test_integrand_outside_window():
    with pytest.raises(ValidityWindowError):
        bounds.log_ratio_integral(0.3, 0.4)


@pytest.mark.parametrize("delta", [0.05, 0.10, 0.15])
def test_hamming_asymptotic_matches_closed_form(delta):
    result = hamming_asymptotic_bound(delta, delta)
    assert result.value == pytest.approx(1 - 2 * binary_entropy(delta / 2), abs=1e-6)
    assert result.xi < 1e-3 and result.eta < 1e-3


def test_hamming_asymptotic_asymmetric():
    result = hamming_asymptotic_bound(0.05, 0.15)
    assert result.value == pytest.approx(bounds.hamming_corollary_bound(0.05, 0.15), abs=1e-6)


def test_hamming_asymptotic_window():
    assert hamming_asymptotic_bound(0.0, 0.0).value == pytest.approx(1)
    with pytest.raises(ValidityWindowError):
        hamming_asymptotic_bound(0.3, 0.1)


def test_lp_asymptotic_matches_closed_form():
    result = lp_asymptotic_bound(0.1, 0.1)
    assert result.value == pytest.approx(bounds.lp_corollary_bound(0.1, 0.1), abs=1e-6)
    assert result.params.tau == pytest.approx(0.2)


def test_lp_asymptotic_at_corollary_limit():
    result = lp_asymptotic_bound(0.1865, 0.1865)
    assert result.value == pytest.approx(0.0028, abs=5e-4)
    assert result.value == pytest.approx(bounds.lp_corollary_bound(0.1865, 0.1865), abs=1e-4)


def test_lp_asymptotic_window():
    with pytest.raises(ValidityWindowError):
        lp_asymptotic_bound(0.6, 0.1)


def test_corollary_predicates():
    assert bounds.hamming_corollary_applies(0.2)
    assert not bounds.hamming_corollary_applies(0.21)
    assert bounds.lp_corollary_applies(0.1865)
    assert not bounds.lp_corollary_applies(0.19)


def test_validity_thresholds():
    assert bounds.hamming_validity_threshold() == pytest.approx(0.2, abs=1e-9)
    assert 0.18 < bounds.lp_validity_threshold() < 0.2


def test_singleton_curve():
    curve = bounds.bound_curve(BoundKind.SINGLETON, step=0.1)
    assert [round(delta, 6) for delta, _ in curve] == [0.0, 0.1, 0.2, 0.3, 0.4, 0.5]
    assert curve[-1][1] == pytest.approx(0.0)


def test_hamming_curve_is_decreasing():
    curve = bounds.bound_curve("hamming", step=0.05, grid_step=1e-2)
    values = [value for _, value in curve]
    assert len(curve) == 5
    assert values == sorted(values, reverse=True)
    assert values[0] == pytest.approx(1)


def test_h_function_is_increasing_on_a_fine_grid():
    values = [bounds.h_function(x) for x in np.arange(0, 0.5 + 1e-12, 1e-4)]
    assert all(later > earlier for earlier, later in zip(values, values[1:]))


@pytest.mark.parametrize("evaluate", [hamming_asymptotic_bound, lp_asymptotic_bound])
def test_asymptotic_bounds_are_stable_under_tighter_quadrature(evaluate):
    coarse = evaluate(0.1, 0.1, step=1e-3).value
    with patch("qenum.config.QUAD_TOL", bounds.config.QUAD_TOL / 2):
        fine = evaluate(0.1, 0.1, step=1e-3).value
    assert abs(coarse - fine) < 1e-7


@pytest.mark.parametrize("delta", [0.05, 0.1, 0.15, 0.1865])
def test_lp_maximum_sits_at_the_origin(delta):
    result = lp_asymptotic_bound(delta, delta)
    assert result.xi < 1e-3
    assert result.eta < 1e-3
