import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetabounds import special as sp
from zetabounds.util import (EULER_GAMMA, TWO_PI, PoleError, PrecisionError,
                             adaptive_simpson)

mp.mp.dps = 30


# ----------------------------------------------------------------------
# zeta_em
# ----------------------------------------------------------------------

def test_zeta_at_two_is_pi_squared_over_six():
    got = sp.zeta_em(2.0, 1e-13)
    assert abs(got.value - math.pi ** 2 / 6.0) <= got.abs_error + 1e-15


def test_zeta_log_derivative_at_three_halves():
    # reference value -1.50523... for zeta'/zeta(3/2)
    ld = sp.log_deriv_zeta(1.5)
    assert abs(ld.value.real - (-1.50523535578826)) < 1e-5
    assert abs(ld.value.imag) < 1e-12


def test_zeta_vanishes_at_first_zero():
    got = sp.zeta_em(0.5 + 14.134725j, 1e-9)
    assert abs(got.value) < 1e-4


def test_zeta_error_claims_hold_against_mpmath():
    pts = [2.0 + 0j, 0.5 + 14.134725j, -1.0 + 0j, 0.5 + 1000j,
           0.25 + 5j, -0.5 + 2j, -1.9 + 0.3j, 0.5 + 24999j]
    for s in pts:
        got = sp.zeta_em(s, 1e-8)
        ref = complex(mp.zeta(s))
        assert abs(got.value - ref) <= got.abs_error


def test_zeta_derivatives_against_mpmath():
    for s in (1.5 + 0j, -1.0 + 0j, 2.0 + 3j):
        for order in (1, 2):
            got = sp.zeta_em_deriv(s, order, 1e-8)
            ref = complex(mp.zeta(s, derivative=order))
            assert abs(got.value - ref) <= got.abs_error


def test_zeta_pole_and_domain_errors():
    with pytest.raises(PoleError):
        sp.zeta_em(1.0 + 0j)
    with pytest.raises(ValueError):
        sp.zeta_em(0.5 + 2e5j)
    with pytest.raises(PrecisionError):
        sp.zeta_em(-1.0 + 0j, 1e-18)


def test_log_deriv_tends_to_zero_on_the_right():
    assert abs(sp.log_deriv_zeta(40.0).value) < 1e-11


def test_log_deriv_near_zero_raises():
    with pytest.raises(PoleError):
        sp.log_deriv_zeta(0.5 + 14.134725141734694j)


def test_atilde_at_minus_one():
    atilde = -sp.log_deriv_zeta(-1.0).value.real + 0.5
    assert abs(atilde - (-1.48505372440541)) < 1e-4


# ----------------------------------------------------------------------
# digamma / gamma
# ----------------------------------------------------------------------

def test_digamma_classics():
    assert abs(sp.digamma(1.0).value.real + EULER_GAMMA) < 1e-13
    assert abs(sp.digamma(2.0).value.real - (1.0 - EULER_GAMMA)) < 1e-13


def test_digamma_real_part_bound_on_half_line():
    z = 0.5 + 10.0j
    d = sp.digamma(z)
    assert d.value.real <= math.log(abs(z)) + d.abs_error


def test_digamma_recurrence_and_pole():
    z = 0.7 + 2.3j
    lhs = sp.digamma(z + 1.0).value
    rhs = sp.digamma(z).value + 1.0 / z
    assert abs(lhs - rhs) < 1e-12
    with pytest.raises(PoleError):
        sp.digamma(-3.0)


def test_gamma_and_trigamma_against_mpmath():
    for z in (0.5 + 3j, 2.7 - 1.2j, -1.3 + 0.4j):
        assert abs(sp.gamma_abs(z).value.real
                   - abs(complex(mp.gamma(z)))) < 1e-10
        assert abs(sp.trigamma(z).value
                   - complex(mp.polygamma(1, z))) < 1e-10


# ----------------------------------------------------------------------
# cot / coth
# ----------------------------------------------------------------------

def test_cot_at_half():
    assert abs(sp.cot_stable(math.pi / 2.0)) < 1e-15


def test_coth_reference_value():
    assert abs(sp.coth_stable(math.pi / 2.0).real - 1.09033141072737) < 1e-9


def test_coth_elementary_upper_bound():
    for y in np.linspace(1e-3, 3.0, 200):
        assert sp.coth_stable(y).real <= 1.0 / y + y / 3.0 + 1e-12


@settings(max_examples=60, deadline=None)
@given(st.floats(-40.0, 40.0), st.floats(-40.0, 40.0))
def test_cot_matches_ratio_off_poles(x, y):
    z = complex(x, y)
    if abs(cmath.sin(z)) < 1e-3:
        return
    assert abs(sp.cot_stable(z)
               - cmath.cos(z) / cmath.sin(z)) < 1e-11 * (1 + abs(z))


def test_near_pole_laurent_accuracy():
    z = 3 * math.pi + 0.05
    assert abs(sp.cot_stable(z) - complex(mp.cot(z))) < 1e-12
    w = complex(0.03, math.pi + 0.02)
    assert abs(sp.coth_stable(w) - complex(mp.coth(w))) < 1e-12
    with pytest.raises(PoleError):
        sp.coth_stable(0.0)


# ----------------------------------------------------------------------
# Fejer kernel
# ----------------------------------------------------------------------

def test_fejer_endpoint_values():
    assert sp.fejer(3, 0.0) == 4.0
    assert abs(sp.fejer(1, math.pi)) < 1e-15


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 400), st.floats(-50.0, 50.0))
def test_fejer_nonnegative(K, t):
    assert sp.fejer(K, t) >= 0.0


def test_fejer_mean_is_one():
    for K in (1, 7, 33):
        q = adaptive_simpson(lambda t: sp.fejer(K, t), 0.0, TWO_PI, 1e-10)
        assert abs(q / TWO_PI - 1.0) < 1e-8


def test_fejer_batch_matches_scalar():
    ts = np.linspace(-7.0, 7.0, 101)
    vb = sp.fejer_batch(5, ts)
    vs = np.array([sp.fejer(5, float(t)) for t in ts])
    assert np.max(np.abs(vb - vs)) == 0.0


# ----------------------------------------------------------------------
# Lerch transcendent
# ----------------------------------------------------------------------

def test_lerch_geometric_log_identity():
    z = 0.37
    got = sp.lerch(z, 1, 1.0)
    assert abs(got.value - (-math.log(1 - z) / z)) < 1e-13


def test_lerch_alpha_power():
    got = sp.lerch(0.0, 3, 1.7 + 0.4j)
    assert abs(got.value - (1.7 + 0.4j) ** -3) < 1e-15


def test_lerch_against_direct_summation():
    z = math.exp(-1.0)
    direct = sum(z ** n / (n + 0.7) ** 2 for n in range(200))
    got = sp.lerch(z, 2, 0.7)
    assert abs(got.value - direct) < 1e-12


def test_lerch_divergence_and_pole_guard():
    with pytest.raises(ValueError):
        sp.lerch(1.0, 2, 0.5)
    with pytest.raises(PoleError):
        sp.lerch(0.5, 2, -3.0)


# ----------------------------------------------------------------------
# Exponential integral
# ----------------------------------------------------------------------

def test_ei_series_value():
    v, _ = sp.ei_and_bound(1.0)
    assert abs(v.value.real - 1.8951178163559368) < 1e-12


def test_ei_bound_holds_incl_critical_point():
    alpha = 40.0 / 3.0
    for x in (0.3, 1.0, 4.0 * alpha / (alpha - 6.0), 20.0, 35.0, 80.0):
        v, b = sp.ei_and_bound(x)
        assert v.value.real <= b
    # margin at the critical point is positive but thin
    xc = 4.0 * alpha / (alpha - 6.0)
    v, b = sp.ei_and_bound(xc)
    assert 0.0 < b - v.value.real < 0.05 * b


# ----------------------------------------------------------------------
# Laurent coefficients of -zeta'/zeta at s = 1
# ----------------------------------------------------------------------

def test_laurent_first_coefficient_is_gamma():
    lc = sp.laurent_coeffs_A(10)
    assert abs(lc.a(0) - EULER_GAMMA) < 1e-14


def test_laurent_all_magnitudes_positive():
    lc = sp.laurent_coeffs_A(10)
    assert all(m > 0 for m in lc.magnitudes())


def test_laurent_series_evaluates_log_derivative():
    lc = sp.laurent_coeffs_A(12)
    s = 1.01
    recon = 1.0 / (s - 1.0) + lc.eval_regular_part(s).real
    assert abs(recon - (-sp.log_deriv_zeta(s).value.real)) < 1e-8


def test_laurent_against_mpmath_stieltjes():
    lc = sp.laurent_coeffs_A(6)
    # independent series division at 40 digits
    mp.mp.dps = 40
    u = mp.mpf("0.02")
    ref = -mp.zeta(1 + u, derivative=1) / mp.zeta(1 + u) - 1 / u
    mine = lc.eval_regular_part(1.02)
    assert abs(float(ref) - mine.real) < 1e-9
    mp.mp.dps = 30


def test_laurent_depth_guard():
    with pytest.raises(PrecisionError):
        sp.laurent_coeffs_A(13)


# ----------------------------------------------------------------------
# f(t) = zeta'/zeta + digamma - log 2pi
# ----------------------------------------------------------------------

def test_badabook_value_matches_atilde():
    assert abs(sp.badabook_f(2.0) + 0.5 - (-1.48505372440541)) < 1e-9


def test_badabook_slope_constant():
    m = sp.badabook_f_prime(5.0) - 1.0 / 25.0
    assert abs(m - 0.203) < 5e-3


def test_badabook_monotone_on_grid():
    ts = np.arange(2.0, 50.5, 1.0)
    f = np.array([sp.badabook_f(float(t)) for t in ts])
    assert np.all(np.diff(ts * f) > 0)
    assert np.all(np.diff(f + 1.0 / ts) > 0)
