import math

import numpy as np
import pytest

from zetabounds import extremal as ex
from zetabounds import formula as fm
from zetabounds import sieve as sv
from zetabounds.util import EULER_GAMMA, TWO_PI
from zetabounds.weights import WeightContext


# ----------------------------------------------------------------------
# trivial zeros
# ----------------------------------------------------------------------

def test_trivial_plain_sum_geometric():
    _, plain, _ = fm.trivial_zero_terms(100.0, 0.0, 10.0)
    assert abs(plain - 1.0 / 990.0) < 1e-18


def test_trivial_bound_holds():
    coth_sum, plain, rhs = fm.trivial_zero_terms(100.0, 0.0, 10.0)
    assert math.pi / 100.0 * (coth_sum + plain) <= rhs
    assert rhs == (0.5 + TWO_PI / 100.0) / (10.0 ** 3 * (1 - 10.0 ** -2))


def test_trivial_terms_vanish_at_infinity():
    c, p, r = fm.trivial_zero_terms(50.0, 0.3, 1e8)
    assert c < 1e-20 and p < 1e-20 and r < 1e-20


def test_trivial_domain_guard():
    with pytest.raises(ValueError):
        fm.trivial_zero_terms(10.0, -2.5, 100.0)


# ----------------------------------------------------------------------
# zero sums
# ----------------------------------------------------------------------

def test_exact_signed_at_x_one(zl_med):
    # x = 1 collapses x^(rho-1) to 1: the sums are plain weight sums
    ctx = WeightContext(1000.0, 0.0)
    got = fm.nontrivial_zero_sum(zl_med, ctx, 1.0, "exact-signed")
    from zetabounds.weights import omega_plus_batch
    g = zl_med.ordinates[zl_med.ordinates <= 1000.0]
    rho = 0.5 + 1j * g
    w = omega_plus_batch(ctx, rho)
    th = 1.0 - (rho - 1.0) / (1j * 1000.0)
    want2 = -TWO_PI / 1000.0 * float(np.sum(w.imag))
    want4 = -TWO_PI / 1000.0 * float(np.sum(th.real))
    assert abs(got.real - want2) < 1e-12
    assert abs(got.imag - want4) < 1e-12


def test_abs_bound_dominates_signed(zl_med):
    ctx = WeightContext(1500.0, 0.0)
    bound, xi = fm.nontrivial_zero_sum(zl_med, ctx, 7.0, "abs-bound")
    assert xi in fm.XI_GRID and abs(xi) == 1.0
    for x in (2.0, 50.0, 1e6):
        ex_val = fm.nontrivial_zero_sum(zl_med, ctx, x, "exact-signed")
        assert abs(ex_val.real) + abs(ex_val.imag) \
            <= 2.0 * bound / math.sqrt(x) + 1e-12
        assert abs(ex_val.real) <= bound / math.sqrt(x) + 1e-12


def test_height_guard(zl_med):
    with pytest.raises(ValueError):
        fm.nontrivial_zero_sum(zl_med, WeightContext(5000.0, 0.0), 2.0)


def test_zero_sum_bound_paths(zl_med):
    v, path = fm.zero_sum_bound(zl_med, 1500.0, 0.0)
    assert path == "direct" and v > 0
    v2, path2 = fm.zero_sum_bound(None, 2e7, 0.0)
    assert path2 == "closed-form"
    assert abs(v2 - fm.vihuela_rhs(2e7)) == 0.0
    with pytest.raises(ValueError):
        fm.zero_sum_bound(None, 1500.0, 0.0)


# ----------------------------------------------------------------------
# archimedean components
# ----------------------------------------------------------------------

def test_arles_constant_value():
    assert abs(fm.arles_constant() - 3.86102) < 1e-4


def test_arles_quadrature_below_bound():
    # int_{-1}^{1} |A~(s)| (1-s) x^s ds <= arles bound, via quadrature
    from zetabounds.special import log_deriv_zeta
    from zetabounds.util import adaptive_simpson

    for x in (1e4, 1e6):
        def f(s):
            at = -log_deriv_zeta(complex(s)).value.real - 1.0 / (s - 1.0)
            return abs(at) * (1.0 - s) * x ** s

        q = adaptive_simpson(f, -0.999, 0.999, 1e-6)
        # endpoint slivers contribute less than the f-values there
        assert q <= fm.arles_rhs(x)


def test_ranadi_value_shape():
    x = 100.0
    L = math.log(x)
    want = (math.pi ** 2 / (4 * x)) * (2 * math.sqrt(2) / L ** 2
                                       + (2 + math.sqrt(2)) / L ** 3
                                       + (1 / math.sqrt(2)) / L ** 4)
    assert abs(fm.ranadi_rhs(x) - want) < 1e-18


def test_moruno_uses_atilde():
    want = 2.0 * 1.48505372440541 / (100.0 * math.log(100.0))
    assert abs(fm.moruno_rhs(100.0) - want) < 1e-6


def test_hardin_aggregates_components():
    T, x = 1e6, 1e7
    total = fm.i_plus_c_bound(T, x)
    assert total == fm.hardin_rhs(T, x)
    # components are individually smaller than the aggregate at scale
    assert fm.coronidis_rhs(x) / x < total
    assert fm.adioso_rhs(0.5, T, x) < total
    assert fm.ranadi_rhs(x) < total


# ----------------------------------------------------------------------
# bound reports
# ----------------------------------------------------------------------

def test_report_sigma_one_main_term(zl_med):
    rep = fm.explicit_formula_bound(zl_med, 1000.0, 1.0, 1e6)
    assert rep.main_term == math.log(1e6) - EULER_GAMMA
    assert rep.real_pole_term == 0.0


def test_report_sigma_zero_pole_term(zl_med):
    rep = fm.explicit_formula_bound(zl_med, 1000.0, 0.0, 1e6)
    assert abs(rep.real_pole_term - (-math.log(TWO_PI) / 1e6)) < 1e-12
    assert rep.total_lower < 1.0 < rep.total_upper


def test_report_requires_x_above_T(zl_med):
    with pytest.raises(ValueError):
        fm.explicit_formula_bound(zl_med, 1000.0, 0.0, 500.0)
    with pytest.raises(ValueError):
        fm.explicit_formula_bound(zl_med, 1000.0, -3.0, 1e6)


def test_report_json_round_trip(zl_med):
    import json
    rep = fm.explicit_formula_bound(zl_med, 1000.0, 0.5, 1e6)
    d = json.loads(rep.to_json())
    assert float(d["total_upper"]) == rep.total_upper
    assert d["zero_sum_path"] == "direct"


def test_sandwich_against_sieve_small(zl_med):
    # end-to-end at desk scale: measured partial sums stay inside
    xs = [3000, 10 ** 4, 10 ** 5, 10 ** 6]
    cps = {c.x: c for c in sv.psi_checkpoints(xs)}
    for T in (300.0, 1000.0, 2000.0):
        for x in xs:
            if x <= T:
                continue
            rep0 = fm.explicit_formula_bound(zl_med, T, 0.0, float(x))
            measured0 = cps[x].psi / x
            assert rep0.total_lower <= measured0 <= rep0.total_upper
            rep1 = fm.explicit_formula_bound(zl_med, T, 1.0, float(x))
            measured1 = cps[x].delta + math.log(x) - EULER_GAMMA
            assert rep1.total_lower <= measured1 <= rep1.total_upper


def test_sandwich_sigma_half(zl_med):
    # direct summation of Lambda(n) n^-1/2 for a non-integer sigma
    x = 10 ** 5
    ns, ls = sv.lambda_segment(2, x)
    measured = float(np.sum(ls / np.sqrt(ns))) / math.sqrt(x)
    rep = fm.explicit_formula_bound(zl_med, 1000.0, 0.5, float(x))
    assert rep.total_lower <= measured <= rep.total_upper


def test_monotone_width_in_T(zl_med):
    widths = []
    for T in (300.0, 1e3, 2e3):
        r = fm.explicit_formula_bound(zl_med, T, 0.0, 1e7)
        widths.append(r.total_upper - r.total_lower)
    assert all(a >= b for a, b in zip(widths, widths[1:]))


def test_sigma_limit_residue_bookkeeping():
    # contribution(rho=sigma) + contribution(rho=1) -> log x - gamma
    from zetabounds.special import log_deriv_zeta
    x, T = 1e5, 4000.0
    target = math.log(x) - EULER_GAMMA
    vals = []
    for eps in (1e-3, 1e-4, 1e-5):
        sigma = 1.0 - eps
        y = math.pi * (1.0 - sigma) / T
        main = math.pi / T / math.tanh(y)
        pole = -log_deriv_zeta(complex(sigma)).value.real \
            * x ** (sigma - 1.0)
        vals.append(main + pole - target)
    assert abs(vals[-1]) < 1e-4 * math.log(x)
    assert abs(vals[-1]) < abs(vals[0])


def test_psi_concrete_bound_values():
    env, refined = fm.psi_concrete_bound(1e6)
    assert abs(env - (math.pi / 3e12 * 1e6 + 113.67 * 1e3)) < 1e-9
    assert refined is None
    env2, refined2 = fm.psi_concrete_bound(3e14)
    assert refined2 is not None
    # refined kicks in exactly at the height threshold
    assert TWO_PI * math.pi * math.sqrt(3e14) / math.log(3e14) >= 1e7
    x_below = 2.8e14
    assert fm.psi_concrete_bound(x_below)[1] is None


def test_psi_concrete_bound_vs_sieve():
    xs = [10 ** 4, 10 ** 6, 10 ** 8]
    for c in sv.psi_checkpoints(xs):
        env, _ = fm.psi_concrete_bound(float(c.x))
        assert abs(c.psi - c.x) <= env


# ----------------------------------------------------------------------
# counterexample
# ----------------------------------------------------------------------

def test_counterexample_tiny_x():
    # K = 1, x < 2: only n = 1 contributes F_K(0) = K + 1
    spec = fm.CounterexampleSpec(K=1, T=15.0, delta=0.5)
    mean, _ = fm.counterexample_mean(spec, 1, "+")
    x = math.exp((TWO_PI + 0.5) / 15.0)
    assert abs(mean - 2.0 / x) < 1e-14


def test_counterexample_residue_structure():
    # A(s) = sum (1-|k|/(K+1)) zeta(s-ikT) has residue 1 at s = 1: the
    # k = 0 coefficient is exactly 1
    K = 17
    k = np.arange(-K, K + 1)
    w = 1.0 - np.abs(k) / (K + 1.0)
    assert w[K] == 1.0
    assert np.all(w[np.abs(k) == K] > 0.0)


def test_counterexample_brackets():
    spec = fm.CounterexampleSpec(K=200, T=1.0, delta=0.1)
    mean, pred_plus = fm.counterexample_mean(spec, 2, "+")
    x = math.exp(TWO_PI * 2 + 0.1)
    allow = fm.fandango_allowance(spec, x)
    assert mean > pred_plus - allow
    assert mean < pred_plus + allow
    mean_m, pred_minus = fm.counterexample_mean(spec, 2, "-")
    assert mean > pred_minus


def test_counterexample_guards():
    with pytest.raises(ValueError):
        fm.CounterexampleSpec(K=0, T=1.0, delta=0.1)
    with pytest.raises(ValueError):
        fm.CounterexampleSpec(K=5, T=0.5, delta=0.1)
    with pytest.raises(ValueError):
        fm.counterexample_mean(fm.CounterexampleSpec(K=5, T=0.3 + 1.0,
                                                     delta=0.1), 5, "+")


# ----------------------------------------------------------------------
# Perron identity
# ----------------------------------------------------------------------

def _pair(lam, side):
    p = ex.ApproximantParams.make(lam, side)
    return (lambda t: ex.phi_weight(p, t)), (lambda y: ex.phi_hat(p, y))


def test_perron_single_coefficient():
    phi, phi_hat = _pair(0.5, ex.MAJORANT)
    d = fm.perron_identity_check([1.0], phi, phi_hat, 30.0, 1.2, 7.3)
    assert d < 1e-10


def test_perron_mangoldt_polynomial():
    ns, ls = sv.lambda_segment(2, 50)
    co = np.zeros(50)
    co[ns - 1] = ls
    phi, phi_hat = _pair(-0.8, ex.MINORANT)
    d = fm.perron_identity_check(co, phi, phi_hat, 20.0, 1.5, 31.7)
    assert d < 1e-6


def test_perron_triangle_pair():
    tri = lambda t: max(0.0, 1.0 - abs(t))
    tri_hat = lambda y: 1.0 if abs(y) < 1e-12 else \
        (math.sin(math.pi * y) / (math.pi * y)) ** 2
    d = fm.perron_identity_check([0.3, 1.1, 0.0, 2.2], tri, tri_hat,
                                 25.0, 0.8, 11.3)
    assert d < 1e-6


def test_perron_randomised_suite():
    rng = np.random.default_rng(25)
    for i in range(20):
        length = int(rng.integers(1, 101))
        coeffs = rng.uniform(0.0, 2.0, length)
        lam = float(rng.choice([0.3, 0.8, -0.6, 1.5]))
        side = ex.MAJORANT if i % 2 == 0 else ex.MINORANT
        phi, phi_hat = _pair(lam, side)
        T = float(rng.uniform(8.0, 40.0))
        sigma = float(rng.uniform(0.5, 2.0))
        x = float(rng.uniform(2.0, 50.0))
        assert fm.perron_identity_check(coeffs, phi, phi_hat, T, sigma,
                                        x) < 1e-6
