import random
from fractions import Fraction

import pytest

from superjacobi.elliptic import (LatticePoint, eval_wp,
                                  eval_zetabar, eval_zetabar_zseries,
                                  wp_pde_check, wp_pde_sides, wp_series,
                                  xi_series, xi_shift_check, xi_t_expansion,
                                  xi_zetabar_check, zetabar_series)
from superjacobi.errors import PolePoint
from superjacobi.numtheory import eisenstein_e, eisenstein_ghat
from superjacobi.ratfunc import RatFunc
from superjacobi.series import ZPiSeries

F = Fraction


def test_wp_structure():
    wp = wp_series(4, 10)
    assert wp.coeff(0, 2).same_visible(eisenstein_ghat(1, 10))
    assert wp.coeff(2, 4).same_visible(eisenstein_ghat(2, 10).scale(3))
    assert wp.coeff(-1, 0).is_zero() and wp.coeff(1, 2).is_zero()
    assert wp.coeff(-2, 0).terms == {0: RatFunc.one()}


def test_zetabar_structure():
    zb = zetabar_series(4, 10)
    assert zb.coeff(-1, -1).terms == {0: RatFunc.const(-1)}
    assert zb.coeff(1, 1).same_visible(eisenstein_ghat(1, 10))
    assert zb.coeff(3, 3).same_visible(eisenstein_ghat(2, 10))


def test_zderiv_relation_exact():
    # d/dz(-pi * zetabar) == -wp for all z-orders up to 8
    for K in (3, 5, 8):
        T = 40 if K < 8 else 25
        wp = wp_series(K, T)
        zb = zetabar_series(K, T)
        lhs = zb.pi_shift(1).z_deriv().scale(-1)
        assert not lhs.diff_exponents(wp.scale(-1))


def test_wp_pde_passes():
    rep = wp_pde_check(6, 40)
    assert rep.passed
    assert rep.orders["zWindow"] >= 9   # covers the z^8 component


def test_wp_pde_higher_orders():
    for K, window in [(7, 12), (8, 14)]:
        rep = wp_pde_check(K, 30)
        assert rep.passed
        assert rep.orders["zWindow"] == window


def test_wp_pde_z0_is_e2_identity():
    # z^0 component at pi^3: qD(ghat2) = 5 ghat4 - ghat2^2,
    # equivalently q dE2/dq = (E2^2 - E4)/12
    T = 30
    lhs, rhs = wp_pde_sides(5, T)
    l0 = lhs.coeff(0, 3)
    r0 = rhs.coeff(0, 3)
    e2 = eisenstein_e(1, T)
    e4 = eisenstein_e(2, T)
    identity_lhs = e2.q_log_deriv().scale(F(-1, 12))
    g4 = eisenstein_ghat(2, T)
    # l0 - transport == identity_lhs + transport cancels within the check:
    # directly verify the component equality and its E-form
    assert l0.same_visible(r0)
    d = l0 - r0
    assert d.is_zero()
    # E-form: qD(E2) == (E2^2 - E4)/12 as series
    assert e2.q_log_deriv().same_visible((e2 * e2 - e4).scale(F(1, 12)))


def test_wp_pde_sensitive_to_perturbation():
    # perturbing ghat4 by +q breaks the identity at finitely many exponents
    K, T = 5, 20
    wp = wp_series(K, T)
    zb = zetabar_series(K, T)
    lhs = wp.q_log_deriv().pi_shift(1) + zb * wp.z_deriv()
    from superjacobi.series import QYSeries
    bad_g4 = eisenstein_ghat(2, T) + QYSeries(1, F(0), {1: RatFunc.one()}, T)
    g2z = ZPiSeries({(0, 2): eisenstein_ghat(1, T)}, 10 ** 9, T)
    g4z = ZPiSeries({(0, 4): bad_g4}, 10 ** 9, T)
    rhs = ((wp * wp).scale(2) - (g2z * wp).scale(6)
           + (g2z * g2z).scale(3) - g4z.scale(15)).pi_shift(-1)
    fails = lhs.diff_exponents(rhs)
    assert fails and len(fails) < 50


def test_xi_series_coefficients():
    xi = xi_series(5)
    # q^0: -1/2 - 1/(x-1) = (-x/2 - 1/2)/(x - 1)
    assert xi.terms[0] == RatFunc({1: F(-1, 2), 0: F(-1, 2)},
                                  {1: F(1), 0: F(-1)})
    assert xi.terms[1] == RatFunc({1: F(1), -1: F(-1)})
    assert xi.terms[2] == RatFunc({2: F(1), 1: F(1), -1: F(-1), -2: F(-1)})


def test_xi_shift():
    rep = xi_shift_check(30)
    assert rep.passed
    bad = xi_shift_check(30, offset=F(2))
    assert not bad.passed
    assert any(e == 0 for e, _ in bad.failures)


def test_xi_t_leading_pole():
    t_exp = xi_t_expansion(4, 10)
    lead = t_exp.coeff(-1, -1)
    assert lead.terms == {0: RatFunc.const(-1)}


def test_xi_zetabar_t1_is_e2():
    # the t^1 coefficient of the xi expansion equals ghat2 (hence E2)
    t_exp = xi_t_expansion(4, 12)
    assert t_exp.coeff(1, 1).same_visible(eisenstein_ghat(1, 12))


def test_xi_zetabar_full():
    rep = xi_zetabar_check(8, 30)
    assert rep.passed


def test_numeric_quasi_periodicity_sampled():
    rng = random.Random(11)
    for _ in range(20):
        tau = complex(rng.uniform(-0.4, 0.4), rng.uniform(0.8, 1.5))
        t = complex(rng.uniform(0.05, 0.6), rng.uniform(0.02, 0.4))
        p = LatticePoint(t, tau)
        z0 = eval_zetabar(p)
        assert abs(eval_zetabar(LatticePoint(t + tau, tau)) - z0 - 1) < 1e-9
        assert abs(eval_zetabar(LatticePoint(t + 1, tau)) - z0) < 1e-9
        w0 = eval_wp(p)
        assert abs(eval_wp(LatticePoint(t + tau, tau)) - w0) < 1e-8
        assert abs(eval_wp(LatticePoint(t + 1, tau)) - w0) < 1e-8


def test_numeric_pole_guard():
    with pytest.raises(PolePoint):
        eval_zetabar(LatticePoint(1e-9 + 0j, 1j))
    with pytest.raises(PolePoint):
        eval_wp(LatticePoint(1.0 + 1j, 1j))  # t = 1 + tau is a lattice point


def test_two_evaluation_routes_agree_near_zero():
    for t in (0.05, 0.1, 0.03 + 0.06j, -0.08 + 0.02j):
        p = LatticePoint(t, 1j)
        a = eval_zetabar(p)
        b = eval_zetabar_zseries(p, 8, 30)
        assert abs(a - b) < 1e-8
