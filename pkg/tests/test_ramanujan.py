from fractions import Fraction

import pytest

from superjacobi.errors import OutOfRange
from superjacobi.numtheory import eisenstein_e
from superjacobi.ramanujan import (e_variable_form, extract_ode_family,
                                   ramanujan_triple)

F = Fraction


def test_triple_exact():
    for idt in ramanujan_triple(60):
        assert idt.holds()
        assert idt.first_failure_order() is None


def test_e2_order_q_coefficient():
    idt = ramanujan_triple(5)[0]
    assert idt.lhs.coeff(1).const_value() == -24
    # RHS at q^1: (2*(-24) - 240)/12 = -24
    assert idt.rhs.coeff(1).const_value() == F(-48 - 240, 12)


def test_negative_control_wrong_constant():
    T = 10
    e2 = eisenstein_e(1, T)
    e4 = eisenstein_e(2, T)
    wrong = (e2 * e2 - e4).scale(F(1, 6))
    resid = e2.q_log_deriv() - wrong
    assert not resid.is_zero()
    assert min(resid.terms) == 1


def test_extract_family_exact():
    for k in (1, 2, 3, 4):
        idt = extract_ode_family(k, 7, 60)
        assert idt.holds(), f"k={k}"
        assert idt.source_z_exponent == 2 * k - 2


def test_extract_family_deeper():
    for k in (5, 6):
        assert extract_ode_family(k, 8, 40).holds()


def test_extract_out_of_range():
    with pytest.raises(OutOfRange):
        extract_ode_family(5, 6, 10)


def test_normalization_consistency():
    # rewriting k=1..3 in E-variables reproduces the classical displays
    T = 40
    e = {k: eisenstein_e(k, T) for k in (1, 2, 3)}
    displays = {
        1: (e[1] * e[1] - e[2]).scale(F(1, 12)),
        2: (e[1] * e[2] - e[3]).scale(F(1, 3)),
        3: (e[1] * e[3] - e[2] * e[2]).scale(F(1, 2)),
    }
    for k in (1, 2, 3):
        idt = extract_ode_family(k, 6, T)
        lhs_e, rhs_e = e_variable_form(idt)
        assert lhs_e.same_visible(e[k].q_log_deriv())
        assert rhs_e.same_visible(displays[k])
