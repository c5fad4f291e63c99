from fractions import Fraction

import pytest

from superjacobi.errors import WindowTooSmall
from superjacobi.superalgebra import (C, FAMILIES, H, J, L, Q, BasisElt,
                                      SuperLinComb, bracket,
                                      realization, realization_bracket_check,
                                      super_jacobi_check, virasoro_map_check)

F = Fraction


def test_bracket_table_examples():
    assert bracket(L(2), L(-1)) == SuperLinComb.of((3, L(1)))
    assert bracket(J(1), J(-1)) == SuperLinComb.of((F(1, 3), C))
    assert bracket(H(1), Q(-1)) == SuperLinComb.of((1, L(0)), (-1, J(0)))
    assert bracket(L(2), J(-2)) == SuperLinComb.of((2, J(0)), (1, C))
    assert bracket(L(1), H(2)) == SuperLinComb.of((-2, H(3)))
    assert bracket(J(2), Q(3)) == SuperLinComb.of((1, Q(5)))
    assert bracket(J(1), H(1)) == SuperLinComb.of((-1, H(2)))


def test_bracket_zero_pairs():
    assert bracket(L(1), C).is_zero()
    assert bracket(C, Q(2)).is_zero()
    assert bracket(H(1), H(-1)).is_zero()
    assert bracket(Q(3), Q(-3)).is_zero()


def test_anti_supersymmetry():
    for fa in FAMILIES:
        for fb in FAMILIES:
            for m in range(-3, 4):
                for n in range(-3, 4):
                    a, b = BasisElt(fa, m), BasisElt(fb, n)
                    sign = -1 if (a.parity and b.parity) else 1
                    assert bracket(b, a) == bracket(a, b).scale(-sign)


def test_jacobi_triple_example():
    # (L1, H0, Q-1) cycles to zero; signs (-1)^{p(a)p(c)} etc. are +, +, -
    a, b, c = L(1), H(0), Q(-1)
    from superjacobi.superalgebra import bracket_comb
    total = (bracket_comb(SuperLinComb.of((1, a)), bracket(b, c))
             + bracket_comb(SuperLinComb.of((1, b)), bracket(c, a))
             + bracket_comb(SuperLinComb.of((1, c)), bracket(a, b)).scale(-1))
    assert total.is_zero()


def test_witt_triples():
    rep = super_jacobi_check(3)
    assert rep.passed


def test_jacobi_sweep_m6():
    rep = super_jacobi_check(6)
    assert rep.passed
    assert rep.checked == (4 * 13 + 1) ** 3


def test_virasoro_corrected_examples():
    # (1,-1): [L1 - J1, L-1] = 2 L0 - J0
    img1 = SuperLinComb.of((1, L(1)), (-1, J(1)))
    imgm1 = SuperLinComb.of((1, L(-1)), (0, J(-1)))
    from superjacobi.superalgebra import bracket_comb
    got = bracket_comb(img1, imgm1)
    assert got == SuperLinComb.of((2, L(0)), (-1, J(0)))
    rep = virasoro_map_check(6, naive=False)
    assert rep.passed


def test_virasoro_naive_fails_at_2_m2():
    rep = virasoro_map_check(6, naive=True)
    assert not rep.passed
    failing = {mn: diff for mn, diff in rep.violations}
    assert (2, -2) in failing
    # got - want = -C/2: the discrepancy is exactly C/2
    assert failing[(2, -2)] == SuperLinComb.of((F(-1, 2), C))


def test_realization_h0_q0_on_theta():
    # {H0, Q0} applied to theta matches L0(theta) = -theta
    from superjacobi.superalgebra import SuperPoly, _commutator_images
    za, ta = _commutator_images(realization(H(0)), realization(Q(0)))
    assert ta == SuperPoly({}, {0: F(-1)})
    l0_theta = realization(L(0)).apply(SuperPoly({}, {0: F(1)}))
    assert l0_theta == SuperPoly({}, {0: F(-1)})


def test_realization_jq_window():
    rep = realization_bracket_check(3, 8)
    assert rep.passed


def test_realization_full_and_cocycle_values():
    rep = realization_bracket_check(5, 12)
    assert rep.passed
    cocycle = {}
    for pair, m, n, c in rep.central_kernel:
        cocycle[(pair, m)] = c
    for m in range(-5, 6):
        if m != 0:
            lj = F(m * m + m, 6)
            if lj:
                assert cocycle.get(("LJ", m), F(0)) == lj
            jj = F(m, 3)
            assert cocycle.get(("JJ", m), F(0)) == jj
            hq = F(m * m - m, 6)
            if hq:
                assert cocycle.get(("HQ", m), F(0)) == hq


def test_window_too_small():
    with pytest.raises(WindowTooSmall):
        realization_bracket_check(5, 8)
