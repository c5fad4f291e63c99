from fractions import Fraction

import pytest

from superjacobi.errors import IncompatiblePrefactor, NotAUnit, PoleProximity
from superjacobi.ratfunc import RatFunc
from superjacobi.series import QYSeries, ZPiSeries, mul_binomial

from conftest import rand_series, rand_unit

F = Fraction


def poly(**kw):
    """poly(e0=c0, e1=c1, ...) with keys like m2 for -2."""
    d = {}
    for k, v in kw.items():
        e = int(k[1:]) * (-1 if k[0] == "m" else 1)
        d[e] = F(v)
    return RatFunc(d)


def qs(terms, trunc, qden=1, ypref=F(0)):
    return QYSeries(qden, ypref, terms, trunc)


# -- add ------------------------------------------------------------------

def test_add_cancellation():
    a = qs({0: RatFunc.one(), 1: RatFunc.one()}, 6)
    b = qs({0: RatFunc.one(), 1: RatFunc.const(-1)}, 6)
    s = a + b
    assert s.terms == {0: RatFunc.const(2)}


def test_add_grid_unification():
    a = qs({1: RatFunc.one()}, 6, qden=2)       # q^{1/2} to order q^3
    b = qs({1: RatFunc.one()}, 3, qden=1)       # q to order q^3
    s = a + b
    assert s.qden == 2
    assert s.terms == {1: RatFunc.one(), 2: RatFunc.one()}
    assert s.trunc == 6


def test_add_incompatible_prefactor():
    a = QYSeries(1, F(1, 3), {0: RatFunc.one()}, 4)
    b = QYSeries(1, F(2, 3), {0: RatFunc.one()}, 4)
    with pytest.raises(IncompatiblePrefactor):
        a + b


def test_add_integer_prefactor_fold():
    a = QYSeries(1, F(4, 3), {0: RatFunc.one()}, 4)
    b = QYSeries(1, F(1, 3), {0: RatFunc.one()}, 4)
    s = a + b
    assert s.ypref == F(1, 3)
    assert s.terms[0] == poly(p0=1, p1=1)


# -- mul ------------------------------------------------------------------

def test_mul_telescoping():
    one = QYSeries.one(5)
    geo = qs({e: RatFunc.one() for e in range(5)}, 5)
    prod = mul_binomial(geo, 1, 0, -1)       # (1-q) * (1+q+...+q^4)
    assert prod.terms == {0: RatFunc.one()}


def test_mul_field_inverse_coefficient():
    r = poly(p0=1, m1=-1)                     # 1 - y^{-1}
    a = qs({0: r}, 4)
    b = qs({0: r.inverse()}, 4)
    assert (a * b).terms == {0: RatFunc.one()}


def test_mul_matches_naive_convolution(rng):
    for _ in range(30):
        a = rand_series(rng, trunc=12, nterms=8)
        b = rand_series(rng, trunc=12, nterms=8)
        prod = a * b
        # brute-force double loop, same truncation rule
        tr = min(a.trunc + b.valuation(), b.trunc + a.valuation())
        acc = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                if ea + eb < tr:
                    cur = acc.get(ea + eb, RatFunc.zero())
                    acc[ea + eb] = cur + ca * cb
        acc = {e: c for e, c in acc.items() if not c.is_zero()}
        assert prod.terms == acc and prod.trunc == tr


def test_mul_truncation_respects_valuations():
    a = qs({2: RatFunc.one()}, 5)             # q^2 + O(q^5)
    b = qs({3: RatFunc.one()}, 7)             # q^3 + O(q^7)
    assert (a * b).trunc == min(5 + 3, 7 + 2)


# -- invert ---------------------------------------------------------------

def test_invert_geometric():
    a = mul_binomial(QYSeries.one(4), 1, 0, -1)    # 1 - q, T=4
    inv = a.invert()
    assert inv.terms == {e: RatFunc.one() for e in range(4)}


def test_invert_with_y():
    # 1 - q^{1/2} y on grid 2, three stored half-steps
    a = QYSeries(2, F(0), {0: RatFunc.one(), 1: poly(p1=-1)}, 3)
    inv = a.invert()
    assert inv.terms == {0: RatFunc.one(), 1: poly(p1=1), 2: poly(p2=1)}


def test_invert_zero_raises():
    with pytest.raises(NotAUnit):
        QYSeries.zero(5).invert()


def test_invert_two_sided(rng):
    for _ in range(40):
        u = rand_unit(rng, trunc=10)
        inv = u.invert()
        prod = u * inv
        assert prod.terms == {0: RatFunc.one()}
        assert (inv * u).terms == {0: RatFunc.one()}


# -- q log deriv ------------------------------------------------------------

def test_qlogderiv_monomial():
    a = qs({0: RatFunc.one(), 1: RatFunc.const(-24)}, 9)
    d = a.q_log_deriv()
    assert d.terms == {1: RatFunc.const(-24)}


def test_qlogderiv_fractional():
    a = QYSeries(3, F(0), {1: RatFunc.one()}, 9)       # q^{1/3}
    d = a.q_log_deriv()
    assert d.terms == {1: RatFunc.const(F(1, 3))}


def test_qlogderiv_leibniz(rng):
    for _ in range(40):
        f = rand_series(rng, trunc=9, nterms=6)
        g = rand_series(rng, trunc=9, nterms=6)
        lhs = (f * g).q_log_deriv()
        rhs = f.q_log_deriv() * g + f * g.q_log_deriv()
        assert lhs.same_visible(rhs)


# -- substitute_y -------------------------------------------------------------

def test_substitute_simple():
    a = qs({0: poly(p1=1), 1: RatFunc.one()}, 6)       # y + q
    t = a.substitute_y(1)
    assert t.terms == {1: poly(p0=1, p1=1)}            # qy + q


def test_substitute_prefactor_grid_refined():
    a = QYSeries(1, F(1, 3), {0: RatFunc.one()}, 4)    # y^{1/3}
    t = a.substitute_y(1)
    assert t.qden == 3
    assert t.ypref == F(1, 3)
    assert t.terms == {1: RatFunc.one()}               # q^{1/3} y^{1/3}


def test_substitute_composition(rng):
    for _ in range(30):
        f = rand_series(rng, trunc=10, nterms=6, ymin=0, ymax=4)
        once = f.substitute_y(1).substitute_y(1)
        twice = f.substitute_y(2)
        assert once.same_visible(twice)


def _ylogderiv_independent(f: QYSeries) -> QYSeries:
    """y d/dy recomputed directly from the term dicts (test-side oracle)."""
    terms = {}
    for e, r in f.terms.items():
        num = {s: c * (F(s) + f.ypref) for s, c in r.num.items()}
        piece = RatFunc(num, dict(r.den))
        dd = {s - 1: c * s for s, c in r.den.items() if s}
        if dd:
            piece = piece - RatFunc(dict(r.num), dict(r.den)) * \
                RatFunc(dd, dict(r.den)).mul_monomial(1)
        if not piece.is_zero():
            terms[e] = piece
    return QYSeries(f.qden, f.ypref, terms, f.trunc)


def test_ylogderiv_against_independent_route(rng):
    for _ in range(40):
        f = rand_series(rng, trunc=9, nterms=5, ypref=F(1, 3), rational=True)
        assert f.y_log_deriv().same_visible(_ylogderiv_independent(f))


def test_substitute_chain_rule(rng):
    # q d/dq (f(y -> q^m y)) == (q d/dq f + m * y d/dy f)(y -> q^m y),
    # with y d/dy supplied by the independent test-side route
    for _ in range(30):
        f = rand_series(rng, trunc=10, nterms=6, ymin=0, ymax=4,
                        ypref=F(0), rational=False)
        for m in (1, 2):
            lhs = f.substitute_y(m).q_log_deriv()
            rhs = (f.q_log_deriv()
                   + _ylogderiv_independent(f).scale(m)).substitute_y(m)
            assert lhs.same_visible(rhs)


def test_substitute_rational_resummation():
    # 1/(1 - y^{-1}) under y -> qy resums to -qy/(1-qy) = -sum q^r y^r
    r = poly(p0=1, m1=-1).inverse()
    a = qs({0: r}, 5)
    t = a.substitute_y(1)
    assert t.terms == {e: poly(**{f"p{e}": -1}) for e in range(1, 5)}


def test_substitute_rational_negative_shift():
    # 1/(1 - y) under y -> y/q: the denominator acquires a negative-valuation
    # unit, and the expansion is -sum_{r>=1} q^r y^{-r}
    r = RatFunc({0: F(1)}, {0: F(1), 1: F(-1)})
    a = qs({0: r}, 5)
    t = a.substitute_y(-1)
    assert t.terms == {e: poly(**{f"m{e}": -1}) for e in range(1, 5)}


# -- eval ---------------------------------------------------------------------

def test_eval_simple():
    import cmath
    a = qs({0: RatFunc.one(), 1: RatFunc.one()}, 5)
    q = cmath.exp(-2 * cmath.pi)
    assert abs(a.eval_numeric(q, 1.0) - (1 + q)) < 1e-15
    assert abs((1 + q) - 1.0018674427) < 1e-9


def test_eval_pole():
    r = poly(p0=1, m1=-1).inverse()
    a = qs({0: r}, 3)
    with pytest.raises(PoleProximity):
        a.eval_numeric(0.1, 1.0)


def test_eval_homomorphism(rng):
    import cmath
    q = 0.11 + 0.07j
    y = cmath.exp(0.4j) * 1.2
    for _ in range(100):
        # support bounded well below the truncation: the product loses nothing
        f = QYSeries(1, F(0), rand_series(rng, trunc=4, nterms=4).terms, 20)
        g = QYSeries(1, F(0), rand_series(rng, trunc=4, nterms=4).terms, 20)
        lhs = (f * g).eval_numeric(q, y)
        rhs = f.eval_numeric(q, y) * g.eval_numeric(q, y)
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))


def test_canonical_uniqueness(rng):
    for _ in range(60):
        f = rand_series(rng, trunc=9, nterms=6)
        g = rand_series(rng, trunc=9, nterms=6)
        diff = f - g
        assert diff.is_zero() == (f.terms == g.terms)


def test_serialization_roundtrip(rng):
    for _ in range(20):
        f = rand_series(rng, trunc=9, nterms=5, ypref=F(1, 6), rational=True)
        assert QYSeries.from_json(f.to_json()) == f


def test_json_schema_fields():
    f = QYSeries(6, F(1, 2), {2: poly(p1=1, m1=F(1, 3))}, 12)
    d = f.to_dict()
    assert d["qDenom"] == 6 and d["yPrefactor"] == "1/2" and d["truncation"] == 12
    assert d["terms"][0]["qExp"] == 2
    assert ["1/1", "1/3"] == sorted(v for _, v in d["terms"][0]["num"])


# -- ZPiSeries ------------------------------------------------------------------

def test_zp_zderiv_power_rule():
    s = ZPiSeries({(-1, 0): QYSeries.one(5)}, 10, 5)
    d = s.z_deriv()
    assert set(d.terms) == {(-2, 0)}
    assert d.terms[(-2, 0)].terms == {0: RatFunc.const(-1)}


def test_zp_pi_grading_additive():
    a = ZPiSeries({(1, 2): QYSeries.one(5)}, 10, 5)
    b = ZPiSeries({(2, 3): QYSeries.one(5)}, 10, 5)
    p = a * b
    assert set(p.terms) == {(3, 5)}


def test_zp_exponent_bookkeeping():
    a = ZPiSeries({(-2, 0): QYSeries.one(5)}, 10, 5)
    g4 = QYSeries.const(F(1, 240), 5)
    b = ZPiSeries({(2, 4): g4}, 10, 5)
    p = a * b
    assert set(p.terms) == {(0, 4)}
    assert p.terms[(0, 4)].terms == g4.terms
