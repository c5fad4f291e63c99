"""Weierstrass wp and zeta-bar as formal z/pi-hat/q-series, the function
xi(x, q) in partial-fraction form, their mutual consistency checks, and
complex numerical evaluation.

Conventions (pi-hat is the formal symbol for 2*pi*i):

    wp       = z^-2 + sum_{k>=1} (2k-1) z^{2k-2} pi^{2k} ghat_{2k}
    zeta-bar = -pi^-1 z^-1 + sum_{k>=1} pi^{2k-1} z^{2k-1} ghat_{2k}

so that -pi * zeta-bar = z^-1 - sum z^{2k-1} G_{2k} and d/dz of that equals
-wp exactly.  zeta-bar is 1-periodic and gains +1 under z -> z + tau.

The partial-fraction form implemented here is

    xi(x, q) = -1/2 - 1/(x-1) - sum_{n != 0} (1/(q^n x - 1) - 1/(q^n - 1)),

whose q^0 coefficient is -1/2 - 1/(x-1) and whose q^j coefficient (j >= 1)
is sum_{m | j} (x^m - x^{-m}).  This is the sign under which xi equals
zeta-bar at x = e^{2 pi i t} and satisfies xi(qx, q) = xi(x, q) + 1; the
opposite overall sign satisfies neither.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import PolePoint
from .numtheory import bernoulli, eisenstein_ghat
from .ratfunc import RatFunc
from .series import QYSeries, ZPiSeries


# -- formal series ------------------------------------------------------------

def wp_series(z_order: int, q_order: int) -> ZPiSeries:
    """wp to z-exponent 2*z_order - 2 inclusive; first unknown is 2*z_order."""
    if z_order < 1:
        raise ValueError("z_order must be >= 1")
    terms = {(-2, 0): QYSeries.one(q_order)}
    for k in range(1, z_order + 1):
        g = eisenstein_ghat(k, q_order).scale(2 * k - 1)
        terms[(2 * k - 2, 2 * k)] = g
    return ZPiSeries(terms, 2 * z_order, q_order)


def zetabar_series(z_order: int, q_order: int) -> ZPiSeries:
    """zeta-bar to z-exponent 2*z_order - 1 inclusive."""
    if z_order < 1:
        raise ValueError("z_order must be >= 1")
    terms = {(-1, -1): -QYSeries.one(q_order)}
    for k in range(1, z_order + 1):
        terms[(2 * k - 1, 2 * k - 1)] = eisenstein_ghat(k, q_order)
    return ZPiSeries(terms, 2 * z_order + 1, q_order)


@dataclass
class CheckReport:
    check: str
    orders: dict
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"check": self.check, "orders": self.orders,
                "passed": self.passed,
                "failures": [list(f) for f in self.failures],
                **({"notes": self.notes} if self.notes else {})}


def _ghat_zpi(k: int, q_order: int) -> ZPiSeries:
    """G_{2k} as a ZPiSeries: pi-hat^{2k} * ghat_{2k} at z^0."""
    return ZPiSeries({(0, 2 * k): eisenstein_ghat(k, q_order)}, 10 ** 9, q_order)


def wp_pde_sides(z_order: int, q_order: int) -> tuple[ZPiSeries, ZPiSeries]:
    """Both sides of the tau-derivative PDE for wp.

    LHS = d_tau wp + zeta-bar * d_z wp  with  d_tau = pi-hat * (q d/dq).
    RHS = pi-hat^-1 (2 wp^2 - 6 G_2 wp + 3 G_2^2 - 15 G_4).

    The RHS coefficients are the ones consistent with the G_2-inclusive wp
    normalization used here; the z^0 component is then exactly the E_2
    Ramanujan identity (see the extract_ode_family docstring).
    """
    wp = wp_series(z_order, q_order)
    zb = zetabar_series(z_order, q_order)
    lhs = wp.q_log_deriv().pi_shift(1) + zb * wp.z_deriv()
    g2 = _ghat_zpi(1, q_order)
    g4 = _ghat_zpi(2, q_order)
    rhs = (wp * wp).scale(2) - (g2 * wp).scale(6) + (g2 * g2).scale(3) - g4.scale(15)
    return lhs, rhs.pi_shift(-1)


def wp_pde_check(z_order: int, q_order: int) -> CheckReport:
    """Coefficientwise comparison of the two PDE sides.

    The provable z-window after truncation propagation is 2*z_order - 2
    (exclusive), i.e. the identity is certified for the z^{2k-2} components
    with k <= z_order - 2.
    """
    if z_order < 3:
        raise ValueError("z_order must be >= 3 for a nonempty window")
    lhs, rhs = wp_pde_sides(z_order, q_order)
    failures = lhs.diff_exponents(rhs)
    window = min(lhs.ztrunc, rhs.ztrunc)
    return CheckReport("wp-pde",
                       {"zOrder": z_order, "qOrder": q_order,
                        "zWindow": window},
                       failures)


# -- xi: partial fractions ----------------------------------------------------

@dataclass
class XiSeries:
    """Map q-exponent -> rational function of x; only the q^0 coefficient may
    carry a denominator (it is -1/2 - 1/(x-1))."""
    terms: dict[int, RatFunc]
    trunc: int

    def coeff(self, j: int) -> RatFunc:
        return self.terms.get(j, RatFunc.zero())


def xi_series(q_order: int) -> XiSeries:
    one = Fraction(1)
    x_minus_1 = RatFunc({1: one, 0: -one})
    c0 = RatFunc.const(Fraction(-1, 2)) - x_minus_1.inverse()
    terms = {0: c0}
    for j in range(1, q_order):
        c = RatFunc.zero()
        for m in range(1, j + 1):
            if j % m == 0:
                c = c + RatFunc.monomial(1, m) - RatFunc.monomial(1, -m)
        terms[j] = c
    return XiSeries(terms, q_order)


def _expand_inverse_direction(r: RatFunc, order: int) -> dict[int, Fraction]:
    """Coefficients of the expansion of r(x) in descending powers of x.

    Returns {e: c} meaning  r = sum c_e x^{-e}  for e < order (e may be
    negative when r grows at infinity).  Uses the series engine on v = 1/x.
    """
    exps = [abs(s) for s in r.num] + [abs(s) for s in r.den]
    pad = 3 * (max(exps, default=0) + 1)
    num = QYSeries(1, Fraction(0),
                   {-s: RatFunc.const(c) for s, c in r.num.items()}, order + pad)
    den = QYSeries(1, Fraction(0),
                   {-s: RatFunc.const(c) for s, c in r.den.items()}, order + pad)
    piece = num * den.invert()
    return {e: c.const_value() for e, c in piece.terms.items() if e < order}


def xi_shift_check(q_order: int, offset: Fraction = Fraction(1)) -> CheckReport:
    """Verify xi(qx, q) = xi(x, q) + offset from the truncated data.

    The substitution converts the q^0 pole term into a q-series via
    -1/(qx - 1) = sum_{m>=0} q^m x^m.  Orders 1 <= j <= (T-1)//2 are compared
    exactly as Laurent polynomials; the q^0 coefficient is compared after
    expanding the rational target in descending powers of x through x^{-(T-1)}.
    A correct run passes only for offset = 1.
    """
    xi = xi_series(q_order)
    T = q_order
    computed: dict[int, dict[int, Fraction]] = {}

    def put(e: int, s: int, c: Fraction):
        if e < T and c:
            row = computed.setdefault(e, {})
            row[s] = row.get(s, Fraction(0)) + c
            if not row[s]:
                del row[s]

    # source q^0: -1/2 - 1/(qx-1) = -1/2 + sum_{m>=0} q^m x^m
    put(0, 0, Fraction(-1, 2))
    for m in range(0, T):
        put(m, m, Fraction(1))
    # sources q^j, Laurent-polynomial coefficients
    for j in range(1, T):
        for s, c in xi.terms[j].num.items():
            put(j + s, s, c)

    failures: list[tuple[int, int]] = []
    half = (T - 1) // 2
    for e in range(1, half + 1):
        target = dict(xi.terms[e].num)
        got = computed.get(e, {})
        for s in set(target) | set(got):
            if target.get(s, Fraction(0)) != got.get(s, Fraction(0)):
                failures.append((e, s))
    # q^0: compare in the x^{-1} direction through x^{-(T-1)}
    target0 = xi.terms[0] + RatFunc.const(offset)
    exp0 = _expand_inverse_direction(target0, T)
    got0 = computed.get(0, {})
    for r in range(0, T):
        want = exp0.get(r, Fraction(0))
        have = got0.get(-r, Fraction(0))
        if want != have:
            failures.append((0, -r))
    return CheckReport("xi-shift", {"qOrder": q_order, "comparedThrough": half,
                                    "offset": str(offset)}, failures)


def xi_t_expansion(t_order: int, q_order: int) -> ZPiSeries:
    """Expand xi(e^{2 pi i t}, q) in powers of t, pi-hat graded.

    The q^0 pole term expands through the Bernoulli generating function
    (1/(e^w - 1) = w^-1 sum B_n w^n / n!); each x^m - x^{-m} contributes
    2 (m w)^r / r! over odd r, with w = pi-hat t.
    """
    terms: dict[tuple[int, int], dict[int, Fraction]] = {}

    def put(r: int, j: int, c: Fraction):
        if c:
            row = terms.setdefault((r, r), {})
            row[j] = row.get(j, Fraction(0)) + c

    # q^0 coefficient: -1/2 - 1/(e^w - 1) = -w^-1 - sum_{n>=1} B_n w^{n-1}/n! - 1/2
    put(-1, 0, Fraction(-1))
    for n in range(1, t_order + 2):
        put(n - 1, 0, -bernoulli(n) / factorial(n))
    put(0, 0, Fraction(-1, 2))
    # q^j coefficients
    for j in range(1, q_order):
        for m in range(1, j + 1):
            if j % m == 0:
                for r in range(1, t_order + 1, 2):
                    put(r, j, Fraction(2 * m ** r, factorial(r)))
    zterms = {}
    for (r, p), row in terms.items():
        if r > t_order:
            continue
        qs = QYSeries(1, Fraction(0),
                      {j: RatFunc.const(c) for j, c in row.items()}, q_order)
        if not qs.is_zero():
            zterms[(r, p)] = qs
    return ZPiSeries(zterms, t_order + 1, q_order)


def xi_zetabar_check(t_order: int, q_order: int) -> CheckReport:
    """Coefficientwise equality of the t-expansion of xi with zeta-bar.

    This re-derives every Eisenstein q-expansion with 2k - 1 <= t_order from
    the partial-fraction form.
    """
    if t_order < 2:
        raise ValueError("t_order must be >= 2")
    lhs = xi_t_expansion(t_order, q_order)
    half_k = (t_order + 1) // 2
    rhs = zetabar_series(half_k, q_order)
    window = min(lhs.ztrunc, 2 * half_k)
    failures = [f for f in lhs.diff_exponents(rhs) if f[0] < window]
    return CheckReport("xi-zetabar", {"tOrder": t_order, "qOrder": q_order,
                                      "tWindow": window}, failures)


# -- numerics ------------------------------------------------------------------

@dataclass(frozen=True)
class LatticePoint:
    t: complex
    tau: complex

    def __post_init__(self):
        if self.tau.imag <= 0:
            raise ValueError("Im(tau) must be positive")


def _lattice_distance(t: complex, tau: complex) -> float:
    a = t.imag / tau.imag
    b = t.real - a * tau.real
    da = a - round(a)
    db = b - round(b)
    return abs(da * tau + db)


def _tail_terms(q_abs: float, tol: float) -> int:
    import math
    if q_abs >= 1:
        raise ValueError("|q| must be < 1")
    n = int(math.log(tol) / math.log(q_abs)) + 8
    return max(n, 8)


def eval_zetabar(p: LatticePoint, tol: float = 1e-15) -> complex:
    """zeta-bar(t, tau) by partial sums of the partial-fraction form.

    Pairs the n and -n terms; the geometric tail bound at |q| fixes the
    cutoff so the truncation error is below tol (relative, away from poles).
    """
    if _lattice_distance(p.t, p.tau) < 1e-8:
        raise PolePoint("t is within 1e-8 of a lattice point")
    q = cmath.exp(2j * cmath.pi * p.tau)
    x = cmath.exp(2j * cmath.pi * p.t)
    total = -0.5 - 1.0 / (x - 1.0)
    N = _tail_terms(abs(q), tol)
    for n in range(1, N + 1):
        qn = q ** n
        total -= 1.0 / (qn * x - 1.0) - 1.0 / (qn - 1.0)
        qm = q ** (-n)
        total -= 1.0 / (qm * x - 1.0) - 1.0 / (qm - 1.0)
    return total


def eval_wp(p: LatticePoint, tol: float = 1e-15) -> complex:
    """wp(t, tau) = 2 pi i * d/dt zeta-bar, differentiated termwise.

    Each partial fraction -1/(q^n x - 1) contributes q^n x/(q^n x - 1)^2
    under x d/dx, and wp = (2 pi i)^2 (x d/dx) xi.
    """
    if _lattice_distance(p.t, p.tau) < 1e-8:
        raise PolePoint("t is within 1e-8 of a lattice point")
    q = cmath.exp(2j * cmath.pi * p.tau)
    x = cmath.exp(2j * cmath.pi * p.t)
    total = x / (x - 1.0) ** 2
    N = _tail_terms(abs(q), tol) + 4
    for n in range(1, N + 1):
        for qn in (q ** n, q ** (-n)):
            total += qn * x / (qn * x - 1.0) ** 2
    return (2j * cmath.pi) ** 2 * total


def eval_zetabar_zseries(p: LatticePoint, z_order: int, q_order: int) -> complex:
    """Independent route: evaluate the z-series of zeta-bar at pi-hat = 2 pi i.

    Only accurate for |t| small relative to the lattice; used to cross-check
    the partial-fraction evaluation near t = 0.
    """
    zb = zetabar_series(z_order, q_order)
    q = cmath.exp(2j * cmath.pi * p.tau)
    pihat = 2j * cmath.pi
    total = 0j
    for (zexp, piexp), coeff in zb.terms.items():
        val = coeff.eval_numeric(q, 1.0, tau=p.tau)
        total += val * (p.t ** zexp) * (pihat ** piexp)
    return total
