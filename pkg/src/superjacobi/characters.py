"""N=2 minimal-model spectrum and graded superdimensions.

The level-u family (u >= 2, central charge c(u) = 3 - 6/u) has u(u-1)/2
irreducible modules labeled by integer pairs (j, k) with j >= 0, k >= 1,
j + k < u.  The character of (j, k) is

    q^{jk/u} y^{(j-k+1)/u} P_{j,k}^{(u)} / P_{1/2,1/2}^{(2)}

with the infinite product

    P_{j,k}^{(u)} = prod_{n>=1}
        (1-q^{u(n-1)+j+k}) (1-q^{un-j-k}) (1-q^{un})^2
      / [(1-q^{un-j} y) (1-q^{u(n-1)+j} y^{-1}) (1-q^{un-k} y^{-1}) (1-q^{u(n-1)+k} y)].

Zero-q-exponent factors (only (1 - y^{+-1}), from j = 0 or shifted labels)
are kept as exact rational-function coefficients.  The normalized character
carries an extra y^{c/6}.

Spectral flow (the lattice part of the Jacobi action) acts on a normalized
character as multiplication by q^{c m^2/6} y^{c m/3} followed by y -> q^m y.
It is computed exactly at the level of product factors: each (1 - q^a y^s)
maps to (1 - q^{a+ms} y^s), and factors driven to negative exponents are
flipped via (1 - q^{-r} w) = -q^{-r} w (1 - q^r w^{-1}), which contributes an
exact monomial.  Termwise substitution on the truncated series would instead
require resumming infinite geometric tails, so it is not used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadLevel, NegativeExponent
from .ratfunc import RatFunc
from .series import QYSeries, mul_binomial, div_binomial


@dataclass(frozen=True)
class ModuleLabel:
    u: int
    j: Fraction
    k: Fraction
    generic: bool = False

    def __post_init__(self):
        if self.u < 2:
            raise BadLevel("u must be >= 2")
        object.__setattr__(self, "j", Fraction(self.j))
        object.__setattr__(self, "k", Fraction(self.k))
        if not self.generic:
            if self.j.denominator != 1 or self.k.denominator != 1:
                raise BadLevel("spectrum labels need integer j, k")
            if not (self.j >= 0 and self.k >= 1 and self.j + self.k < self.u):
                raise BadLevel(
                    f"(j, k) = ({self.j}, {self.k}) not in the level-{self.u} spectrum")

    def key(self):
        return (self.u, self.j, self.k)


@dataclass
class CharacterSeries:
    label: ModuleLabel
    series: QYSeries
    normalized: bool


def central_charge(u: int) -> Fraction:
    if u < 2:
        raise BadLevel("u must be >= 2")
    return Fraction(3) - Fraction(6, u)


def spectrum(u: int) -> list[ModuleLabel]:
    if u < 2:
        raise BadLevel("u must be >= 2")
    return [ModuleLabel(u, Fraction(j), Fraction(k))
            for j in range(u) for k in range(1, u) if j + k < u]


# -- product factors -----------------------------------------------------------

def _p_factors(u: int, j: Fraction, k: Fraction, qmax: Fraction):
    """Yield (a, yexp, side) for every factor of P_{j,k}^{(u)} with q-exponent
    a < qmax; side is +1 for numerator factors, -1 for denominator ones.

    Raises NegativeExponent if any factor exponent is negative.
    """
    n = 1
    while True:
        exps = [
            (u * (n - 1) + j + k, 0, +1),
            (u * n - j - k, 0, +1),
            (Fraction(u * n), 0, +1),
            (Fraction(u * n), 0, +1),
            (u * n - j, 1, -1),
            (u * (n - 1) + j, -1, -1),
            (u * n - k, -1, -1),
            (u * (n - 1) + k, 1, -1),
        ]
        emitted = False
        for a, yexp, side in exps:
            if a < 0:
                raise NegativeExponent(
                    f"factor exponent {a} < 0 for (u, j, k) = ({u}, {j}, {k})")
            if a < qmax:
                emitted = True
                yield a, yexp, side
        if not emitted and u * (n - 1) >= qmax:
            return
        n += 1


def _apply_factors(series: QYSeries, factors, qden: int) -> QYSeries:
    """Multiply/divide binomial factors into a series; q^0 factors are exact
    rational-function constants."""
    const = RatFunc.one()
    out = series
    for a, yexp, side in factors:
        a_scaled = Fraction(a) * qden
        if a_scaled.denominator != 1:
            raise ValueError("factor exponent off the grid")
        a_scaled = int(a_scaled)
        if a_scaled == 0:
            f = RatFunc({0: Fraction(1), yexp: Fraction(-1)})
            const = const * f if side > 0 else const * f.inverse()
        elif side > 0:
            out = mul_binomial(out, a_scaled, yexp, -1)
        else:
            out = div_binomial(out, a_scaled, yexp, -1)
    if not (const.is_const() and const.const_value() == 1):
        out = out.scale(const)
    return out


def p_product(label: ModuleLabel, q_order: Fraction,
              qden: int | None = None) -> QYSeries:
    """P_{j,k}^{(u)} exact to q^q_order, on the grid 1/qden (default 2u)."""
    u, j, k = label.u, label.j, label.k
    qden = qden if qden is not None else 2 * u
    tr = Fraction(q_order) * qden
    if tr.denominator != 1:
        raise ValueError("q_order not on the grid")
    out = QYSeries.one(int(tr), qden)
    return _apply_factors(out, _p_factors(u, j, k, q_order), qden)


_GENERIC_DENOM = (2, Fraction(1, 2), Fraction(1, 2))


def character(label: ModuleLabel, q_order: Fraction,
              normalized: bool = False) -> CharacterSeries:
    """The graded superdimension of L_u(j, k), exact to q^q_order.

    Grid is 1/(2u); the leading q-exponent is jk/u and the y-prefactor is
    (j - k + 1)/u, plus c(u)/6 when normalized.
    """
    u, j, k = label.u, label.j, label.k
    qden = 2 * u
    q_order = Fraction(q_order)
    num = p_product(label, q_order, qden)
    du, dj, dk = _GENERIC_DENOM
    den = p_product(ModuleLabel(du, dj, dk, generic=True), q_order, qden)
    ser = num * den.invert()
    ypref = Fraction(j - k + 1, 1) / u
    if normalized:
        ypref += central_charge(u) / 6
    ser = ser.shift(Fraction(j * k, 1) / u, ypref)
    return CharacterSeries(label, ser, normalized)


# -- spectral flow --------------------------------------------------------------

def _flowed_factors(u: int, j: Fraction, k: Fraction, m: int, qmax: Fraction):
    """Factors of P_{j,k}^{(u)}(q, q^m y), flips applied.

    Returns (factors, sign, q_shift, y_shift): the flipped-monomial prefactor
    is sign * q^{q_shift} y^{y_shift}.
    """
    sign = 1
    q_shift = Fraction(0)
    y_shift = 0
    factors = []
    # shifted exponents can be as low as -|m| * max y-window; enumerate with
    # headroom and flip anything negative
    n = 1
    while True:
        raw = [
            (u * (n - 1) + j + k, 0, +1),
            (u * n - j - k, 0, +1),
            (Fraction(u * n), 0, +1),
            (Fraction(u * n), 0, +1),
            (u * n - j, 1, -1),
            (u * (n - 1) + j, -1, -1),
            (u * n - k, -1, -1),
            (u * (n - 1) + k, 1, -1),
        ]
        emitted = False
        for a, yexp, side in raw:
            a2 = a + m * yexp
            if a2 < 0:
                # (1 - q^{a2} y^s) = -q^{a2} y^s (1 - q^{-a2} y^{-s})
                sign = -sign
                if side > 0:
                    q_shift += a2
                    y_shift += yexp
                else:
                    q_shift -= a2
                    y_shift -= yexp
                a2, yexp2 = -a2, -yexp
            else:
                yexp2 = yexp
            if a2 < qmax:
                emitted = True
                factors.append((a2, yexp2, side))
        if not emitted and u * (n - 1) - abs(m) >= qmax:
            return factors, sign, q_shift, y_shift
        n += 1


def spectral_flow_transform(c: CharacterSeries, m: int,
                            q_order: Fraction | None = None) -> QYSeries:
    """q^{c m^2/6} y^{c m/3} * chi(q, q^m y) for a normalized character.

    Exact to the input's q-order (or q_order if given); computed from the
    transformed product factors, so no series resummation is involved.
    """
    if not c.normalized:
        raise ValueError("spectral flow is defined on normalized characters")
    lab = c.label
    u, j, k = lab.u, lab.j, lab.k
    cc = central_charge(u)
    qden = 2 * u
    if q_order is None:
        q_order = Fraction(c.series.trunc, qden)
    q_order = Fraction(q_order)
    tr = int(q_order * qden)

    fac_n, sg_n, qs_n, ys_n = _flowed_factors(u, j, k, m, q_order)
    du, dj, dk = _GENERIC_DENOM
    fac_d, sg_d, qs_d, ys_d = _flowed_factors(du, dj, dk, m, q_order)

    ser = QYSeries.one(tr, qden)
    ser = _apply_factors(ser, fac_n, qden)
    den = QYSeries.one(tr, qden)
    den = _apply_factors(den, fac_d, qden)
    ser = ser * den.invert()

    ypref = Fraction(j - k + 1, 1) / u + cc / 6
    qpref = (Fraction(j * k, 1) / u           # original q-prefactor
             + m * ypref                      # y-prefactor hit by y -> q^m y
             + cc * m * m / 6                 # transform factor
             + qs_n - qs_d)                   # flip monomials
    ytot = ypref + Fraction(cc * m, 3) + ys_n - ys_d
    sign = sg_n * sg_d                        # denominator sign inverts itself
    ser = ser.shift(qpref, ytot)
    if sign < 0:
        ser = ser.scale(-1)
    return ser


@dataclass
class FlowMatch:
    source: ModuleLabel
    m: int
    target: ModuleLabel
    const: Fraction
    q_shift: Fraction
    y_shift: Fraction

    def to_dict(self) -> dict:
        return {"source": [int(self.source.j), int(self.source.k)],
                "m": self.m,
                "target": [int(self.target.j), int(self.target.k)],
                "const": str(self.const),
                "qShift": str(self.q_shift),
                "yShift": str(self.y_shift)}


def _monomial_ratio(a: QYSeries, b: QYSeries):
    """If a == const * q^dq * y^dy * b for a single rational const, return
    (const, dq, dy); else None.  Compares the visible windows."""
    if a.is_zero() or b.is_zero():
        return None
    d = a.qden * b.qden // gcd(a.qden, b.qden)
    aa, bb = a.rescale_grid(d), b.rescale_grid(d)
    ea, eb = min(aa.terms), min(bb.terms)
    dq = ea - eb
    window = min(aa.trunc, bb.trunc + dq)
    ca, cb = aa.terms[ea], bb.terms[eb]
    # leading coefficients must agree up to const * y^s0 for one (const, s0)
    if ca.den != cb.den:
        return None
    s0 = ca.num_min_exp() - cb.num_min_exp()
    cb0 = cb.mul_monomial(s0)
    sa = sorted(ca.num.items())
    sb = sorted(cb0.num.items())
    if [e for e, _ in sa] != [e for e, _ in sb]:
        return None
    const = sa[0][1] / sb[0][1]
    for e in range(min(ea, eb + dq), window):
        x = aa.terms.get(e, RatFunc.zero())
        y = bb.terms.get(e - dq, RatFunc.zero()).mul_monomial(s0).scale(const)
        if x != y:
            return None
    return const, Fraction(dq, d), aa.ypref - bb.ypref + s0


def find_flow_matches(u: int, m: int, q_order: Fraction) -> list[FlowMatch]:
    """Match the m-flow of every normalized level-u character against the
    normalized spectrum, up to a single monomial constant."""
    labels = spectrum(u)
    chars = {lab.key(): character(lab, q_order, normalized=True) for lab in labels}
    out = []
    for lab in labels:
        flowed = spectral_flow_transform(chars[lab.key()], m)
        hit = None
        for cand in labels:
            r = _monomial_ratio(flowed, chars[cand.key()].series)
            if r is not None:
                hit = FlowMatch(lab, m, cand, r[0], r[1], r[2])
                break
        if hit is None:
            raise ValueError(f"no spectral-flow match for {lab} at m={m}")
        out.append(hit)
    return out
