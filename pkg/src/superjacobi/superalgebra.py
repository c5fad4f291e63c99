"""The Lie superalgebra W-hat(1|1): exact bracket table, super-Jacobi sweep,
the Virasoro embedding remark, and the vector-field realization.

Basis families L_n, J_n (even), H_n, Q_n (odd), central C.  The nonzero
brackets are

    [L_m, L_n] = (m-n) L_{m+n}
    [L_m, J_n] = -n J_{m+n} + delta_{m,-n} (m^2+m)/6 C
    [L_m, H_n] = -n H_{m+n}
    [L_m, Q_n] = (m-n) Q_{m+n}
    [J_m, J_n] = delta_{m,-n} (m/3) C
    [J_m, Q_n] = Q_{m+n}
    [J_m, H_n] = -H_{m+n}
    [H_m, Q_n] = L_{m+n} - m J_{m+n} + delta_{m,-n} (m^2-m)/6 C

with all other pairs zero and reversed pairs given by super-antisymmetry
[b, a] = -(-1)^{p(a)p(b)} [a, b].

The vector-field realization on C[z, 1/z] (x) /\[theta] uses

    L_n = -z^{n+1} d_z - (n+1) z^n theta d_theta
    J_n = -z^n theta d_theta
    Q_n = -z^{n+1} d_theta
    H_n = z^n theta d_z

(H_n as printed elsewhere with theta d_theta would duplicate -J_n and have
even parity; theta d_z is forced by parity and by the [H, Q] relation, and
realizationBracketCheck confirms the whole table with it.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


EVEN, ODD = 0, 1
_PARITY = {"L": EVEN, "J": EVEN, "H": ODD, "Q": ODD, "C": EVEN}
FAMILIES = ("L", "J", "H", "Q")


@dataclass(frozen=True)
class BasisElt:
    family: str
    index: int | None = None

    def __post_init__(self):
        if self.family not in _PARITY:
            raise ValueError(f"unknown family {self.family}")
        if self.family == "C":
            if self.index is not None:
                raise ValueError("C carries no index")
        elif self.index is None:
            raise ValueError(f"{self.family} needs an index")

    @property
    def parity(self) -> int:
        return _PARITY[self.family]

    def __str__(self):
        return "C" if self.family == "C" else f"{self.family}[{self.index}]"


C = BasisElt("C")


def L(n: int) -> BasisElt:
    return BasisElt("L", n)


def J(n: int) -> BasisElt:
    return BasisElt("J", n)


def H(n: int) -> BasisElt:
    return BasisElt("H", n)


def Q(n: int) -> BasisElt:
    return BasisElt("Q", n)


class SuperLinComb:
    """Finite rational linear combination of basis elements."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[BasisElt, Fraction] | None = None):
        self.coeffs = {b: Fraction(c) for b, c in (coeffs or {}).items() if c}

    @classmethod
    def of(cls, *pairs) -> "SuperLinComb":
        d: dict[BasisElt, Fraction] = {}
        for c, b in pairs:
            d[b] = d.get(b, Fraction(0)) + Fraction(c)
        return cls(d)

    def __add__(self, other: "SuperLinComb") -> "SuperLinComb":
        d = dict(self.coeffs)
        for b, c in other.coeffs.items():
            d[b] = d.get(b, Fraction(0)) + c
        return SuperLinComb(d)

    def __sub__(self, other: "SuperLinComb") -> "SuperLinComb":
        return self + other.scale(-1)

    def scale(self, c) -> "SuperLinComb":
        c = Fraction(c)
        if c == 1:
            return self
        return SuperLinComb({b: v * c for b, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, SuperLinComb) and self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for b in sorted(self.coeffs, key=lambda e: (e.family, e.index or 0)):
            c = self.coeffs[b]
            bits.append(f"{c}*{b}" if c != 1 else str(b))
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__

    def to_dict(self) -> dict:
        out = {}
        for b, c in sorted(self.coeffs.items(),
                           key=lambda kv: (kv[0].family, kv[0].index or 0)):
            key = "C" if b.family == "C" else f"{b.family}{b.index}"
            out[key] = str(c)
        return out


_Z = SuperLinComb()


def _table(a: BasisElt, b: BasisElt) -> SuperLinComb | None:
    """Table value for the canonical family order; None if not a table pair."""
    m, n = a.index, b.index
    fa, fb = a.family, b.family
    if fa == "L" and fb == "L":
        return SuperLinComb.of((m - n, L(m + n)))
    if fa == "L" and fb == "J":
        out = SuperLinComb.of((-n, J(m + n)))
        if m == -n:
            out = out + SuperLinComb.of((Fraction(m * m + m, 6), C))
        return out
    if fa == "L" and fb == "H":
        return SuperLinComb.of((-n, H(m + n)))
    if fa == "L" and fb == "Q":
        return SuperLinComb.of((m - n, Q(m + n)))
    if fa == "J" and fb == "J":
        return SuperLinComb.of((Fraction(m, 3), C)) if m == -n else _Z
    if fa == "J" and fb == "Q":
        return SuperLinComb.of((1, Q(m + n)))
    if fa == "J" and fb == "H":
        return SuperLinComb.of((-1, H(m + n)))
    if fa == "H" and fb == "Q":
        out = SuperLinComb.of((1, L(m + n)), (-m, J(m + n)))
        if m == -n:
            out = out + SuperLinComb.of((Fraction(m * m - m, 6), C))
        return out
    if fa == fb and fa in ("H", "Q"):
        return _Z
    return None


@lru_cache(maxsize=None)
def bracket(a: BasisElt, b: BasisElt) -> SuperLinComb:
    """Super-bracket of two basis elements.

    Pairs not displayed in the table are zero; reversed-order pairs follow
    [b, a] = -(-1)^{p(a) p(b)} [a, b].
    """
    if a.family == "C" or b.family == "C":
        return _Z
    v = _table(a, b)
    if v is not None:
        return v
    w = _table(b, a)
    if w is None:
        return _Z
    sign = -1 if (a.parity and b.parity) else 1
    return w.scale(-sign)


def bracket_comb(x: SuperLinComb, y: SuperLinComb) -> SuperLinComb:
    out = _Z
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            out = out + bracket(a, b).scale(ca * cb)
    return out


def _ad_elt(a: BasisElt, comb: SuperLinComb) -> SuperLinComb:
    """[a, comb] for a single basis element; avoids wrapper combinations."""
    out = _Z
    for b, cb in comb.coeffs.items():
        out = out + bracket(a, b).scale(cb)
    return out


@dataclass
class SweepReport:
    checked: int
    violations: list

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"checked": self.checked, "passed": self.passed,
                "violations": [str(v) for v in self.violations[:20]]}


def super_jacobi_check(max_index: int) -> SweepReport:
    """Graded Jacobi identity over all ordered triples from the four families
    with |index| <= max_index, plus C (whose triples are trivially zero):

        (-1)^{p(a)p(c)}[a,[b,c]] + (-1)^{p(b)p(a)}[b,[c,a]]
                                 + (-1)^{p(c)p(b)}[c,[a,b]] = 0.
    """
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    elts = [BasisElt(f, n) for f in FAMILIES
            for n in range(-max_index, max_index + 1)] + [C]
    violations = []
    checked = 0
    for a in elts:
        pa = a.parity
        for b in elts:
            pb = b.parity
            ab = bracket(a, b)
            for c in elts:
                pc = c.parity
                checked += 1
                s1 = -1 if (pa and pc) else 1
                s2 = -1 if (pb and pa) else 1
                s3 = -1 if (pc and pb) else 1
                total = (_ad_elt(a, bracket(b, c)).scale(s1)
                         + _ad_elt(b, bracket(c, a)).scale(s2)
                         + _ad_elt(c, ab).scale(s3))
                if not total.is_zero():
                    violations.append((a, b, c, total))
    return SweepReport(checked, violations)


def virasoro_map_check(max_index: int, naive: bool) -> SweepReport:
    """Check whether L_n -> image(L_n), C -> C embeds the Virasoro algebra.

    naive=True uses image(L_n) = L_n (must fail, e.g. at (2, -2) where the
    discrepancy is exactly C/2); naive=False uses L_n - (n+1)/2 J_n (passes).
    """
    def image(n: int) -> SuperLinComb:
        if naive:
            return SuperLinComb.of((1, L(n)))
        return SuperLinComb.of((1, L(n)), (Fraction(-(n + 1), 2), J(n)))

    violations = []
    checked = 0
    for m in range(-max_index, max_index + 1):
        for n in range(-max_index, max_index + 1):
            checked += 1
            got = bracket_comb(image(m), image(n))
            want = image(m + n).scale(m - n)
            if m == -n:
                want = want + SuperLinComb.of((Fraction(m ** 3 - m, 12), C))
            if got != want:
                violations.append(((m, n), got - want))
    return SweepReport(checked, violations)


# -- vector-field realization ---------------------------------------------------

class SuperPoly:
    """Element of C[z, 1/z] (x) /\[theta]: even part + theta * odd part."""

    __slots__ = ("ev", "od")

    def __init__(self, ev: dict[int, Fraction] | None = None,
                 od: dict[int, Fraction] | None = None):
        self.ev = {e: Fraction(c) for e, c in (ev or {}).items() if c}
        self.od = {e: Fraction(c) for e, c in (od or {}).items() if c}

    def __add__(self, o: "SuperPoly") -> "SuperPoly":
        ev = dict(self.ev)
        for e, c in o.ev.items():
            ev[e] = ev.get(e, Fraction(0)) + c
        od = dict(self.od)
        for e, c in o.od.items():
            od[e] = od.get(e, Fraction(0)) + c
        return SuperPoly(ev, od)

    def scale(self, c) -> "SuperPoly":
        c = Fraction(c)
        return SuperPoly({e: v * c for e, v in self.ev.items()},
                         {e: v * c for e, v in self.od.items()})

    def is_zero(self) -> bool:
        return not self.ev and not self.od

    def __eq__(self, o) -> bool:
        return isinstance(o, SuperPoly) and self.ev == o.ev and self.od == o.od


@dataclass(frozen=True)
class SuperDerivation:
    """Derivation given by a window-limited action on monomials.

    ``z_image``/``theta_image`` are the images of the generators; parity is
    0 or 1.  The Leibniz extension with Koszul signs is mechanical: for the
    monomial z^p,   D(z^p) = p z^{p-1} D(z); for z^p theta,
    D(z^p theta) = p z^{p-1} D(z) theta + (-1)^{parity * 0} z^p D(theta)
    (z^p is even, so no sign appears; the sign convention lives entirely in
    how theta components multiply below).
    """
    z_image: SuperPoly
    theta_image: SuperPoly
    parity: int

    def apply_even_monomial(self, p: int) -> SuperPoly:
        # D(z^p) = p z^{p-1} D(z)
        out = SuperPoly()
        if p == 0:
            return out
        for e, c in self.z_image.ev.items():
            out.ev[e + p - 1] = out.ev.get(e + p - 1, Fraction(0)) + p * c
        for e, c in self.z_image.od.items():
            out.od[e + p - 1] = out.od.get(e + p - 1, Fraction(0)) + p * c
        return SuperPoly(out.ev, out.od)

    def apply_odd_monomial(self, p: int) -> SuperPoly:
        # D(z^p theta) = D(z^p) theta + z^p D(theta); theta^2 = 0 kills the
        # odd part of D(z^p) against theta.
        out = SuperPoly()
        dzp = self.apply_even_monomial(p)
        for e, c in dzp.ev.items():          # (even) * theta -> odd slot
            out.od[e] = out.od.get(e, Fraction(0)) + c
        for e, c in self.theta_image.ev.items():
            out.ev[e + p] = out.ev.get(e + p, Fraction(0)) + c
        for e, c in self.theta_image.od.items():
            out.od[e + p] = out.od.get(e + p, Fraction(0)) + c
        return SuperPoly(out.ev, out.od)

    def apply(self, x: SuperPoly) -> SuperPoly:
        out = SuperPoly()
        for p, c in x.ev.items():
            out = out + self.apply_even_monomial(p).scale(c)
        for p, c in x.od.items():
            out = out + self.apply_odd_monomial(p).scale(c)
        return out


def realization(elt: BasisElt) -> SuperDerivation:
    n = elt.index
    one = Fraction(1)
    if elt.family == "L":
        return SuperDerivation(SuperPoly({n + 1: -one}, {}),
                               SuperPoly({}, {n: -(n + 1)}), EVEN)
    if elt.family == "J":
        return SuperDerivation(SuperPoly(), SuperPoly({}, {n: -one}), EVEN)
    if elt.family == "Q":
        return SuperDerivation(SuperPoly(), SuperPoly({n + 1: -one}, {}), ODD)
    if elt.family == "H":
        return SuperDerivation(SuperPoly({}, {n: one}), SuperPoly(), ODD)
    raise ValueError(f"no realization for {elt}")


def _commutator_images(d1: SuperDerivation, d2: SuperDerivation) -> tuple[SuperPoly, SuperPoly]:
    """Images of z and theta under [d1, d2] = d1 d2 - (-1)^{p1 p2} d2 d1."""
    sign = -1 if (d1.parity and d2.parity) else 1
    z = SuperPoly({1: Fraction(1)}, {})
    th = SuperPoly({}, {0: Fraction(1)})
    za = d1.apply(d2.apply(z)) + d2.apply(d1.apply(z)).scale(-sign)
    ta = d1.apply(d2.apply(th)) + d2.apply(d1.apply(th)).scale(-sign)
    return za, ta


def _identify(z_img: SuperPoly, th_img: SuperPoly, window: int) -> SuperLinComb:
    """Write a derivation, given by generator images, in the basis families.

    z-image even part  sum -c z^{n+1}  -> c L_n;   odd part  c z^n theta -> c H_n
    theta-image even   sum -c z^{n+1}  -> c Q_n;   odd part -c z^n theta -> c J_n
    then the J-coefficients are corrected for the theta d_theta part of L_n.
    """
    from .errors import WindowTooSmall
    out: dict[BasisElt, Fraction] = {}
    lcoef: dict[int, Fraction] = {}
    for e, c in z_img.ev.items():
        n = e - 1
        if abs(n) > window:
            raise WindowTooSmall(f"L-index {n} outside window {window}")
        lcoef[n] = -c
        out[L(n)] = -c
    for e, c in z_img.od.items():
        if abs(e) > window:
            raise WindowTooSmall(f"H-index {e} outside window {window}")
        out[H(e)] = c
    for e, c in th_img.ev.items():
        n = e - 1
        if abs(n) > window:
            raise WindowTooSmall(f"Q-index {n} outside window {window}")
        out[Q(n)] = -c
    # theta-image odd part collects -J_n and the theta-d_theta part of L_n:
    # coefficient of z^e theta is -(e+1) c^L_e - c^J_e
    for e in set(th_img.od) | set(lcoef):
        if abs(e) > window:
            raise WindowTooSmall(f"J-index {e} outside window {window}")
        c = th_img.od.get(e, Fraction(0))
        val = -c - lcoef.get(e, Fraction(0)) * (e + 1)
        if val:
            out[J(e)] = val
    return SuperLinComb(out)


@dataclass
class RealizationReport:
    checked: int
    mismatches: list
    central_kernel: list

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {"checked": self.checked, "passed": self.passed,
                "mismatches": [str(m) for m in self.mismatches[:20]],
                "centralKernel": [
                    {"pair": pair, "indices": [m, n], "coefficient": str(c)}
                    for (pair, m, n, c) in self.central_kernel]}


def realization_bracket_check(max_index: int, window: int) -> RealizationReport:
    """Compare vector-field commutators with the abstract table (C -> 0).

    Relations with m + n != 0 must match exactly; for m + n = 0 the
    difference is the central term, reported with its cocycle coefficient.
    """
    if window < 2 * max_index + 2:
        from .errors import WindowTooSmall
        raise WindowTooSmall("need window >= 2*max_index + 2")
    mismatches = []
    central = []
    checked = 0
    for fa in FAMILIES:
        for fb in FAMILIES:
            for m in range(-max_index, max_index + 1):
                for n in range(-max_index, max_index + 1):
                    a, b = BasisElt(fa, m), BasisElt(fb, n)
                    za, ta = _commutator_images(realization(a), realization(b))
                    got = _identify(za, ta, window)
                    want = bracket(a, b)
                    cpart = want.coeffs.get(C, Fraction(0))
                    want_nc = SuperLinComb(
                        {k: v for k, v in want.coeffs.items() if k != C})
                    checked += 1
                    if got != want_nc:
                        mismatches.append((a, b, got, want_nc))
                    elif cpart:
                        central.append((fa + fb, m, n, cpart))
    return RealizationReport(checked, mismatches, central)
