"""Rational functions of one variable over the exact rationals.

A :class:`RatFunc` is a quotient N/D where N is a Laurent polynomial (finite
dict exponent -> Fraction, exponents may be negative) and D is an ordinary
polynomial with nonzero constant term.  The canonical form is:

* N and D share no polynomial factor (after splitting off the monomial part
  of N, which is always a unit),
* D has integer coefficients of content 1 and positive leading coefficient,
* zero is represented as N = {} with D = {0: 1}.

Coefficients of the q-series engine live here; the same class doubles as the
field of rational functions of x for the partial-fraction layer (only the
display name differs).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Poly = dict[int, Fraction]

_ZERO = Fraction(0)
_ONE_POLY: Poly = {0: Fraction(1)}


def _trim(p: Poly) -> Poly:
    return {e: c for e, c in p.items() if c}


def _padd(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, _ZERO) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _pneg(a: Poly) -> Poly:
    return {e: -c for e, c in a.items()}


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return {}
    if len(a) == 1:
        (ea, ca), = a.items()
        return {ea + eb: ca * cb for eb, cb in b.items()}
    if len(b) == 1:
        (eb, cb), = b.items()
        return {ea + eb: ca * cb for ea, ca in a.items()}
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e, _ZERO) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _pscale(a: Poly, c: Fraction) -> Poly:
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def _deg(a: Poly) -> int:
    return max(a.keys())


def _val(a: Poly) -> int:
    return min(a.keys())


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division of ordinary polynomials (b nonzero)."""
    db = _deg(b)
    lb = b[db]
    q: Poly = {}
    r = dict(a)
    while r and _deg(r) >= db:
        dr = _deg(r)
        c = r[dr] / lb
        q[dr - db] = c
        for e, v in b.items():
            ee = dr - db + e
            s = r.get(ee, _ZERO) - c * v
            if s:
                r[ee] = s
            else:
                r.pop(ee, None)
    return q, r


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd of ordinary polynomials over Q."""
    a, b = dict(a), dict(b)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if not a:
        return {}
    lead = a[_deg(a)]
    return {e: c / lead for e, c in a.items()}


def _content(p: Poly) -> Fraction:
    """Positive rational c with p/c integral of content 1."""
    num = 0
    den = 1
    for c in p.values():
        num = gcd(num, abs(c.numerator))
        den = den * c.denominator // gcd(den, c.denominator)
    return Fraction(num, den)


class RatFunc:
    """Element of Q(y) in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, reduce: bool = True):
        if den is None:
            den = dict(_ONE_POLY)
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = {}, dict(_ONE_POLY)
            return
        if reduce:
            num, den = self._canonicalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _canonicalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
        # Make the denominator an ordinary polynomial with nonzero constant
        # term, shifting the monomial slack into the Laurent numerator.
        dv = _val(den)
        if dv != 0:
            den = {e - dv: c for e, c in den.items()}
            num = {e - dv: c for e, c in num.items()}
        if _deg(den) > 0:
            nv = _val(num)
            nshift = {e - nv: c for e, c in num.items()}
            g = _pgcd(nshift, den)
            if g and _deg(g) > 0:
                nshift, _ = _pdivmod(nshift, g)
                den, _ = _pdivmod(den, g)
            num = {e + nv: c for e, c in nshift.items()}
        cont = _content(den)
        if den[_deg(den)] < 0:
            cont = -cont
        if cont != 1:
            den = {e: c / cont for e, c in den.items()}
            num = {e: c / cont for e, c in num.items()}
        return num, den

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, c) -> "RatFunc":
        c = Fraction(c)
        r = cls.__new__(cls)
        r.num = {0: c} if c else {}
        r.den = dict(_ONE_POLY)
        return r

    @classmethod
    def monomial(cls, c, e: int) -> "RatFunc":
        c = Fraction(c)
        r = cls.__new__(cls)
        r.num = {e: c} if c else {}
        r.den = dict(_ONE_POLY)
        return r

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls.const(0)

    @classmethod
    def one(cls) -> "RatFunc":
        return cls.const(1)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_const(self) -> bool:
        return self.den == _ONE_POLY and (not self.num or set(self.num) == {0})

    def is_poly(self) -> bool:
        return self.den == _ONE_POLY

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError("not a constant")
        return self.num.get(0, _ZERO)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            n = _padd(self.num, other.num)
            if self.den == _ONE_POLY:
                return RatFunc(n, None, reduce=False)
            return RatFunc(n, dict(self.den))
        n = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return RatFunc(n, _pmul(self.den, other.den))

    def __neg__(self) -> "RatFunc":
        r = RatFunc.__new__(RatFunc)
        r.num = _pneg(self.num)
        r.den = dict(self.den)
        return r

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if self.is_zero() or other.is_zero():
            return RatFunc.zero()
        if self.den == _ONE_POLY and other.den == _ONE_POLY:
            return RatFunc(_pmul(self.num, other.num), None, reduce=False)
        return RatFunc(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def scale(self, c) -> "RatFunc":
        c = Fraction(c)
        if not c:
            return RatFunc.zero()
        r = RatFunc.__new__(RatFunc)
        r.num = _pscale(self.num, c)
        r.den = dict(self.den)
        return r

    def mul_monomial(self, e: int) -> "RatFunc":
        """Multiply by y^e (unit; stays canonical)."""
        if self.is_zero() or e == 0:
            return self
        r = RatFunc.__new__(RatFunc)
        r.num = {k + e: c for k, c in self.num.items()}
        r.den = dict(self.den)
        return r

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(dict(self.den), dict(self.num))

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.inverse()

    def deriv(self) -> "RatFunc":
        """d/dy."""
        dn = {e - 1: c * e for e, c in self.num.items() if e}
        if self.den == _ONE_POLY:
            return RatFunc(dn, None, reduce=False)
        dd = {e - 1: c * e for e, c in self.den.items() if e}
        n = _padd(_pmul(dn, self.den), _pneg(_pmul(self.num, dd)))
        return RatFunc(n, _pmul(self.den, self.den))

    def y_log_deriv(self) -> "RatFunc":
        """y d/dy."""
        return self.deriv().mul_monomial(1)

    # -- structure ---------------------------------------------------------

    def num_min_exp(self) -> int:
        return _val(self.num)

    def num_max_exp(self) -> int:
        return _deg(self.num)

    def den_deg(self) -> int:
        return _deg(self.den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(sorted(self.num.items())), tuple(sorted(self.den.items()))))

    # -- evaluation and display --------------------------------------------

    def eval(self, y: complex, pole_eps: float = 1e-12) -> complex:
        """Evaluate at a complex point; Horner on numerator and denominator.

        Raises ZeroDivisionError-like pole signal by returning via exception in
        the caller's domain: here we raise ValueError for |den| < pole_eps so
        the series layer can translate it.
        """
        nv = _val(self.num) if self.num else 0
        nmax = _deg(self.num) if self.num else 0
        acc = 0j
        for e in range(nmax, nv - 1, -1):
            acc = acc * y + complex(self.num.get(e, _ZERO))
        if nv:
            acc *= y ** nv
        dmax = _deg(self.den)
        dacc = 0j
        for e in range(dmax, -1, -1):
            dacc = dacc * y + complex(self.den.get(e, _ZERO))
        if abs(dacc) < pole_eps:
            raise ValueError("denominator within pole guard")
        return acc / dacc

    def _poly_str(self, p: Poly, var: str) -> str:
        if not p:
            return "0"
        bits = []
        for e in sorted(p, reverse=True):
            c = p[e]
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*{var}" if c != 1 else var)
            else:
                bits.append(f"{c}*{var}^{e}" if c != 1 else f"{var}^{e}")
        return " + ".join(bits).replace("+ -", "- ")

    def to_str(self, var: str = "y") -> str:
        ns = self._poly_str(self.num, var)
        if self.den == _ONE_POLY:
            return ns
        return f"({ns})/({self._poly_str(self.den, var)})"

    def __repr__(self):
        return f"RatFunc({self.to_str()})"

    # -- serialization -----------------------------------------------------

    def to_pairs(self) -> tuple[list, list]:
        num = [[e, f"{c.numerator}/{c.denominator}"] for e, c in sorted(self.num.items())]
        den = [[e, f"{c.numerator}/{c.denominator}"] for e, c in sorted(self.den.items())]
        return num, den

    @classmethod
    def from_pairs(cls, num: list, den: list) -> "RatFunc":
        n = {int(e): Fraction(s) for e, s in num}
        d = {int(e): Fraction(s) for e, s in den}
        return cls(n, d)


ONE = RatFunc.one()
ZERO = RatFunc.zero()
