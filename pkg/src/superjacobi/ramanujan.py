"""Ramanujan's differential equations for Eisenstein series, both the three
classical displays and the infinite family obtained by equating z-coefficients
of the wp PDE.

All identities are stored and verified in the ghat variables (pi-hat-free,
rational); translation to E-variables is a presentation layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import OutOfRange
from .numtheory import bernoulli, eisenstein_e
from .series import QYSeries
from .elliptic import wp_pde_sides, wp_series, zetabar_series


@dataclass
class OdeIdentity:
    """lhs == rhs as exact q-series; both y-free with a shared truncation."""
    k: int
    lhs: QYSeries
    rhs: QYSeries
    source_z_exponent: int

    def residual(self) -> QYSeries:
        return self.lhs - self.rhs

    def holds(self) -> bool:
        return self.residual().is_zero()

    def first_failure_order(self):
        r = self.residual()
        return None if r.is_zero() else min(r.terms)

    def to_dict(self) -> dict:
        d = {"k": self.k, "holds": self.holds()}
        f = self.first_failure_order()
        if f is not None:
            d["firstFailureOrder"] = f
        return d


def _e(k: int, T: int) -> QYSeries:
    return eisenstein_e(k, T)


def ramanujan_triple(q_order: int) -> list[OdeIdentity]:
    """The three classical identities, each verified exactly through q_order:

        q dE2/dq = (E2^2 - E4)/12
        q dE4/dq = (E2 E4 - E6)/3
        q dE6/dq = (E2 E6 - E4^2)/2
    """
    if q_order < 1:
        raise ValueError("q_order must be >= 1")
    T = q_order + 1
    e2, e4, e6 = _e(1, T), _e(2, T), _e(3, T)
    out = [
        OdeIdentity(1, e2.q_log_deriv(), (e2 * e2 - e4).scale(Fraction(1, 12)), 0),
        OdeIdentity(2, e4.q_log_deriv(), (e2 * e4 - e6).scale(Fraction(1, 3)), 2),
        OdeIdentity(3, e6.q_log_deriv(), (e2 * e6 - e4 * e4).scale(Fraction(1, 2)), 4),
    ]
    return out


def extract_ode_family(k: int, z_order: int, q_order: int) -> OdeIdentity:
    """Identity from the z^{2k-2} coefficient of the wp PDE.

    lhs is the pure d_tau part, (2k-1) q d/dq ghat_{2k}; rhs collects the
    transport and right-hand-side terms.  Exact for every k in the provable
    window; k = 1, 2, 3 reproduce the classical E2, E4, E6 identities up to
    the ghat normalizations (k = 3 uses E8 = E4^2 implicitly through ghat_8).
    """
    if not 1 <= k <= z_order - 2:
        raise OutOfRange(f"need 1 <= k <= z_order - 2, got k={k}, z_order={z_order}")
    zexp = 2 * k - 2
    pexp = 2 * k + 1
    lhs_full, rhs_full = wp_pde_sides(z_order, q_order)
    window = min(lhs_full.ztrunc, rhs_full.ztrunc)
    if zexp >= window:
        raise OutOfRange(f"z-exponent {zexp} outside provable window {window}")
    wp = wp_series(z_order, q_order)
    zb = zetabar_series(z_order, q_order)
    tau_part = wp.q_log_deriv().pi_shift(1)
    transport = zb * wp.z_deriv()
    lhs = tau_part.coeff(zexp, pexp)
    rhs = rhs_full.coeff(zexp, pexp) - transport.coeff(zexp, pexp)
    return OdeIdentity(k, lhs, rhs, zexp)


def e_variable_form(identity: OdeIdentity) -> tuple[QYSeries, QYSeries]:
    """Rescale an extracted identity into E-variables.

    Divides both sides by (2k-1) * (-B_{2k}/(2k)!), turning the lhs into
    q dE_{2k}/dq; for k <= 3 the rhs then equals the displayed classical
    right-hand side as a series.
    """
    k = identity.k
    c = Fraction(2 * k - 1) * (-bernoulli(2 * k) / factorial(2 * k))
    s = 1 / c
    return identity.lhs.scale(s), identity.rhs.scale(s)
