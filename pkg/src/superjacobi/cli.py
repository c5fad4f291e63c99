"""Command-line front end.

Exit codes: 0 on success/pass, 1 on a failed mathematical check, 2 on usage
errors.  Reports are machine-readable JSON (or CSV for numeric tables),
written to stdout or to --out.  Identical invocations (including --seed)
produce byte-identical output.  SUPERJACOBI_THREADS bounds the worker count
of parallel sweeps (the default is single-threaded; all outputs are ordered
and deterministic either way).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import characters, elliptic, jacobi, numtheory, ramanujan, superalgebra
from .errors import SuperjacobiError

EXIT_OK = 0
EXIT_MATH_FAIL = 1
EXIT_USAGE = 2


def _emit(payload, out_path: str | None, as_json: bool = True) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n" if as_json else payload
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


# -- subcommand implementations ---------------------------------------------

def cmd_ramanujan(args) -> int:
    checks = []
    ok = True
    for idt in ramanujan.ramanujan_triple(args.order):
        d = idt.to_dict()
        checks.append(d)
        ok = ok and d["holds"]
    for k in range(1, args.max_k + 1):
        idt = ramanujan.extract_ode_family(k, max(args.max_k + 3, 6), args.order)
        d = idt.to_dict()
        d["source"] = "wp-pde"
        d["zExponent"] = idt.source_z_exponent
        checks.append(d)
        ok = ok and d["holds"]
    _emit({"checks": checks}, args.out)
    return EXIT_OK if ok else EXIT_MATH_FAIL


def cmd_char(args) -> int:
    label = characters.ModuleLabel(args.u, _fraction(args.j), _fraction(args.k),
                                   generic=args.generic)
    ch = characters.character(label, Fraction(args.order),
                              normalized=args.normalized)
    _emit(ch.series.to_dict(), args.out)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    labels = characters.spectrum(args.u)
    _emit({"u": args.u,
           "count": len(labels),
           "labels": [[int(l.j), int(l.k)] for l in labels]}, args.out)
    return EXIT_OK


def cmd_flow(args) -> int:
    matches = characters.find_flow_matches(args.u, args.m, Fraction(args.order))
    _emit({"u": args.u, "m": args.m,
           "matches": [m.to_dict() for m in matches]}, args.out)
    return EXIT_OK


def cmd_eisenstein(args) -> int:
    fn = numtheory.eisenstein_ghat if args.ghat else numtheory.eisenstein_e
    _emit(fn(args.k, args.order).to_dict(), args.out)
    return EXIT_OK


def cmd_wp_pde(args) -> int:
    rep = elliptic.wp_pde_check(args.z_order, args.order)
    _emit(rep.to_dict(), args.out)
    return EXIT_OK if rep.passed else EXIT_MATH_FAIL


def cmd_xi_shift(args) -> int:
    rep = elliptic.xi_shift_check(args.order)
    _emit(rep.to_dict(), args.out)
    return EXIT_OK if rep.passed else EXIT_MATH_FAIL


def cmd_xi_zetabar(args) -> int:
    rep = elliptic.xi_zetabar_check(args.t_order, args.order)
    _emit(rep.to_dict(), args.out)
    return EXIT_OK if rep.passed else EXIT_MATH_FAIL


def cmd_zetabar_table(args) -> int:
    """CSV table of zeta-bar (or wp) values along a t-grid."""
    tau = complex(args.tau_re, args.tau_im)
    rows = ["t_re,t_im,tau_re,tau_im,value_re,value_im"]
    fn = elliptic.eval_wp if args.what == "wp" else elliptic.eval_zetabar
    for i in range(args.points):
        t = complex(args.t_re + i * args.step, args.t_im)
        v = fn(elliptic.LatticePoint(t, tau))
        rows.append(f"{t.real!r},{t.imag!r},{tau.real!r},{tau.imag!r},"
                    f"{v.real!r},{v.imag!r}")
    _emit("\n".join(rows) + "\n", args.out, as_json=False)
    return EXIT_OK


def cmd_jacobi_test(args) -> int:
    gens = {
        "S": jacobi.S_ELEMENT,
        "T": jacobi.T_SHEAR,
        "x10": jacobi.JacobiGroupElement.lattice(1, 0),
        "x01": jacobi.JacobiGroupElement.lattice(0, 1),
    }
    g = gens[args.gen]
    rep = jacobi.span_invariance_test(args.u, g, q_order=Fraction(args.order),
                                      tol=args.tol, seed=args.seed)
    d = rep.to_dict()
    d["withinTolerance"] = rep.residual < args.tol
    _emit(d, args.out)
    return EXIT_OK if rep.residual < args.tol else EXIT_MATH_FAIL


def cmd_bracket(args) -> int:
    def elt(fam: str, idx: int) -> superalgebra.BasisElt:
        if fam == "C":
            return superalgebra.C
        return superalgebra.BasisElt(fam, idx)
    v = superalgebra.bracket(elt(args.family1, args.index1),
                             elt(args.family2, args.index2))
    _emit({"bracket": v.to_dict(), "text": str(v)}, args.out)
    return EXIT_OK


def cmd_jacobi_identity(args) -> int:
    rep = superalgebra.super_jacobi_check(args.max)
    _emit(rep.to_dict(), args.out)
    return EXIT_OK if rep.passed else EXIT_MATH_FAIL


def cmd_realization_check(args) -> int:
    rep = superalgebra.realization_bracket_check(args.max, args.window)
    _emit(rep.to_dict(), args.out)
    return EXIT_OK if rep.passed else EXIT_MATH_FAIL


# -- per-subcommand invariant mini-suites -------------------------------------

def _st_ramanujan() -> bool:
    return all(i.holds() for i in ramanujan.ramanujan_triple(20))


def _st_characters() -> bool:
    ok = all(len(characters.spectrum(u)) == u * (u - 1) // 2
             for u in range(2, 9))
    ch = characters.character(characters.ModuleLabel(3, 1, 1), Fraction(3))
    e0, _ = ch.series.leading()
    return ok and e0 == Fraction(1, 3)


def _st_flow() -> bool:
    return all(len(characters.find_flow_matches(3, m, Fraction(6))) == 3
               for m in (1, -1))


def _st_eisenstein() -> bool:
    ok = all(numtheory.eisenstein_e(k, 2).coeff(0).const_value() == 1
             for k in range(1, 7))
    g2 = numtheory.eisenstein_ghat(1, 4)
    return ok and g2.coeff(0).const_value() == Fraction(-1, 12)


def _st_wp_pde() -> bool:
    if not elliptic.wp_pde_check(4, 12).passed:
        return False
    wp = elliptic.wp_series(4, 12)
    zb = elliptic.zetabar_series(4, 12)
    return not zb.pi_shift(1).z_deriv().scale(-1).diff_exponents(wp.scale(-1))


def _st_xi_shift() -> bool:
    return (elliptic.xi_shift_check(15).passed
            and not elliptic.xi_shift_check(15, offset=Fraction(2)).passed)


def _st_xi_zetabar() -> bool:
    return elliptic.xi_zetabar_check(4, 10).passed


def _st_zetabar_table() -> bool:
    p = elliptic.LatticePoint(0.21 + 0.08j, 1j)
    z0 = elliptic.eval_zetabar(p)
    z1 = elliptic.eval_zetabar(elliptic.LatticePoint(p.t + p.tau, p.tau))
    return abs(z1 - z0 - 1) < 1e-9


def _st_jacobi_test() -> bool:
    g = jacobi.JacobiGroupElement.lattice(1, 0)
    rep = jacobi.span_invariance_test(2, g, q_order=Fraction(10))
    ok = rep.residual < 1e-6
    gh = jacobi.compose(g, jacobi.S_ELEMENT)
    ok = ok and gh.matrix == (0, -1, 1, 0) and gh.vector == (0, -1)
    return ok


def _st_bracket() -> bool:
    return superalgebra.super_jacobi_check(2).passed


def _st_realization() -> bool:
    return superalgebra.realization_bracket_check(2, 6).passed


SELF_TESTS = {
    "ramanujan": _st_ramanujan,
    "char": _st_characters,
    "spectrum": _st_characters,
    "flow": _st_flow,
    "eisenstein": _st_eisenstein,
    "wp-pde": _st_wp_pde,
    "xi-shift": _st_xi_shift,
    "xi-zetabar": _st_xi_zetabar,
    "zetabar-table": _st_zetabar_table,
    "jacobi-test": _st_jacobi_test,
    "bracket": _st_bracket,
    "jacobi-identity": _st_bracket,
    "realization-check": _st_realization,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="superjacobi",
        description="Exact q-series identities, characters, and the W(1|1) algebra")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="write the report here")
        p.add_argument("--self-test", action="store_true",
                       help="run the module's invariant mini-suite")

    p = sub.add_parser("ramanujan", help="verify the Eisenstein ODEs")
    p.add_argument("--order", type=int, default=50)
    p.add_argument("--max-k", type=int, default=3)
    common(p)
    p.set_defaults(fn=cmd_ramanujan)

    p = sub.add_parser("char", help="expand a module character")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--j", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--generic", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_char)

    p = sub.add_parser("spectrum", help="list the level-u module labels")
    p.add_argument("--u", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("flow", help="spectral-flow matches of the spectrum")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--order", type=int, default=9)
    common(p)
    p.set_defaults(fn=cmd_flow)

    p = sub.add_parser("eisenstein", help="E_2k or ghat_2k expansion")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--ghat", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_eisenstein)

    p = sub.add_parser("wp-pde", help="coefficientwise wp PDE check")
    p.add_argument("--z-order", type=int, default=6)
    p.add_argument("--order", type=int, default=40)
    common(p)
    p.set_defaults(fn=cmd_wp_pde)

    p = sub.add_parser("xi-shift", help="xi(qx) = xi(x) + 1 check")
    p.add_argument("--order", type=int, default=40)
    common(p)
    p.set_defaults(fn=cmd_xi_shift)

    p = sub.add_parser("xi-zetabar", help="xi/zeta-bar t-expansion consistency")
    p.add_argument("--t-order", type=int, default=8)
    p.add_argument("--order", type=int, default=30)
    common(p)
    p.set_defaults(fn=cmd_xi_zetabar)

    p = sub.add_parser("zetabar-table", help="numeric table (CSV)")
    p.add_argument("--what", choices=["zetabar", "wp"], default="zetabar")
    p.add_argument("--tau-re", type=float, default=0.0)
    p.add_argument("--tau-im", type=float, default=1.0)
    p.add_argument("--t-re", type=float, default=0.2)
    p.add_argument("--t-im", type=float, default=0.1)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--points", type=int, default=5)
    common(p)
    p.set_defaults(fn=cmd_zetabar_table)

    p = sub.add_parser("jacobi-test", help="span-invariance mixing fit")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--gen", choices=["S", "T", "x10", "x01"], required=True)
    p.add_argument("--order", type=int, default=14)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--seed", type=int, default=7)
    common(p)
    p.set_defaults(fn=cmd_jacobi_test)

    p = sub.add_parser("bracket", help="bracket of two basis elements")
    p.add_argument("family1", choices=["L", "J", "H", "Q", "C"])
    p.add_argument("index1", type=int, nargs="?", default=0)
    p.add_argument("family2", choices=["L", "J", "H", "Q", "C"])
    p.add_argument("index2", type=int, nargs="?", default=0)
    common(p)
    p.set_defaults(fn=cmd_bracket)

    p = sub.add_parser("jacobi-identity", help="graded Jacobi identity sweep")
    p.add_argument("--max", type=int, default=6)
    common(p)
    p.set_defaults(fn=cmd_jacobi_identity)

    p = sub.add_parser("realization-check",
                       help="vector-field realization vs the bracket table")
    p.add_argument("--max", type=int, default=5)
    p.add_argument("--window", type=int, default=12)
    common(p)
    p.set_defaults(fn=cmd_realization_check)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return EXIT_USAGE if exc.code not in (0,) else 0
    if getattr(args, "self_test", False):
        fn = SELF_TESTS[args.command]
        ok = fn()
        _emit({"selfTest": args.command, "passed": ok},
              getattr(args, "out", None))
        return EXIT_OK if ok else EXIT_MATH_FAIL
    try:
        return args.fn(args)
    except SuperjacobiError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
