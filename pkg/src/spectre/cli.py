"""Command line front end.

Exit codes: 0 on success (an infeasible configuration is a result, not an
error), 1 on domain errors, 2 on usage and parse errors. Results go to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys
from typing import Sequence, TextIO

from . import arnold, picard_lefschetz
from .errors import GaloisUnstable, InputError, NotIsolated, SpectreError, UnknownSingularity
from .local_algebra import milnor_number
from .newton import lct, newton_polyhedron, nondegenerate_spectrum
from .poly import Poly, parse_polynomial, support
from .quasihomogeneous import bp_spectrum, detect_weights, qh_spectrum
from .spectrum import (
    IntervalKind,
    SpectralSet,
    characteristic_polynomial,
    eigenvalues,
    monodromy_order,
    monomial_spectrum,
    suspension,
)

_BASE_GERMS = {
    "E6": "x^3 + y^4",
    "E7": "x^3 + x*y^3",
    "E8": "x^3 + y^5",
}


def builtin_singularity(name: str, ambient_vars: int) -> SpectralSet:
    """Spectrum of a named ADE germ, stabilised to ``ambient_vars`` variables by adding squares."""
    m = re.fullmatch(r"([ADE])(\d+)", name.strip().upper())
    if not m:
        raise UnknownSingularity(f"unknown singularity {name!r}; use A<k>, D<k>, E6, E7 or E8")
    series, k = m.group(1), int(m.group(2))
    if series == "A":
        if k < 1:
            raise UnknownSingularity("A<k> needs k >= 1")
        base = monomial_spectrum(k + 1)
    elif series == "D":
        if k < 4:
            raise UnknownSingularity("D<k> needs k >= 4")
        base = qh_spectrum(detect_weights(parse_polynomial(f"x^{k - 1} + x*y^2")))
    else:
        if name.strip().upper() not in _BASE_GERMS:
            raise UnknownSingularity(f"unknown singularity {name!r}; E-series is E6, E7, E8")
        base = qh_spectrum(detect_weights(parse_polynomial(_BASE_GERMS[name.strip().upper()])))
    if ambient_vars < base.num_vars:
        raise InputError(f"{name} needs at least {base.num_vars} variables")
    s = base
    while s.num_vars < ambient_vars:
        s = suspension(s, 2)
    return s


def _parse_singularity_list(items: Sequence[str], ambient_vars: int) -> list:
    out = []
    for item in items:
        m = re.fullmatch(r"\s*(?:(\d+)\s*[x*]\s*)?(\w+)\s*", item)
        if not m:
            raise UnknownSingularity(f"cannot read singularity {item!r}")
        count = int(m.group(1) or 1)
        out.extend([builtin_singularity(m.group(2), ambient_vars)] * count)
    return out


def _parse_bp(text: str) -> list:
    try:
        exps = [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"--bp expects comma separated integers, got {text!r}") from None
    if not exps or any(a < 2 for a in exps):
        raise InputError("Brieskorn-Pham exponents must be >= 2")
    return exps


def _read_poly(args) -> Poly:
    variables = [v.strip() for v in args.vars.split(",")] if args.vars else None
    return parse_polynomial(args.poly, variables)


def _spectrum_of_poly(f: Poly, nondegenerate: bool) -> SpectralSet:
    data = milnor_number(f)
    if not data.is_isolated:
        raise NotIsolated(f"{f} does not have an isolated critical point")
    try:
        weights = detect_weights(f)
    except SpectreError:
        if not nondegenerate:
            raise
        return nondegenerate_spectrum(f)
    return qh_spectrum(weights)


def _germ_spectrum(args, default_vars=None) -> SpectralSet:
    chosen = [x for x in (args.poly, args.bp, args.sing) if x]
    if len(chosen) != 1:
        raise InputError("give exactly one of a polynomial, --bp or --sing")
    if args.bp:
        return bp_spectrum(_parse_bp(args.bp))
    if args.sing:
        nvars = args.nvars or default_vars
        if nvars is None:
            raise InputError("--sing needs the number of variables (-n)")
        return builtin_singularity(args.sing, nvars)
    return _spectrum_of_poly(_read_poly(args), args.assume_nondegenerate)


def _spectrum_json(s: SpectralSet) -> dict:
    data = s.to_json()
    data["mu"] = s.mu
    return data


def _emit(out: TextIO, args, text: str, payload):
    if args.json:
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _interval(args) -> IntervalKind:
    return IntervalKind(args.interval)


# -- subcommands --------------------------------------------------------


def cmd_mu(args, out):
    f = _read_poly(args)
    data = milnor_number(f)
    if not data.is_isolated:
        raise NotIsolated(f"{f} is not an isolated singularity (mu is infinite)")
    basis = [str(Poly.monomial(f.variables, e)) for e in data.basis]
    _emit(out, args, str(data.mu), {"mu": data.mu, "basis": basis})


def cmd_spectrum(args, out):
    s = _germ_spectrum(args)
    _emit(out, args, f"mu = {s.mu}\n{s.table()}", _spectrum_json(s))


def cmd_newton_spectrum(args, out):
    if not args.assume_nondegenerate:
        raise InputError("newton-spectrum requires --assume-nondegenerate (nondegeneracy is not checked)")
    s = nondegenerate_spectrum(_read_poly(args))
    _emit(out, args, f"mu = {s.mu}\n{s.table()}", _spectrum_json(s))


def cmd_lct(args, out):
    f = _read_poly(args)
    value = lct(newton_polyhedron(support(f)))
    _emit(out, args, str(value), {"lct": str(value)})


def cmd_arnold(args, out):
    value = arnold.arnold_number(args.n, args.d)
    payload = {"n": args.n, "d": args.d, "arnold_number": value}
    if args.n == 3:
        payload["closed_form"] = str(arnold.arnold_closed_form_3(args.d))
    _emit(out, args, str(value), payload)


def cmd_bound(args, out):
    g = _germ_spectrum(args, default_vars=args.n)
    kind = _interval(args)
    other = IntervalKind.HALF_OPEN_RIGHT if kind is IntervalKind.OPEN else IntervalKind.OPEN
    value = arnold.max_copies(g, arnold.BoundProblem(args.n, args.d, kind))
    alt = arnold.max_copies(g, arnold.BoundProblem(args.n, args.d, other))
    text = str(value)
    payload = {"n": args.n, "d": args.d, "interval": kind.value, "bound": value}
    if alt != value:
        text += f"\n{other.value} intervals: {alt}"
        payload["other"] = {"interval": other.value, "bound": alt}
    _emit(out, args, text, payload)


def cmd_check(args, out):
    gs = _parse_singularity_list(args.sing or [], args.n)
    variables = [v.strip() for v in args.vars.split(",")] if args.vars else None
    for text in args.poly or []:
        gs.append(_spectrum_of_poly(parse_polynomial(text, variables), args.assume_nondegenerate))
    if not gs:
        raise InputError("check needs at least one --sing or --poly")
    report = arnold.check_configuration(gs, arnold.BoundProblem(args.n, args.d, _interval(args)))
    lines = [
        f"feasible: {'true' if report.feasible else 'false'}",
        f"worst alpha: {report.worst_alpha} (config {report.config_count}, fermat {report.fermat_count})",
        "alpha\tfermat\tconfig",
    ]
    lines += [f"{r.alpha}\t{r.fermat}\t{r.config}" for r in report.table]
    _emit(out, args, "\n".join(lines), report.to_json())


def _format_matrix(m) -> str:
    width = max(len(str(x)) for row in m for x in row)
    return "\n".join("[" + " ".join(f"{x:>{width}}" for x in row) + "]" for row in m)


def cmd_monodromy(args, out):
    if args.chain:
        basis = picard_lefschetz.ak_chain(args.chain)
        locals_ = [picard_lefschetz.local_monodromy(basis, i) for i in range(1, basis.rank + 1)]
        total = picard_lefschetz.total_monodromy(basis)
        order = picard_lefschetz.matrix_order(total, cap=args.cap)
        eig = picard_lefschetz.monodromy_eigenvalues(total)
        parts = [f"T_{i}:\n{_format_matrix(m)}" for i, m in enumerate(locals_, 1)]
        parts.append(f"T:\n{_format_matrix(total)}")
        parts.append(f"order: {order}")
        parts.append(f"eigenvalue fractions: {eig}")
        payload = {
            "local": [list(map(list, m)) for m in locals_],
            "total": list(map(list, total)),
            "order": order,
            "eigenvalues": [{"fraction": str(q), "mult": m} for q, m in eig.entries],
        }
        _emit(out, args, "\n".join(parts), payload)
        return
    s = _germ_spectrum(args)
    eig = eigenvalues(s)
    order = monodromy_order(eig)
    payload = {
        "eigenvalues": [{"fraction": str(q), "mult": m} for q, m in eig.entries],
        "semisimple_order": order,
    }
    lines = [f"eigenvalue fractions: {eig}"]
    try:
        cp = characteristic_polynomial(eig)
        lines.append(f"characteristic polynomial: {cp}")
        payload["characteristic_polynomial"] = str(cp)
    except GaloisUnstable as exc:
        lines.append(f"characteristic polynomial: not rational ({exc})")
        payload["characteristic_polynomial"] = None
    lines.append(f"order of semisimple part: {order}")
    _emit(out, args, "\n".join(lines), payload)


def cmd_classical(args, out):
    b = arnold.classical_bounds(args.d)
    payload = {
        "d": args.d,
        "basset": b.basset,
        "miyaoka_yau": None if b.miyaoka_yau is None else str(b.miyaoka_yau),
        "plane_curve": b.plane_curve,
    }
    rows = [
        ("basset", b.basset, "n/a (needs d >= 4)"),
        ("miyaoka_yau", b.miyaoka_yau, "n/a (needs d >= 4)"),
        ("plane_curve", b.plane_curve, "n/a (needs d >= 1)"),
    ]
    text = "\n".join(f"{name}: {why if v is None else v}" for name, v, why in rows)
    _emit(out, args, text, payload)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--vars", help="comma separated variable order, e.g. x,y,z")
    common.add_argument("--interval", choices=[k.value for k in IntervalKind], default="open")
    common.add_argument("--assume-nondegenerate", action="store_true",
                        help="assert that the input is Newton-nondegenerate")

    parser = argparse.ArgumentParser(prog="spectre", description="Spectra of isolated hypersurface singularities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def germ_args(p):
        p.add_argument("poly", nargs="?", help="polynomial, e.g. 'x^2+y^3'")
        p.add_argument("--bp", help="Brieskorn-Pham exponents, e.g. 2,3")
        p.add_argument("--sing", help="named germ: A<k>, D<k>, E6, E7, E8")

    p = sub.add_parser("mu", parents=[common], help="Milnor number")
    p.add_argument("poly")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("spectrum", parents=[common], help="spectrum of a quasi-homogeneous germ")
    germ_args(p)
    p.add_argument("-n", "--nvars", type=int, help="number of variables for --sing")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("newton-spectrum", parents=[common], help="spectrum of a nondegenerate germ")
    p.add_argument("poly")
    p.set_defaults(func=cmd_newton_spectrum)

    p = sub.add_parser("lct", parents=[common], help="log canonical threshold from the Newton diagram")
    p.add_argument("poly")
    p.set_defaults(func=cmd_lct)

    p = sub.add_parser("arnold", parents=[common], help="Arnold number A_n(d)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_arnold)

    p = sub.add_parser("bound", parents=[common], help="spectral bound on copies of one germ")
    p.add_argument("-n", type=int, required=True, help="hypersurface in P^n")
    p.add_argument("-d", type=int, required=True, help="degree")
    germ_args(p)
    p.set_defaults(func=cmd_bound, nvars=None)

    p = sub.add_parser("check", parents=[common], help="test a configuration against the spectral bound")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--sing", action="append", help="named germ, optionally with a count: 4xA1")
    p.add_argument("--poly", action="append", help="quasi-homogeneous germ in n variables")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("monodromy", parents=[common], help="monodromy eigenvalues and order")
    germ_args(p)
    p.add_argument("-n", "--nvars", type=int, help="number of variables for --sing")
    p.add_argument("--chain", type=int, help="Picard-Lefschetz matrices of an A_k morsification")
    p.add_argument("--cap", type=int, default=1000, help="search limit for the matrix order")
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("classical", parents=[common], help="Basset, Miyaoka-Yau and plane curve bounds")
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_classical)
    return parser


def run(argv: Sequence[str], out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except (InputError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except SpectreError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
