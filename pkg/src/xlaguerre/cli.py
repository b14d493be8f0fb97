"""Command-line interface: poly, potential, spectrum, verify.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
Exact rationals are written as "p/q" strings; floats with 17 significant
digits.  Data goes to stdout (or --out), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .eop import (
    FirstOrder,
    SeedKind,
    SSUSYCase,
    eop_first_order,
    eop_second_order,
)
from .numerics import DEFAULTS, GridSpec, bound_states, default_grid
from .orthopoly import laguerre, x1_laguerre
from .polycore import to_fraction
from .susy import (
    OscParams,
    extension_from_source,
    first_order_extension,
    oscillator_energy,
    ssusy_pair,
    v_conventional,
)
from .verify import SUITE_NAMES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FAMILIES = ("L", "X1", "L1", "L2", "LI_I", "LII_II", "LI_II")


class UsageError(Exception):
    pass


def ffmt(x: float) -> str:
    return format(float(x), ".17g")


def rfmt(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def dump_json(obj, indent: int = 0) -> str:
    """Deterministic JSON; floats rendered with 17 significant digits."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dump_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{inner}{dump_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not np.isfinite(obj):
            return json.dumps(str(obj))
        return ffmt(obj)
    if isinstance(obj, Fraction):
        return json.dumps(rfmt(obj))
    if isinstance(obj, int):
        return str(obj)
    return json.dumps(str(obj))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows: Sequence[Sequence], header: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# --- poly -------------------------------------------------------------------

def _poly_rows(args) -> list:
    alpha = to_fraction(args.alpha)
    fam = args.family
    rows = []
    if fam == "L":
        if args.n_max < 0:
            raise UsageError("n-max must be >= 0 for classical Laguerre")
        for n in range(args.n_max + 1):
            rows.append((n, 0, laguerre(n, alpha)))
    elif fam == "X1":
        if args.n_max < 1:
            raise UsageError("X_1 family starts at degree 1: need n-max >= 1")
        for n in range(1, args.n_max + 1):
            rows.append((n, 1, x1_laguerre(n, alpha)))
    elif fam in ("L1", "L2"):
        if args.m is None or args.m < 1:
            raise UsageError(f"family {fam} needs --m >= 1")
        if args.n_max < args.m:
            raise UsageError(f"family {fam} starts at degree m={args.m}: need n-max >= m")
        kind = SeedKind.TYPE_I if fam == "L1" else SeedKind.TYPE_II
        for nu in range(args.n_max - args.m + 1):
            e = eop_first_order(kind, alpha, args.m, nu)
            rows.append((e.n, e.mu, e.poly))
    else:
        if args.m1 is None or args.m2 is None:
            raise UsageError(f"family {fam} needs --m1 and --m2")
        case = {"LI_I": SSUSYCase.I_I, "LII_II": SSUSYCase.II_II, "LI_II": SSUSYCase.I_II}[fam]
        first = eop_second_order(case, alpha, args.m1, args.m2, 0)
        if args.n_max < first.mu:
            raise UsageError(f"family {fam} starts at degree mu={first.mu}: need n-max >= mu")
        for nu in range(args.n_max - first.mu + 1):
            e = eop_second_order(case, alpha, args.m1, args.m2, nu)
            rows.append((e.n, e.mu, e.poly))
    return rows


def cmd_poly(args) -> int:
    rows = _poly_rows(args)
    if args.format == "json":
        payload = {
            "family": args.family,
            "alpha": rfmt(to_fraction(args.alpha)),
            "indices": {"m": args.m, "m1": args.m1, "m2": args.m2},
            "rows": [{"n": n, "mu": mu, "coeffs": p.to_strings()} for n, mu, p in rows],
        }
        _emit(dump_json(payload) + "\n", args.out)
    else:
        flat = []
        for n, mu, p in rows:
            for k, c in enumerate(p.to_strings()):
                flat.append((args.family, rfmt(to_fraction(args.alpha)), n, mu, k, c))
        _emit(_csv(flat, ("family", "alpha", "n", "mu", "k", "coeff")), args.out)
    return EXIT_OK


# --- potential / spectrum ------------------------------------------------

def _select(args):
    """(label, potential, analytic level shift, params) for the chosen system."""
    params = OscParams(to_fraction(args.omega), args.l)
    if args.conventional:
        return "conventional", v_conventional(params), Fraction(0), params
    if args.mu1:
        spec = extension_from_source(params, FirstOrder(SeedKind.TYPE_I, 1))
        return "mu1", spec.potential(), Fraction(0), params
    if args.kind:
        if args.m is None:
            raise UsageError("--kind needs --m")
        kind = SeedKind.TYPE_I if args.kind == "I" else SeedKind.TYPE_II
        spec = first_order_extension(kind, params, args.m)
        return f"first:{args.kind}:{args.m}", spec.potential(), Fraction(0), params
    if args.case:
        if args.m1 is None or args.m2 is None:
            raise UsageError("--case needs --m1 and --m2")
        pair = ssusy_pair(SSUSYCase(args.case), params, args.m1, args.m2)
        return f"ssusy:{args.case}:{args.m1},{args.m2}", pair.V2, pair.energy_shift, params
    raise UsageError("choose one of --conventional, --mu1, --kind, --case")


def cmd_potential(args) -> int:
    label, pot, _, params = _select(args)
    xs = np.linspace(0.0, args.x_max, args.points)
    if pot.rfn.den(0) == 0:
        xs = xs[1:]
    vals = pot(xs)
    if args.format == "json":
        payload = {
            "system": label,
            "l": params.l,
            "omega": rfmt(params.omega),
            "samples": [{"x": float(x), "V": float(v)} for x, v in zip(xs, vals)],
        }
        _emit(dump_json(payload) + "\n", args.out)
    else:
        _emit(_csv([(ffmt(x), ffmt(v)) for x, v in zip(xs, vals)], ("x", "V")), args.out)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    label, pot, shift, params = _select(args)
    analytic = lambda j: float(oscillator_energy(params, j) + shift)
    tol = args.tol if args.tol is not None else DEFAULTS.spectrum_tol
    grid = default_grid(pot, float(params.omega), analytic(args.levels - 1))
    if args.points is not None or args.refinements is not None:
        grid = GridSpec(grid.x_min, grid.x_max,
                        args.points if args.points is not None else grid.points,
                        args.refinements if args.refinements is not None else grid.refinement_levels)
    rep = bound_states(pot, grid, args.levels, analytic=analytic, omega=float(params.omega), tol=tol)
    payload = {"system": label, "l": params.l, "omega": rfmt(params.omega), "declared_shift": shift}
    payload.update(rep.to_dict())
    if args.format == "csv":
        rows = [(lv.index, ffmt(lv.numeric), ffmt(lv.analytic), ffmt(lv.abs_error), lv.converged)
                for lv in rep.levels]
        _emit(_csv(rows, ("nu", "numeric", "analytic", "abs_error", "converged")), args.out)
    else:
        _emit(dump_json(payload) + "\n", args.out)
    return EXIT_OK


# --- verify -----------------------------------------------------------------

def cmd_verify(args) -> int:
    config = {"max_mu": args.max_mu}
    if args.tol is not None:
        config["tol"] = args.tol
    report = run_suites(args.suite, config)
    _emit(dump_json(report.to_dict()) + "\n", args.out)
    for c in report.checks:
        if c.status == "fail":
            print(f"FAIL {c.id}: {c.residual}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


# --- parser -----------------------------------------------------------------

def _add_system_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--omega", default="1")
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("--conventional", action="store_true")
    sel.add_argument("--mu1", action="store_true", help="the X1 extension, g = z + alpha")
    sel.add_argument("--kind", choices=("I", "II"), help="first-order seed type")
    sel.add_argument("--case", choices=[c.value for c in SSUSYCase], help="second-order case")
    p.add_argument("--m", type=int)
    p.add_argument("--m1", type=int)
    p.add_argument("--m2", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xlaguerre", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write data to this file instead of stdout")
        p.add_argument("--config", help="key=value file mirroring the flags")

    p = sub.add_parser("poly", help="exact coefficient tables")
    p.add_argument("--family", choices=FAMILIES, default="X1")
    p.add_argument("--alpha", default="3/2")
    p.add_argument("--m", type=int)
    p.add_argument("--m1", type=int)
    p.add_argument("--m2", type=int)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    common(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("potential", help="sampled potential V(x)")
    _add_system_flags(p)
    p.add_argument("--x-max", type=float, default=5.0)
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    common(p)
    p.set_defaults(func=cmd_potential)

    p = sub.add_parser("spectrum", help="numeric bound states vs the oscillator ladder")
    _add_system_flags(p)
    p.add_argument("--levels", type=int, default=5)
    p.add_argument("--points", type=int)
    p.add_argument("--refinements", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    p.add_argument("--max-mu", type=int, default=3)
    p.add_argument("--tol", type=float)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


_TRUE = {"1", "true", "yes", "on"}


def read_config(path: str) -> dict:
    """Parse ``key = value`` lines; '#' starts a comment."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.lstrip("-").replace("-", "_")] = value
    return out


def _apply_config(parser: argparse.ArgumentParser, argv: list) -> None:
    if "--config" not in argv and not any(a.startswith("--config=") for a in argv):
        return
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    values = read_config(known.config)
    sub_action = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    for sub in sub_action.choices.values():
        dests = {a.dest: a for a in sub._actions}
        defaults = {}
        for key, value in values.items():
            act = dests.get(key)
            if act is None:
                continue
            if isinstance(act, argparse._StoreTrueAction):
                defaults[key] = value.lower() in _TRUE
            elif act.type is not None:
                defaults[key] = act.type(value)
            else:
                defaults[key] = value
        sub.set_defaults(**defaults)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
    except (OSError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
