"""Command-line front end.

Examples::

    balloonstar extremal f1 --order 5
    balloonstar functional T23 --schwarz "i,0,0"
    balloonstar verify --format json --out report.json
    balloonstar y-lemma --abc "1,1,-1"
    balloonstar boundary --samples 512 --format csv
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

import numpy as np

from . import balloon, diskmax, verifier
from .caratheodory import SchwarzParams, SchwarzPrefix, p_from_params
from .errors import BalloonError
from .export import dumps_csv, dumps_json, fmt7, fmt17, fmt_complex
from .functionals import FUNCTIONALS, functional_id

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """A complex literal: ``1``, ``-0.5``, ``i``, ``2-3i``, ``1+2j``."""
    s = text.strip().replace(" ", "").replace("i", "j")
    if not s:
        raise UsageError("empty complex value")
    try:
        return complex(s)
    except ValueError:
        raise UsageError(f"cannot read {text!r} as a complex number") from None


def parse_complex_list(text: str) -> list[complex]:
    """Comma-separated complex literals; an empty string gives an empty list."""
    if not text.strip():
        return []
    return [parse_complex(part) for part in text.split(",")]


def parse_scalar(text: str) -> complex:
    """A complex scalar given as ``"re,im"`` or as a single literal."""
    parts = text.split(",")
    if len(parts) == 2:
        try:
            return complex(float(parts[0]), float(parts[1]))
        except ValueError:
            raise UsageError(f"cannot read {text!r} as 're,im'") from None
    if len(parts) == 1:
        return parse_complex(text)
    raise UsageError(f"expected 're,im' or a single value, got {text!r}")


# --- output helpers ---------------------------------------------------------------


def _table(rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)


def _num(v, machine: bool) -> str:
    fmt = fmt17 if machine else fmt7
    return fmt_complex(v, fmt) if isinstance(v, (complex, np.complexfloating)) else fmt(v)


def _named_values(title: str, pairs: list[tuple[str, complex]], fmt: str) -> str:
    if fmt == "json":
        return dumps_json({"quantity": title, "values": {k: complex(v) for k, v in pairs}})
    if fmt == "csv":
        return dumps_csv(["name", "re", "im"], [(k, float(complex(v).real), float(complex(v).imag)) for k, v in pairs])
    return _table([["name", "value"]] + [[k, _num(complex(v), False)] for k, v in pairs])


# --- commands -----------------------------------------------------------------------


def cmd_kernel(args) -> tuple[str, int]:
    k = balloon.kernel_series(args.order).series
    pairs = [(f"c{n}", k[n]) for n in range(args.order + 1)]
    return _named_values("kernel", pairs, args.format), EXIT_OK


def cmd_extremal(args) -> tuple[str, int]:
    f = balloon.extremal(args.label, args.order).f
    pairs = [(f"a{n}", f[n]) for n in range(1, args.order + 1)]
    return _named_values(f"extremal {args.label}", pairs, args.format), EXIT_OK


def _coefficient_set(args):
    if (args.schwarz is None) == (args.zeta is None):
        raise UsageError("give exactly one of --schwarz or --zeta")
    if args.schwarz is not None:
        b = parse_complex_list(args.schwarz)
        if not 3 <= len(b) <= 4:
            raise UsageError("--schwarz takes 3 or 4 values b1,b2,b3[,b4]")
        a2, a3, a4, a5 = balloon.coeffs_from_b(SchwarzPrefix(*b))
    else:
        z = parse_complex_list(args.zeta)
        if len(z) != 3:
            raise UsageError("--zeta takes 3 values z1,z2,z3")
        a2, a3, a4, a5 = balloon.coeffs_from_p(p_from_params(SchwarzParams(*z)))
    return balloon.full_coefficient_set(a2, a3, a4, 0.0 if a5 is None else a5), a5 is not None


def cmd_coeffs(args) -> tuple[str, int]:
    c, has_a5 = _coefficient_set(args)
    names = ["a2", "a3", "a4"] + (["a5"] if has_a5 else []) + [
        "gamma1", "gamma2", "gamma3", "Gamma1", "Gamma2", "Gamma3"]
    return _named_values("coefficients", [(n, getattr(c, n)) for n in names], args.format), EXIT_OK


def cmd_functional(args) -> tuple[str, int]:
    mu = parse_scalar(args.mu) if args.mu is not None else None
    try:
        fid = functional_id(args.id, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    c, has_a5 = _coefficient_set(args)
    if fid.depth >= 5 and not has_a5:
        raise UsageError(f"{fid.label} needs b4: pass four values to --schwarz")
    value = complex(fid(c))
    return _named_values(fid.label, [(fid.label, value), (f"|{fid.label}|", abs(value))], args.format), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    cfg = verifier.SweepConfig.from_grid(args.grid, tol_sharp=args.tol_sharp, order=args.order)
    only = [s.strip() for s in args.only.split(",") if s.strip()] if args.only else None
    mu_grid = parse_complex_list(args.mu) if args.mu is not None else list(verifier.DEFAULT_MU_GRID)
    try:
        report = verifier.full_report(cfg, mu_grid, only=only)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        text = report.to_json()
    elif args.format == "csv":
        text = report.to_csv()
    else:
        rows = [["functional", "bound", "observed", "extremal", "at extremal", "verdict"]]
        for c in report.checks:
            bound = f"{c.bound_num}/{c.bound_den}" if c.bound_num is not None else fmt7(c.bound)
            rows.append([c.name, bound, fmt7(c.observed), c.extremal, fmt7(c.extremal_value), c.verdict])
        text = _table(rows)
        for name, audit in report.audits.items():
            text += f"audit {name}: {'pass' if audit['pass'] else 'FAIL'}\n"
        text += f"overall: {'certified' if report.ok else 'NOT certified'}\n"
    return text, report.exit_status


def cmd_y_lemma(args) -> tuple[str, int]:
    if (args.abc is None) == (args.random is None):
        raise UsageError("give exactly one of --abc or --random")
    if args.abc is not None:
        vals = parse_complex_list(args.abc)
        if len(vals) != 3 or any(v.imag for v in vals):
            raise UsageError("--abc takes three real values A,B,C")
        triples = [tuple(v.real for v in vals)]
    else:
        if args.random < 1:
            raise UsageError("--random needs a positive count")
        rng = np.random.default_rng(args.seed)
        triples = [tuple(t) for t in rng.uniform(-3, 3, size=(args.random, 3))]
    rows = []
    status = EXIT_OK
    for A, B, C in triples:
        res = diskmax.y_exact(A, B, C)
        oracle = diskmax.y_oracle(A, B, C, args.oracle_grid)
        if oracle > res.value + 1e-9:
            status = EXIT_VIOLATED
        rows.append((float(A), float(B), float(C), float(res.value), res.branch, float(oracle), float(res.value - oracle)))
    header = ["A", "B", "C", "Y", "branch", "oracle", "gap"]
    if args.format == "json":
        return dumps_json([dict(zip(header, r)) for r in rows]), status
    if args.format == "csv":
        return dumps_csv(header, rows), status
    body = [[fmt7(v) if isinstance(v, float) else v for v in r] for r in rows]
    return _table([header] + body), status


def cmd_boundary(args) -> tuple[str, int]:
    pts = balloon.boundary_curve(args.samples)
    if args.format == "json":
        return balloon.boundary_json(pts), EXIT_OK
    if args.format == "csv":
        return balloon.boundary_csv(pts), EXIT_OK
    rows = [["theta", "re_w", "im_w"]] + [[fmt7(p.theta), fmt7(p.w.real), fmt7(p.w.imag)] for p in pts]
    return _table(rows), EXIT_OK


# --- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=12, help="series truncation order (default 12)")
    common.add_argument("--grid", default="24x64", help="sweep grid RADIALxANGULAR (default 24x64)")
    common.add_argument("--tol-sharp", type=float, default=1e-3, help="sharpness tolerance (default 1e-3)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="balloonstar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernel", parents=[common], help="Taylor coefficients of the kernel")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("extremal", parents=[common], help="coefficients of an extremal function")
    p.add_argument("label", choices=sorted(balloon.EXTREMAL_SCHWARZ))
    p.set_defaults(func=cmd_extremal)

    def source_flags(p):
        p.add_argument("--schwarz", help="Schwarz coefficients b1,b2,b3[,b4] (complex literals)")
        p.add_argument("--zeta", help="disk parameters z1,z2,z3 (complex literals)")

    p = sub.add_parser("coeffs", parents=[common], help="a_n, gamma_n and Gamma_n of a member")
    source_flags(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("functional", parents=[common], help="evaluate one functional")
    p.add_argument("id", help="one of FS, " + ", ".join(FUNCTIONALS))
    p.add_argument("--mu", help="parameter of FS, as 're,im' or a literal")
    source_flags(p)
    p.set_defaults(func=cmd_functional)

    p = sub.add_parser("verify", parents=[common], help="certify every bound")
    p.add_argument("--only", help="comma-separated functional names (FS for Fekete-Szegő)")
    p.add_argument("--mu", help="comma-separated mu values for FS (default 0.75,1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("y-lemma", parents=[common], help="disk maximum of |A+Bz+Cz^2| + 1 - |z|^2")
    p.add_argument("--abc", help="A,B,C")
    p.add_argument("--random", type=int, help="number of random triples in [-3, 3]^3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-grid", type=int, default=500)
    p.set_defaults(func=cmd_y_lemma)

    p = sub.add_parser("boundary", parents=[common], help="sample the boundary of the domain")
    p.add_argument("--samples", type=int, default=512)
    p.set_defaults(func=cmd_boundary)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, status = args.func(args)
    except (UsageError, BalloonError, ValueError) as exc:
        print(f"balloonstar {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())
