"""Command-line front end: ``sicsets {verify,construct,curves,scan-table,selftest}``.

Exit status: 0 success (or a SIC set), 1 a verified negative result,
2 a usage or input error.
"""

from __future__ import annotations

import argparse
import ast
import math
import operator
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import classification as cls
from . import heisenberg as wh
from . import torus
from .formats import (
    FormatError,
    curve_csv,
    dumps_configuration,
    read_configuration,
    solutions_json,
    table_csv,
)
from .projective import (
    ALGEBRAIC_TOL,
    GEOMETRIC_TOL,
    Configuration,
    ProjectivePoint,
    moment_map,
    verify_sic,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- value parsing

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}
_NAMES = {"pi": math.pi}
_FUNCS = {"sqrt": math.sqrt}


def _eval_node(node) -> float:
    if isinstance(node, ast.Expression):
        return _eval_node(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) \
            and not isinstance(node.value, bool):
        return float(node.value)
    if isinstance(node, ast.Name) and node.id in _NAMES:
        return _NAMES[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval_node(node.left), _eval_node(node.right))
    if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
            and node.func.id in _FUNCS and len(node.args) == 1 and not node.keywords):
        return _FUNCS[node.func.id](_eval_node(node.args[0]))
    raise ValueError("unsupported expression")


def parse_real(text: str) -> float:
    """A real number or a small expression in pi and sqrt, e.g. ``pi/16`` or ``1/sqrt(3)``."""
    try:
        value = _eval_node(ast.parse(text.strip(), mode="eval"))
    except (SyntaxError, ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"cannot read {text!r} as a real number") from exc
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"{text!r} is not finite")
    return value


def parse_pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two comma-separated angles")
    return parse_real(parts[0]), parse_real(parts[1])


def parse_complex_list(text: str) -> list[complex]:
    try:
        return [complex(part.strip().replace("i", "j")) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot read {text!r} as complex coordinates") from exc


def parse_reals(text: str) -> list[float]:
    return [parse_real(part) for part in text.split(",")]


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from exc
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


# ---------------------------------------------------------------- commands

def _report(c: Configuration, tol: float, out) -> int:
    rep = verify_sic(c, tol=tol)
    kappas = c.pair_values()
    print(f"points: {len(c)} in CP^{c.n - 1}", file=out)
    print(f"cross ratios: min {kappas.min():.12g}  max {kappas.max():.12g}  target {rep.kappa:.12g}",
          file=out)
    print(f"{rep.separated_pairs}/{rep.total_pairs} pairs separated", file=out)
    print(f"max deviation {rep.max_deviation:.3e}  resolution defect {rep.resolution_defect:.3e}",
          file=out)
    print("verdict: SIC" if rep.is_sic else "verdict: not a SIC", file=out)
    return EXIT_OK if rep.is_sic else EXIT_NEGATIVE


def cmd_verify(args, out) -> int:
    try:
        c = read_configuration(args.input)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from exc
    except FormatError as exc:
        raise UsageError(str(exc)) from exc
    if len(c) != c.n ** 2:
        raise UsageError(f"a SIC set in CP^{c.n - 1} has {c.n ** 2} points; file has {len(c)}")
    return _report(c, args.tol, out)


def _need(value, flag: str, kind: str):
    if value is None:
        raise UsageError(f"--kind {kind} requires {flag}")
    return value


def build_configuration(args) -> Configuration:
    kind = args.kind
    if kind == "wh-orbit":
        coords = _need(args.fiducial, "--fiducial", kind)
        try:
            return wh.wh_orbit(ProjectivePoint(coords))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if kind == "midpoint":
        phases = args.phases if args.phases is not None else [0.0, 0.0, 0.0]
        if len(phases) != 3:
            raise UsageError("--phases needs three angles")
        return wh.midpoint_solution(phases)
    if kind == "s-theta":
        return wh.s_theta(_need(args.theta, "--theta", kind))
    if kind == "cp3":
        return wh.wh_orbit(wh.cp3_fiducial())
    if kind == "tetrahedron":
        return wh.tetrahedra_cp1()[args.which - 1]
    if kind == "m-eigen":
        return wh.m_eigen_config(args.index)[0]
    if kind == "fake-sic":
        return cls.fake_sic().configuration
    raise UsageError(f"unknown kind {kind}")


def cmd_construct(args, out) -> int:
    c = build_configuration(args)
    try:
        Path(args.out).write_text(dumps_configuration(c))
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    print(f"wrote {args.out}", file=out)
    return _report(c, args.tol, out)


def cmd_curves(args, out) -> int:
    if args.anchor is not None:
        anchor = torus.TorusCoord(*args.anchor)
    elif args.theta is not None:
        anchor = torus.TorusCoord(0.0, args.theta)
    else:
        raise UsageError("give --theta or --anchor")
    if anchor.is_pinch:
        raise UsageError("anchor is the pinch point [0,1,-1]")
    if args.resolution < 2:
        raise UsageError("--resolution must be at least 2")
    curve = torus.separation_curve(anchor, args.resolution)
    text = curve_csv(curve.samples)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    print(f"components: {curve.components}", file=sys.stderr if not args.out else out)
    return EXIT_OK


def _grid(args) -> list[Fraction]:
    if args.t is not None:
        values = args.t
    else:
        if args.step <= 0:
            raise UsageError("--step must be positive")
        start, stop, step = (Fraction(str(v)) for v in (args.start, args.stop, args.step))
        n = int((stop - start) / step + Fraction(1, 10**9))
        values = [start + k * step for k in range(n + 1)]
    grid = []
    for v in values:
        fv = float(v)
        if abs(fv) <= 1e-9 or abs(abs(fv) - cls.INV_SQRT3) <= 1e-9:
            print(f"warning: skipping excluded t = {fv:.12g}", file=sys.stderr)
            continue
        grid.append(v if isinstance(v, Fraction) else Fraction(str(v)))
    return grid


def cmd_scan_table(args, out) -> int:
    grid = _grid(args)
    if not grid:
        raise UsageError("no admissible t values")
    table = cls.scan_table(grid, workers=args.workers)
    rows = [(float(t), n) for t, n in table.rows]
    text = table_csv(rows)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out} ({len(rows)} rows)", file=out)
    else:
        out.write(text)
    for bp in table.breakpoints:
        print(f"breakpoint |t| ~ {abs(bp):.6f}", file=out if args.out else sys.stderr)
    if args.solutions:
        sols = [s for t, _ in table.rows for s in cls.case_iv_solutions(t)]
        Path(args.solutions).write_text(solutions_json(sols))
    return EXIT_OK


def _selftest_checks(source: dict | None) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    rng = random.Random(12345)

    def derivations():
        rep = cls.verify_derivations(source)
        return rep.ok, "; ".join(rep.lines())

    def sid_identity():
        worst = 0.0
        for _ in range(100):
            a, b, c = (rng.uniform(-1, 1) for _ in range(3))
            s = [a**k + b**k + c**k for k in range(5)]
            lhs = s[1] * (-a + b + c) * (a - b + c) * (a + b - c)
            worst = max(worst, abs(lhs - (s[2] ** 2 - 2 * s[4])))
        return worst <= ALGEBRAIC_TOL, f"max residual {worst:.2e}"

    def trig_identity():
        worst = max(abs(cls.trig_identity_residual(rng.uniform(-math.pi, math.pi),
                                                   rng.uniform(-math.pi, math.pi)))
                    for _ in range(100))
        return worst <= ALGEBRAIC_TOL, f"max residual {worst:.2e}"

    def clifford():
        r = wh.clifford_residuals()
        ok = max(r.cube, r.conj_shift, r.conj_clock_w) <= 1e-13
        return ok, (f"M^3 = i w^2 I {r.cube:.1e}, MAM^-1 = wB {r.conj_shift:.1e}, "
                    f"MBM^-1 = w A^-1 B^-1 {r.conj_clock_w:.1e} "
                    f"(with w^2 in place of w: {r.conj_clock:.2f})")

    def fibres():
        bad = 0
        for _ in range(64):
            theta = rng.uniform(-math.pi / 2, math.pi / 2)
            on = ProjectivePoint(np.sqrt(torus.incircle_point(theta))
                                 * np.exp(1j * np.array([rng.uniform(0, 6.3) for _ in range(3)])))
            if not verify_pairs(wh.h_orbit(on)):
                bad += 1
            v = np.array([rng.uniform(0.05, 1) for _ in range(3)])
            off = ProjectivePoint(v * np.exp(1j * np.array([rng.uniform(0, 6.3) for _ in range(3)])))
            x = moment_map(off)
            if abs(float(np.sum(x * x)) - 0.5) > 1e-3 and verify_pairs(wh.h_orbit(off)):
                bad += 1
        return bad == 0, f"{bad} failures in 128 samples"

    return [("derivations", derivations), ("power-sum identity", sid_identity),
            ("cosine identity", trig_identity), ("Clifford relations", clifford),
            ("clock orbits over the incircle", fibres)]


def verify_pairs(c: Configuration) -> bool:
    return bool(np.all(np.abs(c.pair_values() - 1 / (c.n + 1)) <= GEOMETRIC_TOL))


def cmd_selftest(args, out) -> int:
    source = None
    if args.table:
        source = {}
        for item in args.table:
            name, _, path = item.partition("=")
            if not path:
                raise UsageError("--table expects NAME=PATH")
            try:
                source[name] = Path(path).read_text()
            except OSError as exc:
                raise UsageError(f"cannot read {path}: {exc}") from exc
    failures = 0
    for name, check in _selftest_checks(source):
        try:
            ok, detail = check()
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}", file=out)
    return EXIT_OK if failures == 0 else EXIT_NEGATIVE


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sicsets", description="SIC sets in CP^2 and CP^3.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a configuration file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--tol", type=float, default=GEOMETRIC_TOL)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a named configuration")
    p.add_argument("--kind", required=True, choices=["wh-orbit", "midpoint", "s-theta", "cp3",
                                                     "tetrahedron", "m-eigen", "fake-sic"])
    p.add_argument("--theta", type=parse_real)
    p.add_argument("--fiducial", type=parse_complex_list)
    p.add_argument("--phases", type=parse_reals)
    p.add_argument("--which", type=int, choices=[1, 2], default=1)
    p.add_argument("--index", type=int, choices=[0, 1, 2], default=0)
    p.add_argument("--tol", type=float, default=GEOMETRIC_TOL)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("curves", help="points at distance 2pi/3 from an anchor on the torus")
    p.add_argument("--theta", type=parse_real)
    p.add_argument("--anchor", type=parse_pair, help="sigma,phi")
    p.add_argument("--resolution", type=int, default=2000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("scan-table", help="count generic solutions over a grid of t")
    p.add_argument("--from", dest="start", type=parse_real, default=0.05)
    p.add_argument("--to", dest="stop", type=parse_real, default=1.4)
    p.add_argument("--step", type=parse_real, default=0.01)
    p.add_argument("--t", type=parse_real, action="append", help="explicit t (repeatable)")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--out")
    p.add_argument("--solutions", help="also write the solutions as JSON")
    p.set_defaults(func=cmd_scan_table)

    p = sub.add_parser("selftest", help="identities, derivations and Clifford checks")
    p.add_argument("--table", action="append", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
