"""Command-line front end: ``bohr-radii {radius,sweep,verify,plot}``.

Exit codes: 0 success, 1 usage error, 2 solve or verification failure.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoRootError, TruncationCapError
from .operators import Kind, OperatorSpec
from .radius import defining_equation, radius_sweep, scan_values, solve_radius
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2
OPERATORS = ("cesaro", "bernardi", "beta-cesaro", "dft")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    command: str
    operator: str | None
    beta: float | None = None
    m: int | None = None
    r: float | None = None
    tol: float = 1e-12
    output_format: str = "json"
    out_path: str | None = None

    def operator_spec(self) -> OperatorSpec:
        if self.operator not in OPERATORS:
            raise UsageError(f"--operator must be one of {', '.join(OPERATORS)}")
        needs_beta = self.operator in ("bernardi", "beta-cesaro")
        if needs_beta and self.beta is None:
            raise UsageError(f"--beta is required for {self.operator}")
        if not needs_beta and self.beta is not None:
            raise UsageError(f"--beta is not accepted for {self.operator}")
        if self.m is not None and self.operator != "bernardi":
            raise UsageError("--m is only legal for bernardi")
        try:
            if self.operator == "bernardi":
                return OperatorSpec.bernardi(self.beta, self.m or 0)
            if self.operator == "beta-cesaro":
                return OperatorSpec.beta_cesaro(self.beta)
            return OperatorSpec(Kind(self.operator))
        except DomainError as exc:
            raise UsageError(str(exc)) from exc


def fmt(x) -> str:
    """Fixed 15-significant-digit rendering used in every output."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    return format(x, ".15g")


def to_json(obj) -> str:
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (float, np.floating)):
        return "null" if not math.isfinite(obj) else fmt(obj)
    return json.dumps(obj)


def _csv(header, rows, comments=()):
    lines = [f"# {c}" for c in comments] + [",".join(header)]
    lines += [",".join(row) for row in rows]
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args, command) -> RunConfig:
    return RunConfig(
        command=command,
        operator=args.operator,
        beta=args.beta,
        m=args.m,
        r=getattr(args, "r", None),
        tol=args.tol,
        output_format=args.format or ("json" if command == "radius" else "csv"),
        out_path=args.out,
    )


def cmd_radius(args) -> int:
    cfg = _config(args, "radius")
    op = cfg.operator_spec()
    try:
        res = solve_radius(defining_equation(op, cfg.tol))
    except (NoRootError, TruncationCapError) as exc:
        print(f"radius: {exc}", file=sys.stderr)
        return EXIT_FAIL
    record = {
        "equation_id": res.equation_id,
        "radius": res.root,
        "residual": res.residual,
        "bracket": list(res.bracket),
        "iterations": res.iterations,
        "tol": cfg.tol,
    }
    if res.warnings:
        record["warnings"] = list(res.warnings)
    if cfg.output_format == "csv":
        row = [res.equation_id, fmt(res.root), fmt(res.residual), fmt(res.bracket[0]),
               fmt(res.bracket[1]), str(res.iterations), fmt(cfg.tol)]
        text = _csv(["equation_id", "radius", "residual", "bracket_lo", "bracket_hi", "iterations", "tol"], [row])
    else:
        text = to_json(record) + "\n"
    _emit(text, cfg.out_path)
    return EXIT_OK


def _sweep_betas(args):
    if args.betas:
        try:
            return [float(b) for b in args.betas.split(",") if b.strip()]
        except ValueError as exc:
            raise UsageError(f"bad --betas list: {exc}") from exc
    if args.beta_from is None or args.beta_to is None:
        raise UsageError("sweep needs --betas or --beta-from/--beta-to")
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    if args.steps == 1:
        return [args.beta_from]
    return list(np.linspace(args.beta_from, args.beta_to, args.steps))


def cmd_sweep(args) -> int:
    if args.operator not in ("bernardi", "beta-cesaro"):
        raise UsageError("sweep is defined for --operator bernardi or beta-cesaro")
    if args.m is not None and args.operator != "bernardi":
        raise UsageError("--m is only legal for bernardi")
    betas = _sweep_betas(args)
    # template only fixes the family; each beta is validated per row
    if args.operator == "bernardi":
        template = OperatorSpec.bernardi(1.0, args.m or 0)
    else:
        template = OperatorSpec.beta_cesaro(1.0)
    entries = radius_sweep(template, betas, args.tol)
    failed = any(e.result is None for e in entries)
    fmt_name = args.format or "csv"
    if fmt_name == "json":
        recs = [{"beta": e.beta,
                 "radius": e.result.root if e.result else math.nan,
                 "residual": e.result.residual if e.result else math.nan,
                 "note": e.error or ""} for e in entries]
        text = to_json(recs) + "\n"
    else:
        header = ["beta", "radius", "residual"] + (["note"] if failed else [])
        rows = []
        for e in entries:
            if e.result is None:
                note = (e.error or "").replace(",", ";").replace("\n", " ")
                rows.append([fmt(e.beta), "nan", "nan", note])
            else:
                rows.append([fmt(e.beta), fmt(e.result.root), fmt(e.result.residual)] + ([""] if failed else []))
        text = _csv(header, rows)
    _emit(text, args.out)
    return EXIT_OK


def _verify_ops(args):
    if args.operator is None:
        if args.beta is not None or args.m is not None:
            raise UsageError("--beta/--m need --operator")
        return None
    return [_config(args, "verify").operator_spec()]


def cmd_verify(args) -> int:
    ops = _verify_ops(args)
    r = 0.4 if args.r is None else args.r
    if not 0 < r < 1:
        raise UsageError("--r must lie in (0, 1)")
    checks = run_suite(args.suite, ops, offset=args.offset, residual_r=r, seed=args.seed)
    lines = []
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"{status} [{c.suite}] {c.name}: {fmt(c.value)} (limit {fmt(c.limit)})")
    failures = [c for c in checks if not c.passed]
    summary = {
        "suite": args.suite,
        "checks": len(checks),
        "passed": len(checks) - len(failures),
        "failed": len(failures),
        "failures": [dataclasses.asdict(c) for c in failures[:10]],
    }
    text = "\n".join(lines) + "\n" + to_json(summary) + "\n"
    _emit(text, args.out)
    return EXIT_FAIL if failures else EXIT_OK


def cmd_plot(args) -> int:
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    if args.operator is None:
        args.operator = "cesaro"
    op = _config(args, "plot").operator_spec()
    problem = defining_equation(op, args.tol)
    try:
        root = solve_radius(problem).root
    except (NoRootError, TruncationCapError) as exc:
        print(f"plot: {exc}", file=sys.stderr)
        return EXIT_FAIL
    r, vals = scan_values(problem, args.samples)
    col = "g1" if op.kind is Kind.CESARO else "phi"
    rows = [[fmt(a), fmt(b)] for a, b in zip(r, vals)]
    _emit(_csv(["r", col], rows, comments=[f"root={fmt(root)}"]), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bohr-radii", description="Bohr radii of Cesaro-type operators")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, operator_required=True):
        p.add_argument("--operator", required=operator_required, choices=OPERATORS)
        p.add_argument("--beta", type=float)
        p.add_argument("--m", type=int)
        p.add_argument("--tol", type=float, default=1e-12)
        p.add_argument("--format", choices=("json", "csv"))
        p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("radius", help="solve for one Bohr radius")
    common(p)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("sweep", help="tabulate the radius over beta")
    common(p)
    p.add_argument("--beta-from", type=float)
    p.add_argument("--beta-to", type=float)
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--betas", help="comma-separated explicit beta values")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a property suite")
    common(p, operator_required=False)
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--r", type=float, help="radius for the residual-order check")
    p.add_argument("--offset", type=float, default=0.01, help="distance from R for the sharpness scans")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="emit defining-function samples as CSV")
    common(p, operator_required=False)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not 0 < args.tol < 1e-3:
        print("bohr-radii: error: --tol must lie in (0, 1e-3)", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bohr-radii: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
