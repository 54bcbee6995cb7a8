"""``hyperphf`` command-line front end.

Exit codes: 0 on success, 1 on a numeric domain error or failed
verification, 2 on usage errors (argparse's own convention).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import crystallo
from .errors import ConvergenceError, DomainError
from .hermite import hermite2, hermite3, hermite_rotate, hphf3, hphf4
from .phf_core import phf_eval, sum_residual
from .tricomplex import (
    TriComplex,
    decompose,
    decomposition_residual,
    det_norm,
    invariant_rotate,
    polar,
    rotate,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def fmt(v) -> str:
    """17 significant digits: round-trips every double exactly."""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, int):
        return str(v)
    return format(v, ".17g")


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return fmt(v)
    return v


def emit(record: dict, kind: str, out) -> None:
    """Render one flat record as text, a one-row CSV, or a JSON object."""
    if kind == "json":
        out.write(json.dumps({k: _json_value(v) for k, v in record.items()}) + "\n")
    elif kind == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(record.keys())
        writer.writerow(fmt(v) for v in record.values())
    else:
        width = max(map(len, record))
        for k, v in record.items():
            out.write(f"{k:<{width}}  {fmt(v)}\n")


# ---- commands -------------------------------------------------------------

def cmd_eval(args) -> int:
    m = args.order
    if args.eta is not None and m not in (3, 4):
        raise UsageError("--eta is only valid with --order 3 or 4")
    if args.delta is not None and m != 4:
        raise UsageError("--delta is only valid with --order 4")

    if m == 4 and (args.eta is not None or args.delta is not None):
        eta, delta = args.eta or 0.0, args.delta or 0.0
        vec, total = hphf4(args.alpha, eta, delta), args.alpha + eta + delta
    elif m == 3 and args.eta is not None:
        vec, total = hphf3(args.alpha, args.eta), args.alpha + args.eta
    else:
        vec, total = phf_eval(m, args.alpha), args.alpha

    record = {"order": m, "alpha": args.alpha}
    if args.eta is not None:
        record["eta"] = args.eta
    if args.delta is not None:
        record["delta"] = args.delta
    record.update({f"e_{s}": v for s, v in enumerate(vec)})
    record["sum_residual"] = sum_residual(vec.values, total)
    emit(record, args.format, args.stream)
    return EXIT_OK


def cmd_decompose(args) -> int:
    zeta = TriComplex(args.x, args.y, args.z)
    beta, gamma = decompose(zeta)
    p = polar(zeta)
    emit(
        {
            "beta": beta,
            "gamma": gamma,
            "modulus": p.modulus,
            "phase": p.phase,
            "trace_sum": p.trace_sum,
            "det_norm": det_norm(zeta),
            "roundtrip_residual": decomposition_residual(zeta),
        },
        args.format,
        args.stream,
    )
    return EXIT_OK


def cmd_rotate(args) -> int:
    zeta = TriComplex(args.x, args.y, args.z)
    if args.eta is not None and args.invariant:
        raise UsageError("--invariant cannot be combined with --eta")
    if args.eta is not None:
        out = hermite_rotate(zeta, args.alpha, args.eta)
    elif args.invariant:
        out = invariant_rotate(zeta, args.alpha)
    else:
        out = rotate(zeta, args.alpha)
    p = polar(out)
    emit(
        {"x": out.x, "y": out.y, "z": out.z, "modulus": p.modulus, "phase": p.phase},
        args.format,
        args.stream,
    )
    return EXIT_OK


def cmd_hermite(args) -> int:
    if args.z is None:
        value = hermite2(args.n, args.x, args.y)
    else:
        value = hermite3(args.n, args.x, args.y, args.z)
    emit({"n": args.n, "value": value}, args.format, args.stream)
    return EXIT_OK


def cmd_crystallo(args) -> int:
    ops = crystallo.table()
    out = args.stream
    if args.action == "table":
        if args.format == "json":
            record = {
                f"{op.label}_{r}{c}": op.entries[r][c] for op in ops for r in range(3) for c in range(3)
            }
            out.write(json.dumps(record) + "\n")
        elif args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["label"] + [f"m{r}{c}" for r in range(3) for c in range(3)])
            for op in ops:
                writer.writerow([op.label] + [v for row in op.entries for v in row])
        else:
            for op in ops:
                rows = "  ".join("(" + " ".join(f"{v:2d}" for v in row) + ")" for row in op.entries)
                out.write(f"{op.label:<4} {rows}\n")
        return EXIT_OK
    if args.action == "orders":
        emit({op.label: crystallo.order_of(op) for op in ops}, args.format, args.stream)
        return EXIT_OK
    if args.action == "closure":
        closed, count = crystallo.closure_report()
        emit({"closed": closed, "product_count": count}, args.format, args.stream)
        return EXIT_OK
    return _report(run_suite("crystallo", args.tol, args.seed), args.format, out)


def cmd_verify(args) -> int:
    return _report(run_suite(args.suite, args.tol, args.seed), args.format, args.stream)


def _report(checks, kind: str, out) -> int:
    ok = all(c.passed for c in checks)
    if kind == "json":
        record = {f"{c.suite}: {c.name}": c.residual for c in checks}
        record["passed"] = ok
        out.write(json.dumps(record) + "\n")
    elif kind == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["suite", "identity", "max_residual", "tol", "passed"])
        for c in checks:
            writer.writerow([c.suite, c.name, fmt(c.residual), fmt(c.tol), fmt(c.passed)])
    else:
        for c in checks:
            mark = "PASS" if c.passed else "FAIL"
            out.write(f"[{mark}] {c.suite:<10} {c.name:<48} max residual {c.residual:.3e} (tol {c.tol:.1e})\n")
        failed = sum(not c.passed for c in checks)
        out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return EXIT_OK if ok else EXIT_FAIL


def sample_rows(order: int, start: float, stop: float, step: float):
    """Grid ``start + k * step`` up to ``stop`` (inclusive, to 1e-9 steps)."""
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    for k in range(count):
        alpha = start + k * step
        vec = phf_eval(order, alpha)
        yield [alpha, *vec.values, sum_residual(vec.values, alpha)]


def cmd_sample(args) -> int:
    if args.step <= 0:
        raise UsageError("--step must be positive")
    if args.start > args.stop:
        raise UsageError("--from must not exceed --to")
    writer = csv.writer(args.stream, lineterminator="\n")
    writer.writerow(["alpha", *(f"e_{s}" for s in range(args.order)), "sum_residual"])
    for row in sample_rows(args.order, args.start, args.stop, args.step):
        writer.writerow(fmt(v) for v in row)
    return EXIT_OK


# ---- parser ---------------------------------------------------------------

class UsageError(Exception):
    pass


def _order(text: str) -> int:
    m = int(text)
    if m < 2:
        raise argparse.ArgumentTypeError("order must be >= 2")
    return m


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--tol", type=float, default=1e-12,
                        help="base tolerance for verification suites (default 1e-12)")
    common.add_argument("--seed", type=int, default=0, help="seed for random samples")
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = argparse.ArgumentParser(
        prog="hyperphf",
        description="Pseudo-hyperbolic functions, tri-complex numbers and point operators.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common], help="evaluate (Hermite-extended) PHF")
    s.add_argument("--order", type=_order, required=True)
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--eta", type=float)
    s.add_argument("--delta", type=float)
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("decompose", parents=[common], help="exponential decomposition of x + yh + zk")
    for name in ("--x", "--y", "--z"):
        s.add_argument(name, type=float, required=True)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("rotate", parents=[common], help="act with exp(alpha h [+ eta k]) on x + yh + zk")
    for name in ("--x", "--y", "--z", "--alpha"):
        s.add_argument(name, type=float, required=True)
    s.add_argument("--eta", type=float)
    s.add_argument("--invariant", action="store_true", help="modulus-preserving variant")
    s.set_defaults(func=cmd_rotate)

    s = sub.add_parser("hermite", parents=[common], help="two/three-variable Hermite polynomial")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--x", type=float, required=True)
    s.add_argument("--y", type=float, required=True)
    s.add_argument("--z", type=float)
    s.set_defaults(func=cmd_hermite)

    s = sub.add_parser("crystallo", parents=[common], help="point-operator table")
    s.add_argument("action", choices=("table", "orders", "verify", "closure"))
    s.set_defaults(func=cmd_crystallo)

    s = sub.add_parser("verify", parents=[common], help="run identity checks")
    s.add_argument("suite", choices=(*SUITES, "all"))
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample", parents=[common], help="tabulate PHF on a grid as CSV")
    s.add_argument("--order", type=_order, required=True)
    s.add_argument("--from", dest="start", type=float, required=True)
    s.add_argument("--to", dest="stop", type=float, required=True)
    s.add_argument("--step", type=float, required=True)
    s.set_defaults(func=cmd_sample)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # buffer so a failed command never leaves a partial file behind
    args.stream = io.StringIO()
    try:
        code = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ConvergenceError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = args.stream.getvalue()
    if args.out is None:
        sys.stdout.write(text)
        return code
    try:
        with open(Path(args.out), "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return code


if __name__ == "__main__":
    sys.exit(main())
