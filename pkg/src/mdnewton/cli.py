"""Command-line experiment harness.

    mdnewton run     one Newton solve, JSON report and JSONL log
    mdnewton sweep   one run per value along an axis, CSV table
    mdnewton verify  built-in oracle suites

Exit codes: 0 success, 1 usage error or failed verification, 2 no convergence.
"""

import argparse
import csv
import json
import os
import platform
import sys
import time

import numpy as np

from . import kernels
from .errors import LastCoefficientZero, MDError
from .ledger import CLASSES, KernelLedger
from .multidouble import PRECISIONS, precision
from .newton import forward_error, log_records, run_newton
from .serialize import encode_complex_limbs, encode_float, encode_md, encode_planar
from .series import fabry_ratio
from .sysgen import (UNSUPPORTED, SolutionSpec, make_alphas, make_system,
                     perturb_start, recommend_precision)

EXIT_OK, EXIT_USAGE, EXIT_NOT_CONVERGED = 0, 1, 2
SWEEP_AXES = ("precision", "order", "dim")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _damping(text):
    v = float(text)
    if not 0 < v <= 1:
        raise argparse.ArgumentTypeError("damping must lie in (0, 1]")
    return v


def _add_config(p):
    p.add_argument("--dim", type=_positive_int, default=16)
    p.add_argument("--order", type=_positive_int, default=64, help="maximal truncation order")
    p.add_argument("--precision", choices=list(PRECISIONS), default=None,
                   help="default: recommended for the order")
    p.add_argument("--columns", type=int, choices=(1, 2), default=1)
    p.add_argument("--alpha-mode", choices=("unit-complex", "real-near-one"), default="unit-complex")
    p.add_argument("--delta", type=float, default=0.1, help="width of the real-near-one interval")
    p.add_argument("--damping", type=_damping, default=1.0, help="scale of t in (0, 1]")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=_positive_int, default=24)
    p.add_argument("--tol", type=float, default=None, help="default 1000 eps")
    p.add_argument("--residual-sample", type=int, default=0, metavar="K",
                   help="residuals on K random equations (0: all)")
    p.add_argument("--threads", type=_positive_int,
                   default=int(os.environ.get("MDNEWTON_THREADS", "1") or 1))


def build_parser():
    parser = _Parser(prog="mdnewton", description="Power series Newton in multiple double precision.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="solve one test system")
    _add_config(run)
    run.add_argument("--report", default="-", help="JSON report path (- for stdout)")
    run.add_argument("--log", default=None, help="JSONL convergence log path")
    run.add_argument("--save-solution", action="store_true", help="include all solution limbs")

    sweep = sub.add_parser("sweep", help="repeat a run along one axis")
    _add_config(sweep)
    sweep.add_argument("--axis", choices=SWEEP_AXES, required=True)
    sweep.add_argument("--values", default="", help="comma separated")
    sweep.add_argument("--out", default="-", help="CSV path (- for stdout)")

    verify = sub.add_parser("verify", help="run the oracle suites")
    verify.add_argument("--suite", action="append", default=None)
    return parser


def config_from_args(args):
    cfg = {k: getattr(args, k) for k in ("dim", "order", "precision", "columns", "alpha_mode",
                                          "delta", "damping", "seed", "max_iters", "tol",
                                          "residual_sample", "threads")}
    rec = recommend_precision(cfg["order"])
    if cfg["precision"] is None:
        cfg["precision"] = "od" if rec is UNSUPPORTED else rec.name
    if not 0 <= cfg["residual_sample"] <= cfg["dim"]:
        raise UsageError("--residual-sample must lie between 0 and --dim")
    return cfg


def precision_warning(order, p):
    rec = recommend_precision(order)
    if rec is UNSUPPORTED:
        return f"warning: order exceeds octo-double guarantee (order {order} > 64)"
    if rec.limbs > precision(p).limbs:
        return f"warning: {precision(p).name} is below the {rec.name} recommended for order {order}"
    return None


def environment():
    import numba

    return {
        "python": platform.python_version(),
        "numpy": np.__version__,
        "numba": numba.__version__,
        "platform": platform.platform(),
        "cpu_count": os.cpu_count(),
        "threads": kernels.get_threads(),
    }


def execute(cfg):
    """Build the system, run Newton, and assemble the report dictionary."""
    kernels.set_threads(cfg["threads"])
    p = precision(cfg["precision"])
    rng = np.random.default_rng(cfg["seed"])
    alphas = make_alphas(cfg["dim"], p, rng, cfg["alpha_mode"], cfg["delta"])
    spec = SolutionSpec(alphas, cfg["order"], p, cfg["damping"])
    system, exact = make_system(spec, columns=cfg["columns"], rng=rng)
    x0 = perturb_start(exact, rng=rng)
    rows = None
    if cfg["residual_sample"]:
        rows = np.sort(rng.choice(cfg["dim"], cfg["residual_sample"], replace=False))
    ledger = KernelLedger()
    t0 = time.perf_counter()
    result = run_newton(system, x0, max_iter=cfg["max_iters"], tol=cfg["tol"], ledger=ledger,
                        residual_rows=rows)
    wall = time.perf_counter() - t0

    fabry = []
    for i in range(cfg["dim"]):
        try:
            z, r = fabry_ratio(result.x.component(i))
            fabry.append({"z": encode_complex_limbs(z.limbs()), "radius": encode_md(r.limbs)})
        except LastCoefficientZero:
            fabry.append(None)
    report = {
        "config": cfg,
        "converged": result.converged,
        "iterations": result.iterations,
        "order_reached": result.order,
        "stages_converged": result.retired,
        "qr_factorizations": result.qr_count,
        "min_diag_R": encode_float(result.min_diag),
        "final_b_norm": encode_md(result.final_b_norm.limbs),
        "forward_error": encode_float(forward_error(result.x, exact)),
        "log": log_records(result),
        "ledger": ledger.report(wall),
        "ops": result.ops.as_dict(),
        "fabry": fabry,
        "environment": environment(),
    }
    return report, result


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def _open_out(path):
    return sys.stdout if path == "-" else open(path, "w", newline="")


def cmd_run(args):
    cfg = config_from_args(args)
    warn = precision_warning(cfg["order"], cfg["precision"])
    if warn:
        print(warn, file=sys.stderr)
    report, result = execute(cfg)
    if args.save_solution:
        report["solution"] = encode_planar(result.x.data)
    if args.log:
        with open(args.log, "w") as fh:
            for rec in report["log"]:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
    out = _open_out(args.report)
    try:
        out.write(dumps(report) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK if result.converged else EXIT_NOT_CONVERGED


SWEEP_COLUMNS = (["value", "status", "converged", "iterations", "forward_error"]
                 + [f"{c}_seconds" for c in CLASSES]
                 + ["kernel_seconds", "wall_seconds"]
                 + [f"{c}_ops" for c in CLASSES]
                 + ["total_ops", "gflops"])


def _sweep_value(axis, text):
    try:
        v = precision(text).name if axis == "precision" else int(text)
    except ValueError:
        raise UsageError(f"bad {axis} value {text!r}") from None
    if axis == "precision":
        return v
    if v < 1:
        raise UsageError(f"{axis} values must be positive")
    return v


def sweep_row(cfg, axis, value):
    cfg = dict(cfg, **{axis: value})
    row = {"value": value}
    try:
        report, _ = execute(cfg)
    except MDError as exc:
        row["status"] = f"error: {type(exc).__name__}"
        return row
    led = report["ledger"]
    row.update(status="ok", converged=report["converged"], iterations=report["iterations"],
               forward_error=report["forward_error"]["decimal"],
               kernel_seconds=led["total_kernel_seconds"], wall_seconds=led["wall_seconds"],
               total_ops=led["total_ops"], gflops=led["wall_gflops"])
    for c in CLASSES:
        row[f"{c}_seconds"] = led["classes"][c]["seconds"]
        row[f"{c}_ops"] = led["classes"][c]["ops"]["total"]
    return row


def cmd_sweep(args):
    cfg = config_from_args(args)
    values = [_sweep_value(args.axis, v.strip()) for v in args.values.split(",") if v.strip()]
    out = _open_out(args.out)
    try:
        writer = csv.DictWriter(out, fieldnames=SWEEP_COLUMNS, restval="")
        writer.writeheader()
        for v in values:
            writer.writerow(sweep_row(cfg, args.axis, v))
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_verify(args):
    from .verify import SUITES, run_suites

    names = args.suite
    if names:
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
    results = run_suites(names)
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.checks:>5} checks  {r.detail}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_USAGE


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"run": cmd_run, "sweep": cmd_sweep, "verify": cmd_verify}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"mdnewton: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


__all__ = ["main", "build_parser", "execute", "precision_warning"]
