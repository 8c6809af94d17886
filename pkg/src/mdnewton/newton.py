"""Newton's method on power series with a staggered truncation order.

Each iteration evaluates the system at the current order, retires the
leading stages whose residual fell below the tolerance, and solves the
remaining active stages by forward substitution with the QR factors of the
leading Jacobian coefficient A_0.  The order only advances once every active
stage has converged.
"""

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import counting, kernels
from .errors import MaxIterationsExceeded
from .evaldiff import evaluate_system
from .ledger import KernelLedger, section
from .linsolve import householder_qr, residual, toeplitz_solve
from .multidouble import MultiDouble
from .series import SeriesVec, max_md, series_norm, stage_norms


def staggered_orders(d_max):
    """Orders 1, then d + 1 + d // 2, capped at d_max."""
    if d_max < 1:
        raise ValueError("the maximal order must be at least 1")
    orders = [1]
    while orders[-1] < d_max:
        d = orders[-1]
        orders.append(min(d + 1 + d // 2, d_max))
    return orders


@dataclass
class IterationRecord:
    iteration: int
    order: int
    active: tuple  # first and one-past-last solved stage
    stage_norms: list  # ||b_k|| of the active stages before the solve
    b_norm: float
    dx_norm: float
    residual: float
    refactored: bool
    seconds: dict = field(default_factory=dict)  # cumulative per kernel class

    def as_dict(self):
        return {
            "iteration": self.iteration, "order": self.order, "active": list(self.active),
            "stage_norms": self.stage_norms, "b_norm": self.b_norm, "dx_norm": self.dx_norm,
            "residual": self.residual, "refactored": self.refactored, "seconds": self.seconds,
        }


@dataclass
class NewtonResult:
    iterations: int
    x: SeriesVec
    ledger: KernelLedger
    log: list
    converged: bool
    order: int
    retired: int  # stages known converged
    final_b_norm: MultiDouble
    qr_count: int
    min_diag: float
    ops: counting.OpCounter
    wall_seconds: float


def _norm_values(norms):
    return [float(MultiDouble(norms[:, j])) for j in range(norms.shape[1])]


def run_newton(system, x0, max_iter=24, tol=None, d_max=None, ledger=None,
               residual_rows=None, strict=False, on_iteration=None) -> NewtonResult:
    """Solve the series system from the start ``x0``.

    ``tol`` defaults to 1000 eps of the working precision.  With ``strict``
    a failure to converge raises :class:`MaxIterationsExceeded`; otherwise
    the result comes back with ``converged`` False.  ``on_iteration(record,
    x)`` is called after every update with the live coefficient array.
    """
    p = system.precision
    tol = 1e3 * p.eps if tol is None else tol
    d_max = system.order if d_max is None else d_max
    ledger = KernelLedger() if ledger is None else ledger
    schedule = staggered_orders(d_max)
    sqrt_eps = math.sqrt(p.eps)

    x = x0.resized(d_max).data.copy()
    start_ops = counting.counter().copy()
    t_start = time.perf_counter()

    step = 0
    order = schedule[step]
    retired = 0
    factors = None
    refactor = True
    qr_count = 0
    log = []
    iterations = 0
    converged = False
    b_norm = None

    while True:
        # evaluate, retire converged leading stages, advance the order if all are done
        while True:
            A, b = evaluate_system(system, x[..., :order], ledger)
            with section(ledger, "residuals"):
                norms = stage_norms(b.data)
            values = _norm_values(norms)
            while retired < order and values[retired] < tol:
                retired += 1
            if retired == order and order < d_max:
                step += 1
                order = schedule[step]
                continue
            break
        b_norm = max_md(norms[:, retired:]) if retired < order else MultiDouble.zero(p)
        if retired == order:
            converged = True
            break
        if iterations >= max_iter:
            break

        iterations += 1
        active = range(retired, order)
        refactored = False
        if factors is None or refactor:
            factors = householder_qr(A.coeff(0), ledger)
            qr_count += 1
            refactored = True
        dx = toeplitz_solve(A, b, factors, active, ledger)
        with section(ledger, "updates"):
            x[..., retired:order] = kernels.cadd(x[..., retired:order], dx.data[..., retired:order])
        res = residual(A, dx, b, active, residual_rows, ledger)
        with section(ledger, "residuals"):
            dx_norm = series_norm(dx.data[..., retired:order])
            if retired == 0:
                # reuse the factors while the leading correction stays small
                dx0 = max_md(stage_norms(dx.data[..., :1]))
                x0n = max_md(stage_norms(x[..., :1]))
                refactor = float(dx0) > sqrt_eps * float(x0n)
            else:
                refactor = False
        rec = IterationRecord(
            iteration=iterations, order=order, active=(retired, order),
            stage_norms=values[retired:order], b_norm=float(b_norm), dx_norm=float(dx_norm),
            residual=float(res), refactored=refactored,
            seconds={c: s.seconds for c, s in ledger.stats.items()},
        )
        log.append(rec)
        if on_iteration is not None:
            on_iteration(rec, x)

    result = NewtonResult(
        iterations=iterations, x=SeriesVec(x), ledger=ledger, log=log, converged=converged,
        order=order, retired=retired, final_b_norm=b_norm, qr_count=qr_count,
        min_diag=factors.min_diag if factors is not None else float("nan"),
        ops=counting.counter() - start_ops, wall_seconds=time.perf_counter() - t_start,
    )
    if strict and not converged:
        raise MaxIterationsExceeded(result)
    return result


def forward_error(x, exact):
    """max over k of the 1-norm of x_k - exact_k, as a float (exact arithmetic)."""
    from fractions import Fraction
    xd = x.data if isinstance(x, SeriesVec) else np.asarray(x)
    ed = exact.data if isinstance(exact, SeriesVec) else np.asarray(exact)
    d = min(xd.shape[3], ed.shape[3])
    worst = Fraction(0)
    for k in range(d):
        total = Fraction(0)
        for i in range(xd.shape[2]):
            for part in range(2):
                diff = (sum(map(Fraction, xd[part, :, i, k].tolist()))
                        - sum(map(Fraction, ed[part, :, i, k].tolist())))
                total += abs(diff)
        worst = max(worst, total)
    return float(worst)


def log_records(result: NewtonResult):
    """One JSON-ready dict per iteration, for line-oriented logs."""
    return [rec.as_dict() for rec in result.log]


def full_order_iteration(system, x, ledger=None):
    """One Newton step with every stage active: evaluate, factor, solve, update.

    Returns ``(seconds, ledger, x_new)``; used to compare precisions at a
    fixed amount of work.
    """
    ledger = KernelLedger() if ledger is None else ledger
    t0 = time.perf_counter()
    A, b = evaluate_system(system, x, ledger)
    factors = householder_qr(A.coeff(0), ledger)
    dx = toeplitz_solve(A, b, factors, None, ledger)
    with section(ledger, "updates"):
        xn = kernels.cadd(x.data, dx.data)
    residual(A, dx, b, None, None, ledger)
    return time.perf_counter() - t0, ledger, SeriesVec(xn)
