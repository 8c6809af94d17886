"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Reference values are computed by the independent oracles in ``oracles.py``.
"""

import time
from fractions import Fraction

import numpy as np
import pytest

from mdnewton import counting, kernels
from mdnewton.complexmd import ComplexMD
from mdnewton.evaldiff import REFERENCE_MUL_COST, speel_monomial
from mdnewton.linsolve import householder_qr, toeplitz_solve
from mdnewton.multidouble import COSTS, DD, OD, QD, D, MultiDouble, md_mul, precision
from mdnewton.newton import full_order_iteration, run_newton, staggered_orders
from mdnewton.series import Series, SeriesVec, exp_coefficients, exp_series, fabry_ratio, ratio_sequence
from mdnewton.sysgen import (Column, MonomialSystem, SolutionSpec, make_alphas, make_system,
                             perturb_start, triangular_ones)
from oracles import (dense_block_toeplitz, gauss_solve, limbs_to_fraction, random_expansions,
                     relative_errors_add, relative_errors_mul)

SEED = 7


def exact_forward_error(x, alphas, n, d):
    """max_k sum_i |x_ik - alpha_i^k / k!| (|re| + |im|), exactly."""
    worst = Fraction(0)
    coeffs = []
    for i in range(n):
        ar, ai = limbs_to_fraction(alphas[0, :, i]), limbs_to_fraction(alphas[1, :, i])
        cr, ci = Fraction(1), Fraction(0)
        row = []
        for k in range(d):
            if k:
                cr, ci = (cr * ar - ci * ai) / k, (cr * ai + ci * ar) / k
            row.append((cr, ci))
        coeffs.append(row)
    for k in range(d):
        total = Fraction(0)
        for i in range(n):
            er, ei = coeffs[i][k]
            total += abs(limbs_to_fraction(x[0, :, i, k]) - er)
            total += abs(limbs_to_fraction(x[1, :, i, k]) - ei)
        worst = max(worst, total)
    return float(worst)


def lower_ones_problem(n, d, p, columns=1, seed=SEED):
    rng = np.random.default_rng(seed)
    alphas = make_alphas(n, p, rng)
    system, exact = make_system(SolutionSpec(alphas, d, p), columns=columns, rng=rng)
    x0 = perturb_start(exact, rng=np.random.default_rng(seed + 1))
    return alphas, system, exact, x0


@pytest.fixture(scope="module")
def od_run():
    kernels.set_threads(1)
    alphas, system, exact, x0 = lower_ones_problem(16, 64, OD)
    before = counting.counter().copy()
    result = run_newton(system, x0)
    global_ops = counting.counter() - before
    return alphas, system, x0, result, global_ops


# 1 ---------------------------------------------------------------------------

def test_c01_arithmetic_conformance(criterion):
    rng = np.random.default_rng(1)
    t0 = time.perf_counter()
    worst = {}
    for p in (DD, QD, OD):
        a = random_expansions(rng, p.limbs, 100_000)
        b = random_expansions(rng, p.limbs, 100_000)
        # a tenth of the pairs cancel in their leading limbs
        b[:, :10_000] = -a[:, :10_000]
        b[-1, :10_000] += a[-1, :10_000] * 2.0 ** -20
        worst[p.name] = (relative_errors_add(a, b, kernels.radd(a, b), p.eps),
                         relative_errors_mul(a, b, kernels.rmul(a, b), p.eps))
    seconds = time.perf_counter() - t0
    ok = all(max(v) <= 4 for v in worst.values()) and seconds < 60
    detail = ", ".join(f"{k} add {v[0]:.2f} mul {v[1]:.2f} eps" for k, v in worst.items())
    assert criterion(1, ok, f"worst relative error {detail}; {seconds:.1f}s")


# 2 ---------------------------------------------------------------------------

def test_c02_cost_constants(criterion):
    rng = np.random.default_rng(2)
    per_call = {}
    for p in (DD, QD, OD):
        vals = random_expansions(rng, p.limbs, 50)
        seen = set()
        for j in range(49):
            with counting.count_ops() as ops:
                md_mul(MultiDouble(vals[:, j]), MultiDouble(vals[:, j + 1]))
            seen.add((ops.additions, ops.subtractions, ops.multiplications, ops.total))
        per_call[p.name] = seen
    constant = all(len(s) == 1 for s in per_call.values())
    counts = {k: next(iter(s)) for k, s in per_call.items()}
    dd_total = counts["dd"][3]
    ok = constant and dd_total == REFERENCE_MUL_COST[2]
    detail = "; ".join(f"{k} {c[0]} add {c[1]} sub {c[2]} mul = {c[3]} (reference {REFERENCE_MUL_COST[precision(k).limbs]})"
                       for k, c in counts.items())
    assert criterion(2, ok, f"constant per call: {constant}; {detail}")


# 3 ---------------------------------------------------------------------------

def test_c03_convolution_count_law(criterion):
    rng = np.random.default_rng(3)
    mismatches = []
    for n in (4, 8, 16):
        for d in (2, 8, 64):
            x = np.zeros((2, DD.limbs, n, d))
            x[:, 0] = rng.uniform(-1, 1, size=(2, n, d))
            with counting.count_ops() as ops:
                speel_monomial(list(range(n)), SeriesVec(x))
            if ops.series_products != (3 * n - 5) * d * d:
                mismatches.append((n, d, ops.series_products))
    assert criterion(3, not mismatches, f"9 (n, d) pairs, mismatches: {mismatches or 'none'}")


# 4 ---------------------------------------------------------------------------

def test_c04_toeplitz_equivalence(criterion):
    rng = np.random.default_rng(4)
    n, d = 3, 4
    A = rng.normal(size=(n, n, d)) + 1j * rng.normal(size=(n, n, d))
    b = rng.normal(size=(n, d)) + 1j * rng.normal(size=(n, d))
    Ap = np.stack([A.real, A.imag])[:, None]
    bp = np.stack([b.real, b.imag])[:, None]
    dx = toeplitz_solve(Ap, bp, householder_qr(Ap[..., 0])).data
    got = dx[0, 0] + 1j * dx[1, 0]
    ref = gauss_solve(dense_block_toeplitz(A, d), b.T.reshape(-1)).reshape(d, n).T
    err = float(np.max(np.abs(got - ref)))
    assert criterion(4, err <= 1e-10, f"max abs difference to dense 12x12 solve {err:.2e}")


# 5 ---------------------------------------------------------------------------

@pytest.mark.slow
def test_c05_newton_accuracy(od_run, criterion):
    alphas, _, _, result, _ = od_run
    err = exact_forward_error(result.x.data, alphas, 16, 64)
    bound = 1e3 * OD.eps * 16
    ok = result.converged and result.iterations <= 24 and err <= bound
    assert criterion(5, ok, f"{result.iterations} iterations, converged={result.converged}, "
                            f"max coefficient error {err:.2e} (bound {bound:.2e}), "
                            f"{result.wall_seconds:.1f}s")


# 6 ---------------------------------------------------------------------------

@pytest.mark.slow
def test_c06_precision_ladder(od_run, criterion):
    n = 16
    rows = []
    for d, p in ((8, D), (24, DD), (32, QD)):
        alphas, system, _, x0 = lower_ones_problem(n, d, p)
        r = run_newton(system, x0)
        rows.append((d, p, r.converged, exact_forward_error(r.x.data, alphas, n, d)))
    alphas, r = od_run[0], od_run[3]
    rows.append((64, OD, r.converged, exact_forward_error(r.x.data, alphas, n, 64)))
    good = all(conv and err <= 1e3 * p.eps * n for _, p, conv, err in rows)

    alphas, system, _, x0 = lower_ones_problem(n, 64, DD)
    r = run_newton(system, x0)
    dd_err = exact_forward_error(r.x.data, alphas, n, 64)
    dd_fails = not (r.converged and dd_err <= 1e3 * DD.eps * n)
    detail = "; ".join(f"({d}, {p.name}) err {err:.1e} <= {1e3 * p.eps * n:.1e}: {conv and err <= 1e3 * p.eps * n}"
                       for d, p, conv, err in rows)
    detail += f"; (64, dd) err {dd_err:.1e} vs {1e3 * DD.eps * n:.1e}, fails as required: {dd_fails}"
    assert criterion(6, good and dd_fails, detail)


# 7 ---------------------------------------------------------------------------

@pytest.mark.slow
def test_c07_two_column_equivalence(od_run, criterion):
    _, _, x0, one, _ = od_run
    _, system2, _, _ = lower_ones_problem(16, 64, OD, columns=2)
    two = run_newton(system2, x0)
    diff = Fraction(0)
    for k in range(64):
        total = Fraction(0)
        for i in range(16):
            for part in range(2):
                total += abs(limbs_to_fraction(one.x.data[part, :, i, k])
                             - limbs_to_fraction(two.x.data[part, :, i, k]))
        diff = max(diff, total)
    ratio = two.ledger.ops("convolution") / one.ledger.ops("convolution")
    inv = (one.ledger.invocations("convolution"), two.ledger.invocations("convolution"))
    ok = two.converged and float(diff) <= 1e3 * OD.eps and abs(ratio - 2) <= 0.1
    assert criterion(7, ok, f"max coefficient difference {float(diff):.2e} (bound {1e3 * OD.eps:.2e}); "
                            f"convolution op ratio {ratio:.3f} over {inv[1]}/{inv[0]} evaluations")


# 8 ---------------------------------------------------------------------------

def test_c08_staggered_schedule(criterion):
    got = staggered_orders(64)
    assert criterion(8, got == [1, 2, 4, 7, 11, 17, 26, 40, 61, 64], f"staggered_orders(64) = {got}")


# 9 ---------------------------------------------------------------------------

def test_c09_fabry_estimator(criterion):
    z0 = ComplexMD.from_value((Fraction(3, 10), Fraction(4, 10)), QD)
    inv = ComplexMD.one(QD) / z0
    coeffs = [ComplexMD.one(QD)]
    for _ in range(7):
        coeffs.append(coeffs[-1] * inv)
    z, _ = fabry_ratio(Series(np.stack([c.limbs() for c in coeffs], axis=-1)))
    er, ei = Fraction(3, 10), Fraction(4, 10)
    zr, zi = z.to_fractions()
    # |z0| = 1/2; the componentwise bound is within sqrt(2) of the modulus
    rel = float(max(abs(zr - er), abs(zi - ei)) / Fraction(1, 2))
    radii = [q.re.to_fraction() ** 2 + q.im.to_fraction() ** 2 for q in ratio_sequence(exp_series(1, 64, OD))]
    increasing = all(b > a for a, b in zip(radii, radii[1:]))
    ok = rel <= 1e-30 and increasing
    assert criterion(9, ok, f"geometric estimate relative error {rel:.1e}; "
                            f"exp(t) ratios strictly increasing: {increasing}")


# 10 --------------------------------------------------------------------------

def test_c10_ledger_sanity(od_run, criterion):
    _, _, _, r, global_ops = od_run
    led = r.ledger
    active = sum(rec.active[1] - rec.active[0] for rec in r.log)
    rep = led.report(r.wall_seconds)
    pct = sum(c["percent"] for c in rep["classes"].values())
    checks = {
        "qr once": led.invocations("qr") == 1,
        "qhb per active stage": led.invocations("qhb") == active,
        "bs per active stage": led.invocations("bs") == active,
        "percent sum": abs(pct - 100) <= 0.1,
        "ops conserved": led.total_ops == global_ops.total,
    }
    assert criterion(10, all(checks.values()),
                     f"{checks}; qr {led.invocations('qr')}, qhb/bs {led.invocations('qhb')}/"
                     f"{led.invocations('bs')} for {active} active stages, {pct:.3f}%")


# 11 --------------------------------------------------------------------------

@pytest.mark.slow
def test_c11_compute_bound_scaling(criterion):
    n = d = 64
    threads = 4
    kernels.set_threads(threads)
    try:
        timing = {}
        for p in (QD, OD):
            rng = np.random.default_rng(11)
            alphas = make_alphas(n, p, rng)
            x = SeriesVec(exp_coefficients(alphas, d))
            system = MonomialSystem([Column(triangular_ones(n, "lower"))], SeriesVec.zeros(n, d, p))
            small = MonomialSystem([Column(triangular_ones(3, "lower"))], SeriesVec.zeros(3, 2, p))
            full_order_iteration(small, SeriesVec(x.data[:, :, :3, :2]))  # compile and warm up
            seconds, led, _ = full_order_iteration(system, x)
            timing[p.name] = (seconds, led.total_ops)
    finally:
        kernels.set_threads(1)
    wall = timing["od"][0] / timing["qd"][0]
    ops = timing["od"][1] / timing["qd"][1]
    assert criterion(11, wall < ops, f"{threads} threads: wall od/qd {wall:.3f} "
                                     f"({timing['od'][0]:.1f}s / {timing['qd'][0]:.1f}s), "
                                     f"op-count od/qd {ops:.3f}")


# 12 --------------------------------------------------------------------------

@pytest.mark.slow
def test_c12_determinism(od_run, criterion):
    _, system, x0, first, _ = od_run
    kernels.set_threads(4)
    try:
        second = run_newton(system, x0)
    finally:
        kernels.set_threads(1)
    same_x = np.array_equal(first.x.data, second.x.data)
    same_ops = first.ops == second.ops and all(
        first.ledger.stats[c].ops == second.ledger.stats[c].ops for c in first.ledger.stats)
    assert criterion(12, same_x and same_ops, f"1 vs 4 threads: identical limbs {same_x}, "
                                              f"identical op counts {same_ops}")
