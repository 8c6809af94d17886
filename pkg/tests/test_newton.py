import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdnewton import counting, kernels
from mdnewton.errors import MaxIterationsExceeded
from mdnewton.ledger import CLASSES
from mdnewton.multidouble import DD, QD, D, precision
from mdnewton.newton import forward_error, log_records, run_newton, staggered_orders
from mdnewton.sysgen import (SolutionSpec, make_alphas, make_system, perturb_start,
                             recommend_precision)


def problem(n, d, p, seed=0, columns=1, noise=None, mode="unit-complex"):
    rng = np.random.default_rng(seed)
    spec = SolutionSpec(make_alphas(n, p, rng, mode), d, p)
    system, exact = make_system(spec, columns=columns, rng=rng)
    return system, exact, perturb_start(exact, rng=rng, noise=noise)


def test_schedule():
    assert staggered_orders(64) == [1, 2, 4, 7, 11, 17, 26, 40, 61, 64]
    assert staggered_orders(4) == [1, 2, 4]
    assert staggered_orders(1) == [1]
    with pytest.raises(ValueError):
        staggered_orders(0)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 500))
def test_schedule_properties(d):
    s = staggered_orders(d)
    assert s[0] == 1 and s[-1] == d
    assert all(b > a for a, b in zip(s, s[1:]))
    assert all(b == min(a + 1 + a // 2, d) for a, b in zip(s, s[1:]))


def test_exact_start_one_solve_per_order():
    system, exact, x0 = problem(4, 8, DD, noise=0)
    r = run_newton(system, x0)
    assert r.converged
    # stage 0 is already solved; afterwards each order needs one solve
    assert r.iterations <= len(staggered_orders(8)) - 1
    assert all(rec.active[0] > 0 for rec in r.log)


def test_small_double_case():
    system, exact, x0 = problem(3, 4, D, seed=7)
    r = run_newton(system, x0)
    assert r.converged and r.iterations <= 5
    assert forward_error(r.x, exact) <= 1e3 * D.eps * 3


@pytest.mark.parametrize("p,d", [(DD, 20), (QD, 32)])
def test_convergence_and_accuracy(p, d):
    n = 6
    system, exact, x0 = problem(n, d, p, seed=3)
    r = run_newton(system, x0)
    assert r.converged and r.iterations <= 24
    assert forward_error(r.x, exact) <= 1e3 * p.eps * n
    assert r.qr_count == 1


def test_retired_stages_stay_frozen():
    system, exact, x0 = problem(5, 24, DD, seed=2)
    snaps = []
    r = run_newton(system, x0, on_iteration=lambda rec, x: snaps.append((rec.active, x.copy())))
    starts = [a[0] for a, _ in snaps]
    assert starts == sorted(starts)
    for (a0, x0_), (a1, x1) in zip(snaps, snaps[1:]):
        assert np.array_equal(x0_[..., :a1[0]], x1[..., :a1[0]])
    assert r.converged


def test_ledger_conservation():
    system, exact, x0 = problem(4, 11, DD, seed=1)
    with counting.count_ops() as ops:
        r = run_newton(system, x0)
    led = r.ledger
    assert led.total_ops == ops.total == r.ops.total
    assert led.invocations("qr") == 1
    active = sum(rec.active[1] - rec.active[0] for rec in r.log)
    assert led.invocations("qhb") == led.invocations("bs") == active
    rep = led.report(r.wall_seconds)
    assert abs(sum(rep["classes"][c]["percent"] for c in CLASSES) - 100) < 0.1


def test_iteration_cap():
    system, exact, x0 = problem(4, 16, DD, seed=4)
    r = run_newton(system, x0, max_iter=3)
    assert not r.converged and r.iterations == 3
    with pytest.raises(MaxIterationsExceeded) as err:
        run_newton(system, x0, max_iter=3, strict=True)
    assert err.value.result.iterations == 3


def test_two_column_same_solution():
    one, exact, x0 = problem(5, 16, QD, seed=9, columns=1)
    two, exact2, _ = problem(5, 16, QD, seed=9, columns=2)
    r1, r2 = run_newton(one, x0), run_newton(two, x0)
    assert r1.converged and r2.converged
    assert forward_error(r1.x, r2.x) <= 1e3 * QD.eps


def test_deterministic_across_threads():
    system, exact, x0 = problem(6, 12, DD, seed=5)
    results = []
    for t in (1, 3):
        kernels.set_threads(t)
        try:
            results.append(run_newton(system, x0))
        finally:
            kernels.set_threads(1)
    a, b = results
    assert np.array_equal(a.x.data, b.x.data)
    assert a.ops == b.ops


def test_log_records_are_json():
    system, exact, x0 = problem(3, 4, D)
    r = run_newton(system, x0)
    lines = [json.dumps(rec, sort_keys=True) for rec in log_records(r)]
    assert len(lines) == r.iterations
    first = json.loads(lines[0])
    assert set(first) >= {"iteration", "order", "stage_norms", "seconds"}
    assert set(first["seconds"]) == set(CLASSES)


@settings(max_examples=8, deadline=None)
@given(st.integers(1, 5), st.integers(1, 8), st.integers(0, 10 ** 6),
       st.sampled_from(["unit-complex", "real-near-one"]))
def test_forward_error_property(n, d, seed, mode):
    p = precision(recommend_precision(d))
    system, exact, x0 = problem(n, d, p, seed=seed, mode=mode)
    r = run_newton(system, x0)
    assert r.converged
    assert forward_error(r.x, exact) <= 1e3 * p.eps * n
