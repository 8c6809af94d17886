import math
from fractions import Fraction

import numpy as np
import pytest

from mdnewton.errors import DimensionMismatch
from mdnewton.evaldiff import evaluate_system
from mdnewton.multidouble import DD, OD, QD, D
from mdnewton.series import series_norm
from mdnewton.sysgen import (UNSUPPORTED, SolutionSpec, check_exponents, make_alphas,
                             make_system, perturb_start, recommend_precision,
                             triangular_ones, unit_complex)
from oracles import limbs_to_fraction


def test_triangular_ones():
    assert triangular_ones(3, "lower").tolist() == [[1, 0, 0], [1, 1, 0], [1, 1, 1]]
    assert triangular_ones(3, "upper").tolist() == [[1, 1, 1], [1, 1, 0], [1, 0, 0]]
    assert triangular_ones(1, "lower").tolist() == triangular_ones(1, "upper").tolist() == [[1]]
    with pytest.raises(ValueError):
        triangular_ones(3, "diagonal")


def test_upper_rows_are_reversed_lower_rows():
    lo, up = triangular_ones(6, "lower"), triangular_ones(6, "upper")
    for k in range(6):
        assert up[k].tolist() == lo[5 - k].tolist()


def test_check_exponents():
    with pytest.raises(ValueError):
        check_exponents([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        check_exponents([[2, 0], [0, 1]])
    with pytest.raises(DimensionMismatch):
        check_exponents([[1, 0, 1]])


def test_recommend_precision():
    assert recommend_precision(8) is D
    assert recommend_precision(24) is DD
    assert recommend_precision(32) is QD
    assert recommend_precision(64) is OD
    assert recommend_precision(96) is UNSUPPORTED
    order = {D: 1, DD: 2, QD: 4, OD: 8, UNSUPPORTED: 16}
    seq = [order[recommend_precision(d)] for d in range(1, 100)]
    assert seq == sorted(seq)


def test_unit_complex_exact_modulus():
    for theta in (0.1, -0.37, 0.49):
        re, im = unit_complex(theta)
        assert re * re + im * im == 1
        assert math.isclose(math.atan2(float(im), float(re)), 2 * math.pi * theta, abs_tol=1e-12)


def test_alpha_modes():
    rng = np.random.default_rng(0)
    a = make_alphas(50, DD, rng, "real-near-one", delta=0.2)
    vals = a[0, 0]
    assert np.all(a[1] == 0) and np.all((np.abs(vals) >= 0.8) & (np.abs(vals) <= 1))
    u = make_alphas(20, QD, rng)
    for i in range(20):
        m = limbs_to_fraction(u[0, :, i]) ** 2 + limbs_to_fraction(u[1, :, i]) ** 2
        assert abs(m - 1) < 4 * Fraction(QD.eps)


def test_lower_ones_rhs():
    spec = SolutionSpec(make_alphas(3, QD, None, "ones"), 4, QD)
    system, exact = make_system(spec)
    b1 = system.rhs.component(1)
    for k, v in enumerate([1, 2, 2, Fraction(4, 3)]):
        assert abs(limbs_to_fraction(b1.data[0, :, k]) - v) <= 4 * Fraction(QD.eps)


def test_single_variable_system():
    rng = np.random.default_rng(2)
    spec = SolutionSpec(make_alphas(1, DD, rng), 6, DD)
    system, exact = make_system(spec)
    assert system.rhs == exact


@pytest.mark.parametrize("columns", [1, 2])
@pytest.mark.parametrize("p", [DD, QD])
def test_exact_solution_has_tiny_residual(columns, p):
    rng = np.random.default_rng(4)
    n = 5
    spec = SolutionSpec(make_alphas(n, p, rng), 10, p)
    system, exact = make_system(spec, columns=columns, rng=rng)
    _, b = evaluate_system(system, exact)
    assert float(series_norm(b)) <= 16 * n * p.eps


def test_two_column_shares_solution():
    rng = np.random.default_rng(5)
    spec = SolutionSpec(make_alphas(3, QD, rng), 6, QD)
    one, ex1 = make_system(spec, columns=1, rng=rng)
    two, ex2 = make_system(spec, columns=2, rng=rng)
    assert ex1 == ex2
    assert [c.E.tolist() for c in two.columns] == [triangular_ones(3, "lower").tolist(),
                                                  triangular_ones(3, "upper").tolist()]


def test_damped_solution():
    spec = SolutionSpec(make_alphas(2, DD, None, "ones"), 5, DD, damping=0.5)
    _, exact = make_system(spec)
    assert exact.component(0).to_complex().real.tolist() == [1, 0.5, 0.125, 1 / 48, 1 / 384]


def test_perturb_start():
    rng = np.random.default_rng(6)
    spec = SolutionSpec(make_alphas(4, OD, rng), 8, OD)
    _, exact = make_system(spec)
    x0 = perturb_start(exact, rng=rng)
    assert x0.n == 4 and x0.order == 8 and x0.precision is OD
    assert not x0.data[..., 1:].any()
    for i in range(4):
        for part in range(2):
            e = limbs_to_fraction(exact.data[part, :, i, 0])
            g = limbs_to_fraction(x0.data[part, :, i, 0])
            if e:
                rel = abs(g / e - 1)
                assert 0 < rel <= 2.2e-64
    same = perturb_start(exact, rng=rng, noise=0)
    assert np.array_equal(same.data[..., 0], exact.data[..., 0])
