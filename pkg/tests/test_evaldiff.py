import numpy as np
import pytest

from mdnewton import counting
from mdnewton.errors import DimensionMismatch, DuplicateVariable, EmptyMonomial
from mdnewton.evaldiff import (convolution_count, evaluate_system, intensity_report,
                               plan_products, speel_monomial)
from mdnewton.multidouble import DD, OD, QD, D
from mdnewton.series import Series, SeriesVec, convolve
from mdnewton.sysgen import Column, MonomialSystem, SolutionSpec, make_alphas, make_system
from oracles import limbs_to_fraction, series_product


def random_vec(rng, n, d, p=D, ints=False):
    x = np.zeros((2, p.limbs, n, d))
    x[:, 0] = rng.integers(-9, 10, size=(2, n, d)) if ints else rng.uniform(-1, 1, size=(2, n, d))
    return SeriesVec(x)


def as_complex(s):
    return s.data[0, 0] + 1j * s.data[1, 0]


def test_four_variable_plan():
    plan = plan_products([[0, 1, 2, 3]], 4)
    assert plan.products == 7
    # values and gradients: x1x2x3x4, and products of the other three
    rng = np.random.default_rng(0)
    x = random_vec(rng, 4, 5, ints=True)
    value, grads = speel_monomial([0, 1, 2, 3], x)
    z = x.data[0, 0] + 1j * x.data[1, 0]

    def prod(idx):
        out = np.array([1] + [0] * 4, dtype=complex)
        for i in idx:
            out = series_product(out, z[i], 5)
        return out

    assert np.array_equal(as_complex(value), prod(range(4)))
    for v in range(4):
        assert np.array_equal(as_complex(grads[v]), prod([i for i in range(4) if i != v]))


def test_short_monomials():
    rng = np.random.default_rng(1)
    x = random_vec(rng, 3, 4)
    value, grads = speel_monomial([2], x)
    assert value == x.component(2) and grads[2] == Series.one(4, D)
    with counting.count_ops() as ops:
        value, grads = speel_monomial([0, 2], x)
    assert ops.series_products == 16
    assert grads[0] == x.component(2) and grads[2] == x.component(0)


def test_monomial_errors():
    with pytest.raises(EmptyMonomial):
        plan_products([[]], 3)
    with pytest.raises(DuplicateVariable):
        plan_products([[0, 0]], 3)
    with pytest.raises(DimensionMismatch):
        plan_products([[0, 5]], 3)


@pytest.mark.parametrize("m", [3, 4, 7, 12])
@pytest.mark.parametrize("d", [1, 3, 8])
def test_product_count_law(m, d):
    rng = np.random.default_rng(m * d)
    x = random_vec(rng, m, d)
    with counting.count_ops() as ops:
        speel_monomial(list(range(m)), x)
    assert ops.series_products == (3 * m - 5) * d * d == convolution_count(m, d)


@pytest.mark.parametrize("p", [DD, QD])
def test_gradient_reconstructs_value(p):
    rng = np.random.default_rng(2)
    x = np.zeros((2, p.limbs, 5, 6))
    x[:, 0] = rng.uniform(-1, 1, size=(2, 5, 6))
    x = SeriesVec(x)
    value, grads = speel_monomial(list(range(5)), x)
    for v, g in grads.items():
        again = convolve(x.component(v), g)
        for k in range(6):
            for part in range(2):
                a = limbs_to_fraction(again.data[part, :, k])
                b = limbs_to_fraction(value.data[part, :, k])
                assert abs(a - b) <= 8 * 6 * p.eps * 64


def test_brute_force_jacobian():
    """Dense check against direct expansion, one and two columns, doubles."""
    rng = np.random.default_rng(3)
    n, d = 4, 4
    E1 = np.array([[1, 0, 1, 0], [1, 1, 1, 1], [0, 1, 0, 0], [0, 1, 1, 1]])
    E2 = np.array([[0, 1, 0, 0], [1, 0, 0, 1], [1, 1, 1, 0], [1, 0, 0, 0]])
    c1 = rng.uniform(-1, 1, size=(2, 1, n))
    c2 = rng.uniform(-1, 1, size=(2, 1, n))
    rhs = random_vec(rng, n, d)
    system = MonomialSystem([Column(E1, c1), Column(E2, c2)], rhs)
    x = random_vec(rng, n, d)
    A, b = evaluate_system(system, x)
    z = x.data[0, 0] + 1j * x.data[1, 0]

    def prod(idx):
        out = np.array([1] + [0] * (d - 1), dtype=complex)
        for i in idx:
            out = series_product(out, z[i], d)
        return out

    cc = [c1[0, 0] + 1j * c1[1, 0], c2[0, 0] + 1j * c2[1, 0]]
    for i in range(n):
        f = sum(cc[c][i] * prod(np.flatnonzero(E[i])) for c, E in enumerate((E1, E2)))
        got_b = b.data[0, 0, i] + 1j * b.data[1, 0, i]
        want_b = (rhs.data[0, 0, i] + 1j * rhs.data[1, 0, i]) - f
        assert np.max(np.abs(got_b - want_b)) <= 1e-12
        for j in range(n):
            g = np.zeros(d, dtype=complex)
            for c, E in enumerate((E1, E2)):
                if E[i, j]:
                    g = g + cc[c][i] * prod([v for v in np.flatnonzero(E[i]) if v != j])
            got = A.data[0, 0, i, j] + 1j * A.data[1, 0, i, j]
            assert np.max(np.abs(got - g)) <= 1e-12


def test_lower_ones_leading_jacobian():
    spec = SolutionSpec(make_alphas(3, DD, np.random.default_rng(0)), 4, DD)
    system, exact = make_system(spec)
    A, _ = evaluate_system(system, exact)
    assert A.coeff(0)[0, 0, 2].tolist() == [1.0, 1.0, 1.0]
    assert A.coeff(0)[0, 0, 0].tolist() == [1.0, 0.0, 0.0]


def test_system_convolution_count():
    n, d = 7, 5
    spec = SolutionSpec(make_alphas(n, D, np.random.default_rng(0)), d, D)
    system, exact = make_system(spec)
    with counting.count_ops() as ops:
        evaluate_system(system, exact)
    expected = sum(convolution_count(m, d) for m in range(1, n + 1))
    assert ops.series_products == expected


def test_two_column_linearity():
    rng = np.random.default_rng(8)
    spec = SolutionSpec(make_alphas(4, QD, rng), 5, QD)
    two, _ = make_system(spec, columns=2, rng=rng)
    x = SeriesVec(two.rhs.data.copy())
    A, b = evaluate_system(two, x)
    parts = [evaluate_system(MonomialSystem([col], two.rhs), x) for col in two.columns]
    for k in range(5):
        for part in range(2):
            for i in range(4):
                f = limbs_to_fraction(two.rhs.data[part, :, i, k]) - limbs_to_fraction(b.data[part, :, i, k])
                f1 = limbs_to_fraction(two.rhs.data[part, :, i, k]) - limbs_to_fraction(parts[0][1].data[part, :, i, k])
                f2 = limbs_to_fraction(two.rhs.data[part, :, i, k]) - limbs_to_fraction(parts[1][1].data[part, :, i, k])
                assert abs(f - f1 - f2) <= 8 * QD.eps * (abs(f1) + abs(f2) + 1)


def test_intensity_factors():
    scale = {p.name: intensity_report(16, 8, p, measure=False).scale_factor for p in (DD, QD, OD)}
    assert scale == {"dd": 11.5, "qd": 84.0, "od": 217.75}
    assert round(scale["qd"] / scale["dd"], 2) == 7.30
    assert round(scale["od"] / scale["qd"], 2) == 2.59
    rep = intensity_report(16, 8, OD)
    assert rep.measured_series_products == (3 * 16 - 5) * 64
    big = intensity_report(64, 64, DD, measure=False)
    assert abs(big.conv_to_matvec - 3) < 0.1
