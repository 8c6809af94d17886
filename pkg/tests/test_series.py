import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdnewton import counting
from mdnewton.complexmd import ComplexMD
from mdnewton.errors import LastCoefficientZero, OrderMismatch, PrecisionMismatch
from mdnewton.multidouble import DD, OD, QD, D, MultiDouble
from mdnewton.series import (Series, SeriesVec, convolve, damp, exp_series, fabry_ratio,
                             ratio_sequence, series_norm)
from oracles import exp_coefficient, limbs_to_fraction, series_product


def frac(series, k):
    return (limbs_to_fraction(series.data[0, :, k]), limbs_to_fraction(series.data[1, :, k]))


def test_convolve_examples():
    a = Series.from_coeffs([1, 1, 0], D)
    assert convolve(a, a).to_complex().tolist() == [1, 2, 1]
    x = Series.from_coeffs([(0.5, 1), 2, -3, 4], QD)
    assert convolve(Series.one(4, QD), x) == x


def test_exp_square_is_exp_double():
    e = exp_series(1, 4, QD)
    sq = convolve(e, e)
    expected = [Fraction(1), Fraction(2), Fraction(2), Fraction(4, 3)]
    for k, v in enumerate(expected):
        re, im = frac(sq, k)
        assert im == 0 and abs(re - v) <= 4 * Fraction(QD.eps) * v


def test_convolution_counter():
    a = Series.from_coeffs([1, 2, 3, 4, 5], DD)
    with counting.count_ops() as ops:
        convolve(a, a)
    assert ops.series_products == 25


def test_convolve_errors():
    with pytest.raises(OrderMismatch):
        convolve(Series.zeros(3, DD), Series.zeros(4, DD))
    with pytest.raises(PrecisionMismatch):
        convolve(Series.zeros(3, DD), Series.zeros(3, QD))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=12, max_size=12))
def test_convolve_matches_numpy_on_integers(vals):
    a = np.array(vals[:6], dtype=float) + 1j * np.array(vals[6:], dtype=float)
    b = a[::-1] - 2
    sa = Series.from_coeffs([(z.real, z.imag) for z in a], DD)
    sb = Series.from_coeffs([(z.real, z.imag) for z in b], DD)
    assert np.array_equal(convolve(sa, sb).to_complex(), series_product(a, b, 6))
    assert convolve(sa, sb) == convolve(sb, sa)


@pytest.mark.parametrize("p", [DD, QD])
def test_convolve_associative(p):
    rng = np.random.default_rng(3)
    s = [Series.from_coeffs([tuple(rng.uniform(-1, 1, 2)) for _ in range(8)], p) for _ in range(3)]
    left = convolve(convolve(s[0], s[1]), s[2])
    right = convolve(s[0], convolve(s[1], s[2]))
    for k in range(8):
        for part in range(2):
            a, b = limbs_to_fraction(left.data[part, :, k]), limbs_to_fraction(right.data[part, :, k])
            assert abs(a - b) <= 8 * Fraction(p.eps) * 8 * max(abs(a), 1)


def test_exp_series_values():
    e = exp_series(1, 4, DD)
    for k, v in enumerate([1, 1, Fraction(1, 2), Fraction(1, 6)]):
        assert abs(frac(e, k)[0] - v) <= Fraction(DD.eps) * v
    big = exp_series(1, 64, OD)
    assert f"{float(big.coeff(7).re):.1e}" == "2.0e-04"
    assert f"{float(big.coeff(63).re):.1e}" == "5.0e-88"


@pytest.mark.parametrize("p", [DD, QD, OD])
def test_exp_series_against_exact(p):
    alpha = ComplexMD.from_value((Fraction(3, 5), Fraction(-4, 5)), p)
    re, im = alpha.to_fractions()
    d = 40
    e = exp_series(alpha, d, p)
    for k in range(d):
        xr, xi = exp_coefficient(re, im, k)
        gr, gi = frac(e, k)
        size = abs(xr) + abs(xi)
        assert abs(gr - xr) + abs(gi - xi) <= 4 * (k + 1) * Fraction(p.eps) * size


@pytest.mark.parametrize("p", [DD, QD])
def test_exp_product_law(p):
    a, b = (Fraction(1, 3), Fraction(1, 4)), (Fraction(-1, 2), Fraction(2, 3))
    sa, sb = exp_series(a, 16, p), exp_series(b, 16, p)
    ab = sa.coeff(1) + sb.coeff(1)
    lhs, rhs = convolve(sa, sb), exp_series(ab, 16, p)
    for k in range(16):
        (xr, xi), (yr, yi) = frac(lhs, k), frac(rhs, k)
        assert abs(xr - yr) + abs(xi - yi) <= 16 * Fraction(p.eps) * (abs(yr) + abs(yi))


def test_damp():
    x = Series.from_coeffs([1, 1, 1], DD)
    assert damp(x, 1) == x
    assert damp(x, Fraction(1, 2)).to_complex().tolist() == [1, 0.5, 0.25]
    d = MultiDouble.from_value(Fraction(1, 3), QD)
    got, want = damp(exp_series(1, 10, QD), d), exp_series((d.to_fraction(), 0), 10, QD)
    for k in range(10):
        assert abs(frac(got, k)[0] - frac(want, k)[0]) <= 4 * Fraction(QD.eps) * frac(want, k)[0]


def test_series_norm():
    z = SeriesVec.zeros(3, 4, DD)
    assert not series_norm(z)
    z.data[0, 0, 1, 2] = 3.0
    z.data[1, 0, 1, 2] = 4.0
    assert float(series_norm(z)) == 7.0
    z.data[:, :, :, [0, 2]] = z.data[:, :, :, [2, 0]]
    assert float(series_norm(z)) == 7.0


def test_fabry_geometric():
    z0 = ComplexMD.from_value((Fraction(3, 10), Fraction(2, 5)), QD)
    inv = ComplexMD.one(QD) / z0
    coeffs = [ComplexMD.one(QD)]
    for _ in range(7):
        coeffs.append(coeffs[-1] * inv)
    s = Series(np.stack([cc.limbs() for cc in coeffs], axis=-1))
    z, r = fabry_ratio(s)
    er, ei = z0.to_fractions()
    gr, gi = z.to_fractions()
    assert float(abs(gr - er) + abs(gi - ei)) / 0.5 <= 8 * QD.eps * 8
    assert abs(float(r) - 0.5) < 1e-30


def test_fabry_exp_diverges():
    alpha = (Fraction(3, 5), Fraction(4, 5))
    s = exp_series(alpha, 12, QD)
    z, r = fabry_ratio(s)
    assert abs(float(r) - 11.0) < 1e-12
    radii = [float(q.abs()) for q in ratio_sequence(s)]
    assert all(b > a for a, b in zip(radii, radii[1:]))


def test_fabry_errors():
    with pytest.raises(LastCoefficientZero):
        fabry_ratio(Series.from_coeffs([1, 2, 0], DD))


def test_json_round_trip():
    s = exp_series((Fraction(1, 3), Fraction(1, 7)), 5, OD)
    obj = json.loads(json.dumps(s.to_json()))
    assert Series.from_json(obj) == s
    v = SeriesVec.from_series([s, s])
    assert SeriesVec.from_json(json.loads(json.dumps(v.to_json()))) == v


def test_seriesvec_resizing():
    v = SeriesVec.from_series([exp_series(1, 6, DD)] * 2)
    assert v.truncate(3).order == 3
    w = v.resized(9)
    assert w.order == 9 and not w.data[..., 6:].any()
    assert math.isclose(float(v.coeff(2).gather(1).re), 0.5)
