from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdnewton import counting
from mdnewton.complexmd import (ComplexMD, PlanarVector, cmul_4m, planar_gather,
                                planar_scatter, to_planar)
from mdnewton.errors import IndexOutOfRange, PrecisionMismatch
from mdnewton.multidouble import COSTS, DD, OD, QD, MultiDouble

MULTI = [DD, QD, OD]


def c(re, im, p):
    return ComplexMD.from_value((Fraction(re), Fraction(im)), p)


@pytest.mark.parametrize("p", MULTI)
def test_cmul_examples(p):
    z = c("1/3", "-2/7", p)
    assert cmul_4m(ComplexMD.one(p), z).limbs().tolist() == z.limbs().tolist()
    i = c(0, 1, p)
    assert cmul_4m(i, i).limbs().tolist() == c(-1, 0, p).limbs().tolist()


def test_cmul_cost_dd():
    x, y = c("1/3", "1/5", DD), c("2/7", "-1/9", DD)
    with counting.count_ops() as ops:
        cmul_4m(x, y)
    expected = 4 * COSTS[2]["mul"].total + COSTS[2]["add"].total + COSTS[2]["sub"].total
    assert ops.total == expected


@pytest.mark.parametrize("p", [DD, QD])
@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=10 ** 6),
                min_size=4, max_size=4))
def test_cmul_against_exact(p, parts):
    a, b, cc, d = parts
    x, y = c(a, b, p), c(cc, d, p)
    xr, xi = x.to_fractions()
    yr, yi = y.to_fractions()
    re, im = (xr * yr - xi * yi), (xr * yi + xi * yr)
    got_re, got_im = cmul_4m(x, y).to_fractions()
    scale = abs(xr) * abs(yr) + abs(xi) * abs(yi) + abs(xr) * abs(yi) + abs(xi) * abs(yr)
    if scale:
        assert abs(got_re - re) / scale <= 8 * p.eps
        assert abs(got_im - im) / scale <= 8 * p.eps


def test_division_and_modulus():
    z = c(3, 4, QD)
    assert float(z.abs()) == 5.0
    assert float(z.abs1()) == 7.0
    q = z / z
    re, im = q.to_fractions()
    assert abs(re - 1) < Fraction(1, 10 ** 60) and abs(im) < Fraction(1, 10 ** 60)


def test_precision_mismatch():
    with pytest.raises(PrecisionMismatch):
        cmul_4m(c(1, 0, DD), c(1, 0, QD))


def test_planar_layout_and_round_trip():
    v = PlanarVector.zeros(3, DD)
    assert len(v.planes()) == 4 and all(pl.shape == (3,) for pl in v.planes())
    assert v.gather(1).is_zero()
    z = c("1/3", "5/7", DD)
    planar_scatter(v, 2, z)
    assert planar_gather(v, 2).limbs().tolist() == z.limbs().tolist()
    assert v.data[0, 1, 2] == z.re.limbs[1] and v.data[1, 0, 2] == z.im.limbs[0]
    with pytest.raises(IndexOutOfRange):
        v.gather(3)
    with pytest.raises(PrecisionMismatch):
        v.scatter(0, c(1, 0, QD))


def test_planar_bijection():
    entries = [c(k, -k, QD) for k in range(5)]
    v = PlanarVector.from_entries(entries)
    assert [e.limbs().tolist() for e in v.entries()] == [e.limbs().tolist() for e in entries]
    assert PlanarVector(v.data.copy()) == v


def test_to_planar_shapes():
    arr = to_planar([[1, (0, 1)], [2.5, 3]], OD)
    assert arr.shape == (2, 8, 2, 2)
    assert arr[1, 0, 0, 1] == 1.0 and arr[0, 0, 1, 0] == 2.5
    assert np.all(arr[:, 1:] == 0)
    assert MultiDouble(arr[0, :, 1, 1]) == MultiDouble.from_value(3, OD)
