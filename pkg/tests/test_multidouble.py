import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mdnewton import counting, kernels
from mdnewton.errors import DivisionByZero, NegativeOperand, PrecisionMismatch
from mdnewton.multidouble import (COSTS, DD, OD, QD, D, MultiDouble, is_nonoverlapping,
                                  md_add, md_div, md_mul, md_sqrt, md_sub, op_cost,
                                  precision, renormalize, two_prod, two_sum)
from oracles import limbs_to_fraction, random_expansions

MULTI = [DD, QD, OD]


@st.composite
def expansions(draw, k, lo=-40, hi=40):
    """Nonoverlapping k-limb values with full-width random mantissas."""
    f = draw(st.integers(lo, hi)) - 52
    limbs = []
    for _ in range(k):
        m = draw(st.integers(1 << 52, (1 << 53) - 1)) * draw(st.sampled_from((-1, 1)))
        limbs.append(math.ldexp(m, f))
        f -= 54 + draw(st.integers(0, 6))
    cut = draw(st.integers(1, k))  # trailing zero limbs are legal too
    return MultiDouble(limbs[:cut] + [0.0] * (k - cut))


def rel_err(got, exact):
    got = got.to_fraction() if isinstance(got, MultiDouble) else got
    if exact == 0:
        return 0.0 if got == 0 else math.inf
    return float(abs(got - exact) / abs(exact))


# -- error-free transforms

def test_two_sum_examples():
    assert two_sum(1.0, 2.0 ** -60) == (1.0, 2.0 ** -60)
    assert two_sum(1.0, 0.0) == (1.0, 0.0)
    assert two_sum(2.0 ** 53, 1.0) == (2.0 ** 53, 1.0)


def test_two_prod_examples():
    assert two_prod(1.0, 1.0) == (1.0, 0.0)
    assert two_prod(0.0, 3.5) == (0.0, 0.0)
    a = 1 + 2.0 ** -52
    p, e = two_prod(a, a)
    assert p == a * a
    assert Fraction(p) + Fraction(e) == Fraction(a) ** 2
    assert e == 2.0 ** -104


@given(st.floats(-1e150, 1e150), st.floats(-1e150, 1e150))
def test_two_sum_exact(a, b):
    s, e = two_sum(a, b)
    assert s == a + b
    assert Fraction(s) + Fraction(e) == Fraction(a) + Fraction(b)


@given(st.floats(-1e100, 1e100), st.floats(-1e100, 1e100))
def test_two_prod_exact(a, b):
    assume(a == 0 or b == 0 or abs(a * b) > 1e-200)
    p, e = two_prod(a, b)
    assert p == a * b
    assert Fraction(p) + Fraction(e) == Fraction(a) * Fraction(b)


# -- precisions

def test_precision_table():
    assert [p.eps for p in (D, DD, QD, OD)] == [2.2e-16, 4.9e-32, 6.1e-64, 4.6e-128]
    assert [p.limbs for p in (D, DD, QD, OD)] == [1, 2, 4, 8]
    assert precision("qd") is QD and precision(8) is OD and precision(DD) is DD
    with pytest.raises(ValueError):
        precision(3)


# -- examples

@pytest.mark.parametrize("p", MULTI)
def test_add_identities(p):
    one = MultiDouble.from_value(1, p)
    assert md_add(one, MultiDouble.zero(p)) == one
    x = MultiDouble.from_value(Fraction(22, 7), p)
    assert not md_add(x, -x)
    assert md_mul(one, x) == x


def test_add_small_tail():
    r = md_add(MultiDouble.from_value(1, DD), MultiDouble([2.0 ** -60, 0.0]))
    assert r.limbs == (1.0, 2.0 ** -60)


def test_renormalize_examples():
    assert renormalize([0.5, 0.5], DD).limbs == (1.0, 0.0)
    assert renormalize([1.0, 1.0, 2.0 ** -60, 0.0], QD).limbs == (2.0, 2.0 ** -60, 0.0, 0.0)
    x = MultiDouble.from_value(Fraction(1, 3), QD)
    assert renormalize(x.limbs, QD) == x


@pytest.mark.parametrize("p", MULTI)
def test_div_examples(p):
    x = MultiDouble.from_value(Fraction(5, 7), p)
    assert md_div(x, MultiDouble.from_value(1, p)) == x
    third = md_div(MultiDouble.from_value(1, p), MultiDouble.from_value(3, p))
    assert rel_err(third, Fraction(1, 3)) <= 8 * p.eps
    with pytest.raises(DivisionByZero):
        md_div(x, MultiDouble.zero(p))


@pytest.mark.parametrize("p", MULTI)
def test_sqrt_examples(p):
    assert md_sqrt(MultiDouble.from_value(4, p)) == MultiDouble.from_value(2, p)
    assert not md_sqrt(MultiDouble.zero(p))
    with pytest.raises(NegativeOperand):
        md_sqrt(MultiDouble.from_value(-1, p))


def test_sqrt2_octo():
    r = md_sqrt(MultiDouble.from_value(2, OD)).to_fraction()
    # |r^2 - 2| / 2 ~ 2 |r - sqrt2| / sqrt2, so the relative error is half of it
    assert float(abs(r * r - 2) / 4) <= 8 * OD.eps


def test_precision_mismatch():
    with pytest.raises(PrecisionMismatch):
        md_add(MultiDouble.from_value(1, DD), MultiDouble.from_value(1, QD))


# frozen values: the correctly rounded limbs of 1/3 and of 1/10 (computed
# once with exact rational arithmetic)
FROZEN = {
    ("1/3", "dd"): ["0x1.5555555555555p-2", "0x1.5555555555555p-56"],
    ("1/10", "qd"): ["0x1.999999999999ap-4", "-0x1.999999999999ap-58",
                     "0x1.999999999999ap-112", "-0x1.999999999999ap-166"],
}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_from_value(key):
    value, name = key
    assert MultiDouble.from_value(Fraction(value), name).hex() == FROZEN[key]
    assert MultiDouble.fromhex(FROZEN[key]).to_precision(name).hex() == FROZEN[key]


# -- oracle properties

@pytest.mark.parametrize("p", MULTI)
def test_random_add_mul_against_dyadic_oracle(p):
    rng = np.random.default_rng(100 + p.limbs)
    a = random_expansions(rng, p.limbs, 300)
    b = random_expansions(rng, p.limbs, 300)
    for j in range(a.shape[1]):
        x, y = MultiDouble(a[:, j]), MultiDouble(b[:, j])
        fx, fy = limbs_to_fraction(a[:, j]), limbs_to_fraction(b[:, j])
        for got, exact in ((md_add(x, y), fx + fy), (md_sub(x, y), fx - fy), (md_mul(x, y), fx * fy)):
            assert rel_err(got, exact) <= 4 * p.eps
            assert is_nonoverlapping(got.limbs)


@pytest.mark.parametrize("p", MULTI)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_add_mul_properties(p, data):
    x = data.draw(expansions(p.limbs))
    y = data.draw(expansions(p.limbs))
    s, m = md_add(x, y), md_mul(x, y)
    assert s == md_add(y, x) and s.limbs == md_add(y, x).limbs
    assert m.limbs == md_mul(y, x).limbs
    assert rel_err(s, x.to_fraction() + y.to_fraction()) <= 4 * p.eps
    assert rel_err(m, x.to_fraction() * y.to_fraction()) <= 4 * p.eps
    assert is_nonoverlapping(s.limbs) and is_nonoverlapping(m.limbs)


@pytest.mark.parametrize("p", MULTI)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_div_sqrt_properties(p, data):
    x = data.draw(expansions(p.limbs))
    y = data.draw(expansions(p.limbs))
    q = md_div(x, y)
    assert rel_err(q, x.to_fraction() / y.to_fraction()) <= 8 * p.eps
    ax = abs(x)
    r = md_sqrt(ax).to_fraction()
    assert float(abs(r * r - ax.to_fraction()) / (2 * ax.to_fraction())) <= 8 * p.eps


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_quad_truncated_to_double_double(data):
    # double-double inputs, padded with zero limbs for the quad-double run
    x = data.draw(expansions(2))
    y = data.draw(expansions(2))
    xq, yq = (MultiDouble(list(v.limbs) + [0.0, 0.0]) for v in (x, y))
    for op in (md_add, md_mul):
        top = MultiDouble(op(xq, yq).limbs[:2]).to_fraction()
        assert rel_err(op(x, y), top) <= 4 * DD.eps


def test_decimal_and_hex_round_trip():
    x = MultiDouble.from_value("3.14159265358979323846264338327950288419716939937510", QD)
    assert MultiDouble.fromhex(x.hex()) == x
    assert str(x.to_decimal()).startswith("3.14159265358979323846264338327950288")
    assert str(x.to_decimal(30)) == "3.14159265358979323846264338328"


# -- operation counts

@pytest.mark.parametrize("p", MULTI)
def test_mul_count_is_constant(p):
    rng = np.random.default_rng(5)
    vals = random_expansions(rng, p.limbs, 20)
    seen = set()
    for j in range(19):
        with counting.count_ops() as ops:
            md_mul(MultiDouble(vals[:, j]), MultiDouble(vals[:, j + 1]))
        seen.add(ops.total)
    assert seen == {COSTS[p.limbs]["mul"].total}


def test_recorded_costs():
    assert COSTS[1]["mul"].total == 1 and COSTS[1]["add"].total == 1
    assert tuple(COSTS[2]["mul"]) == (6, 9, 9, 0)
    assert op_cost(DD, "div").div >= 1


def test_counter_is_thread_local():
    import threading

    x = MultiDouble.from_value(3, DD)
    seen = []

    def work():
        with counting.count_ops() as ops:
            md_mul(x, x)
        seen.append(ops.total)

    with counting.count_ops() as outer:
        t = threading.Thread(target=work)
        t.start()
        t.join()
    assert outer.total == 0
    assert seen == [COSTS[2]["mul"].total]


# -- compiled kernels agree bit for bit with the scalar routines

@pytest.mark.parametrize("p", [D, DD, QD, OD])
def test_kernels_match_scalar(p):
    rng = np.random.default_rng(9)
    a = random_expansions(rng, p.limbs, 64)
    b = random_expansions(rng, p.limbs, 64)
    s, m, d = kernels.radd(a, b), kernels.rmul(a, b), kernels.rsub(a, b)
    for j in range(64):
        x, y = MultiDouble(a[:, j]), MultiDouble(b[:, j])
        assert tuple(s[:, j]) == md_add(x, y).limbs
        assert tuple(d[:, j]) == md_sub(x, y).limbs
        assert tuple(m[:, j]) == md_mul(x, y).limbs


def test_kernel_counts():
    a = np.ones((4, 10))
    with counting.count_ops() as ops:
        kernels.rmul(a, a)
    assert ops.total == 10 * COSTS[4]["mul"].total
