from pathlib import Path

import numpy as np
import pytest

from mdnewton import _codegen, counting, kernels
from mdnewton.complexmd import ComplexMD, cmul_4m
from mdnewton.multidouble import COSTS, DD, OD, QD, D, MultiDouble, md_add
from oracles import random_expansions


def test_generated_code_is_current():
    target = Path(_codegen.__file__).with_name("_kernels")
    for name, src in _codegen.render().items():
        assert (target / name).read_text() == src, f"{name} is stale; rerun the generator"


def complex_batch(rng, p, shape):
    n = int(np.prod(shape))
    re = random_expansions(rng, p.limbs, n, -3, 3).reshape((p.limbs,) + shape)
    im = random_expansions(rng, p.limbs, n, -3, 3).reshape((p.limbs,) + shape)
    return np.stack([re, im])


@pytest.mark.parametrize("p", [D, DD, QD, OD])
def test_cmul_kernel_matches_scalar(p):
    rng = np.random.default_rng(1)
    X, Y = complex_batch(rng, p, (16,)), complex_batch(rng, p, (16,))
    Z = kernels.cmul(X, Y)
    for i in range(16):
        want = cmul_4m(ComplexMD.from_limbs(X[:, :, i]), ComplexMD.from_limbs(Y[:, :, i]))
        assert np.array_equal(Z[:, :, i], want.limbs())


@pytest.mark.parametrize("p", [DD, QD])
def test_conv_kernel_matches_scalar_loop(p):
    rng = np.random.default_rng(2)
    d = 6
    X, Y = complex_batch(rng, p, (1, d)), complex_batch(rng, p, (1, d))
    Z = kernels.conv(X, Y)
    for k in range(d):
        acc = None
        for j in range(k + 1):
            term = cmul_4m(ComplexMD.from_limbs(X[:, :, 0, j]), ComplexMD.from_limbs(Y[:, :, 0, k - j]))
            acc = term if acc is None else acc + term
        assert np.array_equal(Z[:, :, 0, k], acc.limbs())


def test_conv_counts():
    X = np.zeros((2, 2, 3, 5))
    with counting.count_ops() as ops:
        kernels.conv(X, X)
    c = COSTS[2]
    cmul = 4 * c["mul"].total + c["add"].total + c["sub"].total
    cadd = 2 * c["add"].total
    assert ops.series_products == 3 * 25
    assert ops.total == 3 * (25 * cmul + 5 * 4 * cadd)


def test_rsum_fixed_order():
    rng = np.random.default_rng(3)
    X = random_expansions(rng, 4, 40).reshape(4, 1, 40)
    got = kernels.rsum(X)[:, 0]
    acc = MultiDouble(X[:, 0, 0])
    for j in range(1, 40):
        acc = md_add(acc, MultiDouble(X[:, 0, j]))
    assert tuple(got) == acc.limbs


@pytest.mark.parametrize("threads", [2, 5])
def test_thread_count_does_not_change_bits(threads):
    rng = np.random.default_rng(4)
    X, Y = complex_batch(rng, QD, (7, 9)), complex_batch(rng, QD, (7, 9))
    base = kernels.conv(X, Y)
    kernels.set_threads(threads)
    try:
        assert np.array_equal(kernels.conv(X, Y), base)
    finally:
        kernels.set_threads(1)
