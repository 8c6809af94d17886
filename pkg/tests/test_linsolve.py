import numpy as np
import pytest

from mdnewton.errors import DimensionMismatch, SingularDiagonal
from mdnewton.ledger import KernelLedger
from mdnewton.linsolve import (back_substitute, householder_qr, qhb, residual, solve,
                               toeplitz_solve)
from mdnewton.multidouble import DD, OD, QD, D
from mdnewton.series import SeriesVec, series_norm
from oracles import dense_block_toeplitz, gauss_solve, limbs_to_fraction


def planar(z, p=D):
    """complex ndarray -> planar (2, K, ...) with the value in limb 0."""
    out = np.zeros((2, p.limbs) + z.shape)
    out[0, 0], out[1, 0] = z.real, z.imag
    return out


def to_complex(a):
    return a[0].sum(axis=0) + 1j * a[1].sum(axis=0)


def exact(a):
    """planar array -> complex array of Fractions pairs (re, im) as object arrays."""
    shape = a.shape[2:]
    re = np.empty(shape, dtype=object)
    im = np.empty(shape, dtype=object)
    for idx in np.ndindex(shape):
        re[idx] = limbs_to_fraction(a[(0, slice(None)) + idx])
        im[idx] = limbs_to_fraction(a[(1, slice(None)) + idx])
    return re, im


def exact_matmul(A, B):
    ar, ai = A
    br, bi = B
    return ar.dot(br) - ai.dot(bi), ar.dot(bi) + ai.dot(br)


def random_matrix(rng, n, p):
    out = np.zeros((2, p.limbs, n, n))
    out[:, 0] = rng.uniform(-1, 1, size=(2, n, n))
    if p.limbs > 1:
        out[:, 1] = rng.uniform(-1, 1, size=(2, n, n)) * 2.0 ** -60
    return out


def test_identity_and_hand_case():
    I = planar(np.eye(3).astype(complex))
    f = householder_qr(I)
    assert np.allclose(np.abs(to_complex(f.R)), np.eye(3))
    A = planar(np.array([[3, 0], [4, 0]], dtype=complex))
    f = householder_qr(A)
    assert abs(to_complex(f.R)[0, 0]) == 5.0
    assert f.singular == (1,) and f.min_diag == 0.0


@pytest.mark.parametrize("p", [DD, QD, OD])
def test_orthogonality_and_reconstruction(p):
    n = 6
    rng = np.random.default_rng(p.limbs)
    A = random_matrix(rng, n, p)
    f = householder_qr(A)
    QH = exact(f.QH)
    Q = exact(f.Q)
    R = exact(f.R)
    qq = exact_matmul(QH, Q)
    qr = exact_matmul(Q, R)
    Ae = exact(A)
    tol = 32 * n * p.eps
    for i in range(n):
        for j in range(n):
            assert abs(qq[0][i, j] - (1 if i == j else 0)) + abs(qq[1][i, j]) <= tol
            assert abs(qr[0][i, j] - Ae[0][i, j]) + abs(qr[1][i, j] - Ae[1][i, j]) <= 2 * tol
            if i > j:
                assert R[0][i, j] == 0 and R[1][i, j] == 0


def test_qhb_preserves_norm_and_checks_shape():
    rng = np.random.default_rng(1)
    f = householder_qr(random_matrix(rng, 5, QD))
    b = np.zeros((2, 4, 5))
    b[:, 0] = rng.uniform(-1, 1, (2, 5))
    y = qhb(f, b)
    nb = sum(limbs_to_fraction(b[c, :, i]) ** 2 for c in range(2) for i in range(5))
    ny = sum(limbs_to_fraction(y[c, :, i]) ** 2 for c in range(2) for i in range(5))
    assert abs(float(ny / nb) - 1) <= 32 * 5 * QD.eps
    with pytest.raises(DimensionMismatch):
        qhb(f, np.zeros((2, 4, 3)))


def test_solve_matches_gauss():
    rng = np.random.default_rng(2)
    M = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    b = rng.normal(size=4) + 1j * rng.normal(size=4)
    got = to_complex(solve(householder_qr(planar(M)), planar(b)))
    assert np.max(np.abs(got - gauss_solve(M, b))) <= 1e-12


def test_back_substitution():
    R = planar(np.array([[2, 1], [0, 4]], dtype=complex))
    assert to_complex(back_substitute(R, planar(np.array([4, 8], dtype=complex)))).tolist() == [1, 2]
    I = planar(np.eye(3, dtype=complex), DD)
    y = planar(np.array([1, 2j, -3]), DD)
    assert np.array_equal(back_substitute(I, y), y)
    with pytest.raises(SingularDiagonal) as err:
        back_substitute(planar(np.array([[1, 1], [0, 0]], dtype=complex)), planar(np.ones(2, dtype=complex)))
    assert err.value.index == 1


def test_back_substitution_dense_oracle():
    rng = np.random.default_rng(3)
    R = np.triu(rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))) + 4 * np.eye(8)
    y = rng.normal(size=8) + 1j * rng.normal(size=8)
    got = to_complex(back_substitute(planar(R), planar(y)))
    assert np.max(np.abs(got - gauss_solve(R, y))) <= 16 * 8 * D.eps * np.max(np.abs(y)) * 10


def toeplitz_problem(rng, n, d):
    A = rng.normal(size=(n, n, d)) + 1j * rng.normal(size=(n, n, d))
    A[:, :, 0] += 3 * np.eye(n)
    b = rng.normal(size=(n, d)) + 1j * rng.normal(size=(n, d))
    return A, b


@pytest.mark.parametrize("n,d", [(1, 1), (2, 3), (3, 4), (4, 4)])
def test_toeplitz_matches_dense(n, d):
    rng = np.random.default_rng(10 * n + d)
    A, b = toeplitz_problem(rng, n, d)
    Ap, bp = planar(A), planar(b)
    dx = toeplitz_solve(Ap, bp, householder_qr(Ap[..., 0])).data
    ref = gauss_solve(dense_block_toeplitz(A, d), b.T.reshape(-1)).reshape(d, n).T
    assert np.max(np.abs(to_complex(dx) - ref)) <= 1e-10


def test_toeplitz_zero_rhs_and_inactive_stages():
    rng = np.random.default_rng(4)
    A, b = toeplitz_problem(rng, 3, 5)
    Ap = planar(A, DD)
    f = householder_qr(Ap[..., 0])
    assert not toeplitz_solve(Ap, np.zeros((2, 2, 3, 5)), f).data.any()
    bp = planar(b, DD)
    bp[..., :2] = 0
    part = toeplitz_solve(Ap, bp, f, range(2, 5)).data
    full = toeplitz_solve(Ap, bp, f).data
    assert not part[..., :2].any()
    assert np.array_equal(part, full)


def test_toeplitz_ledger_counts():
    rng = np.random.default_rng(5)
    A, b = toeplitz_problem(rng, 3, 4)
    led = KernelLedger()
    f = householder_qr(planar(A)[..., 0], led)
    toeplitz_solve(planar(A), planar(b), f, range(1, 4), led)
    assert led.invocations("qr") == 1
    assert led.invocations("qhb") == led.invocations("bs") == 3
    assert led.invocations("updates") == 2


def test_residual():
    rng = np.random.default_rng(6)
    A, b = toeplitz_problem(rng, 3, 4)
    Ap, bp = planar(A), planar(b)
    dx = toeplitz_solve(Ap, bp, householder_qr(Ap[..., 0]))
    assert float(residual(Ap, dx, bp)) <= 1e-12
    zero = SeriesVec(np.zeros_like(bp))
    assert residual(Ap, zero, bp) == series_norm(bp)
    noisy = SeriesVec(dx.data + 1e-3)
    full = residual(Ap, noisy, bp)
    for rows in ([0], [1, 2], [2]):
        assert residual(Ap, noisy, bp, rows=rows) <= full


def test_error_growth_is_geometric():
    """Relative errors of dx_k in double grow at most geometrically with k."""
    rng = np.random.default_rng(7)
    n, d = 3, 12
    A, b = toeplitz_problem(rng, n, d)
    A = A * (0.5 ** np.arange(d))
    Ap = np.zeros((2, 2, n, n, d))
    Ap[:, 0] = planar(A)[:, 0]
    bp = np.zeros((2, 2, n, d))
    bp[:, 0] = planar(b)[:, 0]
    hi = toeplitz_solve(Ap, bp, householder_qr(Ap[..., 0])).data
    lo = toeplitz_solve(planar(A), planar(b), householder_qr(planar(A)[..., 0])).data
    err = np.max(np.abs(to_complex(lo) - to_complex(hi)), axis=0)
    ks = np.arange(d)
    mask = err > 0
    slope, icpt = np.polyfit(ks[mask], np.log(err[mask]), 1)
    rho = np.exp(slope)
    assert np.isfinite(rho)
    assert np.all(err <= 100 * np.exp(icpt) * rho ** ks + 1e-300)
