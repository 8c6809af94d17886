"""Householder QR over complex multiple doubles and the staged
block-Toeplitz forward substitution used by the series Newton step.

Matrices are planar arrays ``(2, K, n, n)``, vectors ``(2, K, n)``; series
of those carry the coefficient index on the last axis.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .complexmd import ComplexMD
from .errors import DimensionMismatch, SingularDiagonal
from .ledger import section
from .multidouble import MultiDouble, md_div, md_sqrt, precision
from .series import SeriesVec, series_norm


def _conj(X):
    out = np.array(X, dtype=np.float64, copy=True)
    out[1] = -out[1]
    return out


def _scalar_sum(values):
    """Sum of a real array ``(K, m)`` as a MultiDouble."""
    return MultiDouble(kernels.rsum(values[:, None, :])[:, 0])


@dataclass
class QRFactors:
    QH: np.ndarray  # Q^H, (2, K, n, n)
    R: np.ndarray  # upper triangular, (2, K, n, n)
    diag_inv: np.ndarray  # reciprocals of diag(R), (2, K, n); zero where singular
    min_diag: float  # smallest modulus on the diagonal of R
    singular: tuple = ()

    @property
    def n(self):
        return self.R.shape[2]

    @property
    def precision(self):
        return precision(self.R.shape[1])

    @property
    def Q(self):
        return _conj(np.swapaxes(self.QH, 2, 3))


def householder_qr(A0, ledger=None) -> QRFactors:
    """Factor A0 = Q R with one Householder reflection per column.

    The reflector for column j maps x = A[j:, j] to -phase(x_0) |x| e_0,
    so R has a real-modulus diagonal with the phase of the pivot.
    """
    A0 = np.ascontiguousarray(A0, dtype=np.float64)
    if A0.ndim != 4 or A0.shape[0] != 2 or A0.shape[2] != A0.shape[3]:
        raise DimensionMismatch(f"square planar matrix expected, got {A0.shape}")
    _, k, n, _ = A0.shape
    with section(ledger, "qr"):
        R = A0.copy()
        QH = np.zeros_like(R)
        QH[0, 0, np.arange(n), np.arange(n)] = 1.0
        diag_inv = np.zeros((2, k, n))
        moduli = []
        singular = []
        one = MultiDouble.from_value(1, k)
        for j in range(n):
            x = R[:, :, j:, j]
            alpha = md_sqrt(_scalar_sum(kernels.cabs2(x)))
            moduli.append(float(alpha))
            if not alpha:
                singular.append(j)
                continue
            x0 = ComplexMD.from_limbs(x[:, :, 0])
            r0 = x0.abs()
            if r0:
                inv_r0 = md_div(one, r0)
                phase = ComplexMD(x0.re * inv_r0, x0.im * inv_r0)
            else:
                phase = ComplexMD.one(k)
            shift = ComplexMD(phase.re * alpha, phase.im * alpha)
            v = x.copy()
            v[:, :, 0] = (x0 + shift).limbs()
            tau = md_div(MultiDouble.from_value(2, k), _scalar_sum(kernels.cabs2(v)))
            vconj = _conj(v)
            m = n - j

            def reflect(block):
                # block - tau v (v^H block), block is (2, K, m, c)
                cols = block.shape[3]
                w = kernels.gemv(np.swapaxes(block, 2, 3)[:, :, None], vconj[:, :, None])[:, :, 0]
                tw = kernels.cscale(w, np.broadcast_to(np.array(tau.limbs)[:, None], (k, cols)))
                outer = kernels.cmul(np.broadcast_to(v[:, :, :, None], (2, k, m, cols)),
                                     np.broadcast_to(tw[:, :, None, :], (2, k, m, cols)))
                return kernels.csub(block, outer)

            if j + 1 < n:
                R[:, :, j:, j + 1:] = reflect(R[:, :, j:, j + 1:])
            QH[:, :, j:, :] = reflect(QH[:, :, j:, :])
            diag = -shift
            R[:, :, j, j] = diag.limbs()
            R[:, :, j + 1:, j] = 0.0
            # 1 / (-phase alpha) = -conj(phase) / alpha
            inv_alpha = md_div(one, alpha)
            d_inv = ComplexMD(-(phase.re * inv_alpha), phase.im * inv_alpha)
            diag_inv[:, :, j] = d_inv.limbs()
    return QRFactors(QH=QH, R=R, diag_inv=diag_inv, min_diag=min(moduli) if moduli else 0.0,
                     singular=tuple(singular))


def qhb(factors: QRFactors, b, ledger=None):
    """Q^H b."""
    b = np.ascontiguousarray(b, dtype=np.float64)
    if b.shape != factors.QH.shape[:2] + (factors.n,):
        raise DimensionMismatch(f"vector {b.shape} against {factors.n}x{factors.n} factors")
    with section(ledger, "qhb"):
        return kernels.gemv(factors.QH[:, :, None], b[:, :, None])[:, :, 0]


def diagonal_reciprocals(R):
    R = np.asarray(R)
    k, n = R.shape[1], R.shape[2]
    out = np.zeros((2, k, n))
    one = ComplexMD.one(k)
    for j in range(n):
        d = ComplexMD.from_limbs(R[:, :, j, j])
        if d.is_zero():
            raise SingularDiagonal(j)
        out[:, :, j] = (one / d).limbs()
    return out


def back_substitute(R, y, diag_inv=None, ledger=None):
    """Solve R x = y for upper triangular R.

    ``diag_inv`` may supply precomputed reciprocals of the diagonal.
    """
    R = np.ascontiguousarray(R, dtype=np.float64)
    y = np.ascontiguousarray(y, dtype=np.float64)
    n = R.shape[2]
    if y.shape != R.shape[:2] + (n,):
        raise DimensionMismatch(f"vector {y.shape} against matrix {R.shape}")
    zero = [j for j in range(n) if not R[:, :, j, j].any()]
    if zero:
        raise SingularDiagonal(zero[0])
    with section(ledger, "bs"):
        if diag_inv is None:
            diag_inv = diagonal_reciprocals(R)
        return kernels.backsub(R, diag_inv, y)


def solve(factors: QRFactors, b):
    """Least-squares solution of A x = b from the factors of A."""
    return back_substitute(factors.R, qhb(factors, b), factors.diag_inv)


def _series_data(x):
    return np.asarray(x) if isinstance(x, np.ndarray) else x.data


def toeplitz_solve(A, b, factors: QRFactors, active=None, ledger=None):
    """Forward substitution through the lower block-triangular Toeplitz system.

    For each stage k in ``active`` (ascending), the right-hand side b_k is
    updated by b_k - A_(k-i) dx_i for the previously solved active stages i,
    then dx_k = R^-1 Q^H b_k.  Stages outside ``active`` are left zero.
    """
    A, b = _series_data(A), _series_data(b)
    _, k, n, d = b.shape
    if A.shape != (2, k, n, n, d):
        raise DimensionMismatch(f"matrix series {A.shape} against vector series {b.shape}")
    active = list(range(d) if active is None else active)
    if any(not 0 <= s < d for s in active):
        raise DimensionMismatch("active stages outside the series order")
    dx = np.zeros_like(b)
    solved = []
    for s in sorted(active):
        rhs = b[..., s]
        if solved:
            with section(ledger, "updates"):
                M = np.stack([A[..., s - i] for i in solved], axis=2)
                V = np.stack([dx[..., i] for i in solved], axis=2)
                rhs = kernels.subtract_sequence(rhs, kernels.gemv(M, V))
        y = qhb(factors, rhs, ledger)
        dx[..., s] = back_substitute(factors.R, y, factors.diag_inv, ledger)
        solved.append(s)
    return SeriesVec(dx)


def residual_series(A, dx, b, active=None, rows=None):
    """b_k - sum_i A_(k-i) dx_i over the active stages, as ``(2, K, n', m)``."""
    A, dx, b = _series_data(A), _series_data(dx), _series_data(b)
    d = b.shape[3]
    if A.shape[4] != d or dx.shape[3] != d or dx.shape[2] != A.shape[3]:
        raise DimensionMismatch("residual operands do not match")
    stages = sorted(range(d) if active is None else active)
    if rows is not None:
        rows = np.asarray(rows)
        A, b = A[:, :, rows], b[:, :, rows]
    out = []
    for s in stages:
        prior = [i for i in stages if i <= s]
        M = np.stack([A[..., s - i] for i in prior], axis=2)
        V = np.stack([dx[..., i] for i in prior], axis=2)
        out.append(kernels.subtract_sequence(b[..., s], kernels.gemv(M, V)))
    if not out:
        return np.zeros(b.shape[:3] + (0,))
    return np.stack(out, axis=-1)


def residual(A, dx, b, active=None, rows=None, ledger=None) -> MultiDouble:
    """series_norm(b - A dx), optionally on a subset of equations."""
    with section(ledger, "residuals"):
        return series_norm(residual_series(A, dx, b, active, rows))


__all__ = ["QRFactors", "householder_qr", "qhb", "back_substitute", "solve",
           "toeplitz_solve", "residual", "residual_series", "diagonal_reciprocals"]
