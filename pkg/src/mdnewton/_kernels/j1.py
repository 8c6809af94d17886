# Generated by mdnewton._codegen -- do not edit.
"""Compiled 1-limb array kernels."""

from numba import njit

from . import k1 as _scalar

_opts = dict(cache=True, nogil=True)
add = njit(**_opts)(_scalar.add)
sub = njit(**_opts)(_scalar.sub)
mul = njit(**_opts)(_scalar.mul)


@njit(**_opts)
def cmul(xr0, xi0, yr0, yi0):
    rr = mul(xr0, yr0)
    ii = mul(xi0, yi0)
    ri = mul(xr0, yi0)
    ir = mul(xi0, yr0)
    return sub(rr[0], ii[0]), add(ri[0], ir[0])


@njit(**_opts)
def cadd(xr0, xi0, yr0, yi0):
    return add(xr0, yr0), add(xi0, yi0)


@njit(**_opts)
def csub(xr0, xi0, yr0, yi0):
    return sub(xr0, yr0), sub(xi0, yi0)


@njit(**_opts)
def absval(xr0):
    if xr0 < 0.0:
        return (-xr0,)
    return (xr0,)


@njit(**_opts)
def radd_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = add(X[0, q], Y[0, q])
        Z[0, q] = r[0]


@njit(**_opts)
def rsub_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = sub(X[0, q], Y[0, q])
        Z[0, q] = r[0]


@njit(**_opts)
def rmul_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = mul(X[0, q], Y[0, q])
        Z[0, q] = r[0]


@njit(**_opts)
def cadd_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = cadd(X[0, 0, q], X[1, 0, q], Y[0, 0, q], Y[1, 0, q])
        Z[0, 0, q] = re[0]
        Z[1, 0, q] = im[0]


@njit(**_opts)
def csub_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = csub(X[0, 0, q], X[1, 0, q], Y[0, 0, q], Y[1, 0, q])
        Z[0, 0, q] = re[0]
        Z[1, 0, q] = im[0]


@njit(**_opts)
def cmul_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = cmul(X[0, 0, q], X[1, 0, q], Y[0, 0, q], Y[1, 0, q])
        Z[0, 0, q] = re[0]
        Z[1, 0, q] = im[0]


@njit(**_opts)
def cabs2_kernel(X, Z, lo, hi):
    for q in range(lo, hi):
        rr = mul(X[0, 0, q], X[0, 0, q])
        ii = mul(X[1, 0, q], X[1, 0, q])
        r = add(rr[0], ii[0])
        Z[0, q] = r[0]


@njit(**_opts)
def conv_kernel(X, Y, Z, lo, hi):
    # one task per output coefficient; second operand padded with zeros
    d = X.shape[3]
    for q in range(lo, hi):
        b = q // d
        c = q % d
        accr = (0.0,)
        acci = (0.0,)
        for j in range(d):
            if c - j >= 0:
                yr = (Y[0, 0, b, c - j],)
                yi = (Y[1, 0, b, c - j],)
            else:
                yr = (0.0,)
                yi = (0.0,)
            pr, pi = cmul(X[0, 0, b, j], X[1, 0, b, j], yr[0], yi[0])
            if j == 0:
                accr = pr
                acci = pi
            else:
                accr = add(accr[0], pr[0])
                acci = add(acci[0], pi[0])
        Z[0, 0, b, c] = accr[0]
        Z[1, 0, b, c] = acci[0]


@njit(**_opts)
def gemv_kernel(M, V, Y, lo, hi):
    # Y[b, i] = sum_j M[b, i, j] V[b, j], ascending j
    n = M.shape[3]
    m = M.shape[4]
    for q in range(lo, hi):
        b = q // n
        i = q % n
        accr = (0.0,)
        acci = (0.0,)
        for j in range(m):
            pr, pi = cmul(M[0, 0, b, i, j], M[1, 0, b, i, j], V[0, 0, b, j], V[1, 0, b, j])
            if j == 0:
                accr = pr
                acci = pi
            else:
                accr = add(accr[0], pr[0])
                acci = add(acci[0], pi[0])
        Y[0, 0, b, i] = accr[0]
        Y[1, 0, b, i] = acci[0]


@njit(**_opts)
def subseq_kernel(B, T, Z, lo, hi):
    # Z[i] = ((B[i] - T[0, i]) - T[1, i]) - ...
    nt = T.shape[2]
    for q in range(lo, hi):
        accr = (B[0, 0, q],)
        acci = (B[1, 0, q],)
        for t in range(nt):
            accr, acci = csub(accr[0], acci[0], T[0, 0, t, q], T[1, 0, t, q])
        Z[0, 0, q] = accr[0]
        Z[1, 0, q] = acci[0]


@njit(**_opts)
def norm1_kernel(X, Z, lo, hi):
    # Z[b] = sum_i |re X[b, i]| + |im X[b, i]|, ascending i, from zero
    n = X.shape[3]
    for q in range(lo, hi):
        acc = (0.0,)
        for i in range(n):
            r = absval(X[0, 0, q, i])
            acc = add(acc[0], r[0])
            r = absval(X[1, 0, q, i])
            acc = add(acc[0], r[0])
        Z[0, q] = acc[0]


@njit(**_opts)
def rsum_kernel(X, Z, lo, hi):
    # Z[b] = sum_i X[b, i], ascending i
    n = X.shape[2]
    for q in range(lo, hi):
        acc = (X[0, q, 0],)
        for i in range(1, n):
            acc = add(acc[0], X[0, q, i])
        Z[0, q] = acc[0]


@njit(**_opts)
def backsub_kernel(R, D, Y, X):
    # solves R x = y upward; D holds the reciprocals of the diagonal of R
    n = R.shape[2]
    for i in range(n - 1, -1, -1):
        accr = (Y[0, 0, i],)
        acci = (Y[1, 0, i],)
        for j in range(i + 1, n):
            pr, pi = cmul(R[0, 0, i, j], R[1, 0, i, j], X[0, 0, j], X[1, 0, j])
            accr, acci = csub(accr[0], acci[0], pr[0], pi[0])
        xr, xi = cmul(accr[0], acci[0], D[0, 0, i], D[1, 0, i])
        X[0, 0, i] = xr[0]
        X[1, 0, i] = xi[0]
