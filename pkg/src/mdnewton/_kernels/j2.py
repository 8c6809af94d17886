# Generated by mdnewton._codegen -- do not edit.
"""Compiled 2-limb array kernels."""

from numba import njit

from . import k2 as _scalar

_opts = dict(cache=True, nogil=True)
add = njit(**_opts)(_scalar.add)
sub = njit(**_opts)(_scalar.sub)
mul = njit(**_opts)(_scalar.mul)


@njit(**_opts)
def cmul(xr0, xr1, xi0, xi1, yr0, yr1, yi0, yi1):
    rr = mul(xr0, xr1, yr0, yr1)
    ii = mul(xi0, xi1, yi0, yi1)
    ri = mul(xr0, xr1, yi0, yi1)
    ir = mul(xi0, xi1, yr0, yr1)
    return sub(rr[0], rr[1], ii[0], ii[1]), add(ri[0], ri[1], ir[0], ir[1])


@njit(**_opts)
def cadd(xr0, xr1, xi0, xi1, yr0, yr1, yi0, yi1):
    return add(xr0, xr1, yr0, yr1), add(xi0, xi1, yi0, yi1)


@njit(**_opts)
def csub(xr0, xr1, xi0, xi1, yr0, yr1, yi0, yi1):
    return sub(xr0, xr1, yr0, yr1), sub(xi0, xi1, yi0, yi1)


@njit(**_opts)
def absval(xr0, xr1):
    if xr0 < 0.0:
        return (-xr0, -xr1,)
    return (xr0, xr1,)


@njit(**_opts)
def radd_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = add(X[0, q], X[1, q], Y[0, q], Y[1, q])
        Z[0, q] = r[0]
        Z[1, q] = r[1]


@njit(**_opts)
def rsub_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = sub(X[0, q], X[1, q], Y[0, q], Y[1, q])
        Z[0, q] = r[0]
        Z[1, q] = r[1]


@njit(**_opts)
def rmul_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = mul(X[0, q], X[1, q], Y[0, q], Y[1, q])
        Z[0, q] = r[0]
        Z[1, q] = r[1]


@njit(**_opts)
def cadd_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = cadd(X[0, 0, q], X[0, 1, q], X[1, 0, q], X[1, 1, q], Y[0, 0, q], Y[0, 1, q], Y[1, 0, q], Y[1, 1, q])
        Z[0, 0, q] = re[0]
        Z[0, 1, q] = re[1]
        Z[1, 0, q] = im[0]
        Z[1, 1, q] = im[1]


@njit(**_opts)
def csub_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = csub(X[0, 0, q], X[0, 1, q], X[1, 0, q], X[1, 1, q], Y[0, 0, q], Y[0, 1, q], Y[1, 0, q], Y[1, 1, q])
        Z[0, 0, q] = re[0]
        Z[0, 1, q] = re[1]
        Z[1, 0, q] = im[0]
        Z[1, 1, q] = im[1]


@njit(**_opts)
def cmul_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = cmul(X[0, 0, q], X[0, 1, q], X[1, 0, q], X[1, 1, q], Y[0, 0, q], Y[0, 1, q], Y[1, 0, q], Y[1, 1, q])
        Z[0, 0, q] = re[0]
        Z[0, 1, q] = re[1]
        Z[1, 0, q] = im[0]
        Z[1, 1, q] = im[1]


@njit(**_opts)
def cabs2_kernel(X, Z, lo, hi):
    for q in range(lo, hi):
        rr = mul(X[0, 0, q], X[0, 1, q], X[0, 0, q], X[0, 1, q])
        ii = mul(X[1, 0, q], X[1, 1, q], X[1, 0, q], X[1, 1, q])
        r = add(rr[0], rr[1], ii[0], ii[1])
        Z[0, q] = r[0]
        Z[1, q] = r[1]


@njit(**_opts)
def conv_kernel(X, Y, Z, lo, hi):
    # one task per output coefficient; second operand padded with zeros
    d = X.shape[3]
    for q in range(lo, hi):
        b = q // d
        c = q % d
        accr = (0.0, 0.0,)
        acci = (0.0, 0.0,)
        for j in range(d):
            if c - j >= 0:
                yr = (Y[0, 0, b, c - j], Y[0, 1, b, c - j],)
                yi = (Y[1, 0, b, c - j], Y[1, 1, b, c - j],)
            else:
                yr = (0.0, 0.0,)
                yi = (0.0, 0.0,)
            pr, pi = cmul(X[0, 0, b, j], X[0, 1, b, j], X[1, 0, b, j], X[1, 1, b, j], yr[0], yr[1], yi[0], yi[1])
            if j == 0:
                accr = pr
                acci = pi
            else:
                accr = add(accr[0], accr[1], pr[0], pr[1])
                acci = add(acci[0], acci[1], pi[0], pi[1])
        Z[0, 0, b, c] = accr[0]
        Z[0, 1, b, c] = accr[1]
        Z[1, 0, b, c] = acci[0]
        Z[1, 1, b, c] = acci[1]


@njit(**_opts)
def gemv_kernel(M, V, Y, lo, hi):
    # Y[b, i] = sum_j M[b, i, j] V[b, j], ascending j
    n = M.shape[3]
    m = M.shape[4]
    for q in range(lo, hi):
        b = q // n
        i = q % n
        accr = (0.0, 0.0,)
        acci = (0.0, 0.0,)
        for j in range(m):
            pr, pi = cmul(M[0, 0, b, i, j], M[0, 1, b, i, j], M[1, 0, b, i, j], M[1, 1, b, i, j], V[0, 0, b, j], V[0, 1, b, j], V[1, 0, b, j], V[1, 1, b, j])
            if j == 0:
                accr = pr
                acci = pi
            else:
                accr = add(accr[0], accr[1], pr[0], pr[1])
                acci = add(acci[0], acci[1], pi[0], pi[1])
        Y[0, 0, b, i] = accr[0]
        Y[0, 1, b, i] = accr[1]
        Y[1, 0, b, i] = acci[0]
        Y[1, 1, b, i] = acci[1]


@njit(**_opts)
def subseq_kernel(B, T, Z, lo, hi):
    # Z[i] = ((B[i] - T[0, i]) - T[1, i]) - ...
    nt = T.shape[2]
    for q in range(lo, hi):
        accr = (B[0, 0, q], B[0, 1, q],)
        acci = (B[1, 0, q], B[1, 1, q],)
        for t in range(nt):
            accr, acci = csub(accr[0], accr[1], acci[0], acci[1], T[0, 0, t, q], T[0, 1, t, q], T[1, 0, t, q], T[1, 1, t, q])
        Z[0, 0, q] = accr[0]
        Z[0, 1, q] = accr[1]
        Z[1, 0, q] = acci[0]
        Z[1, 1, q] = acci[1]


@njit(**_opts)
def norm1_kernel(X, Z, lo, hi):
    # Z[b] = sum_i |re X[b, i]| + |im X[b, i]|, ascending i, from zero
    n = X.shape[3]
    for q in range(lo, hi):
        acc = (0.0, 0.0,)
        for i in range(n):
            r = absval(X[0, 0, q, i], X[0, 1, q, i])
            acc = add(acc[0], acc[1], r[0], r[1])
            r = absval(X[1, 0, q, i], X[1, 1, q, i])
            acc = add(acc[0], acc[1], r[0], r[1])
        Z[0, q] = acc[0]
        Z[1, q] = acc[1]


@njit(**_opts)
def rsum_kernel(X, Z, lo, hi):
    # Z[b] = sum_i X[b, i], ascending i
    n = X.shape[2]
    for q in range(lo, hi):
        acc = (X[0, q, 0], X[1, q, 0],)
        for i in range(1, n):
            acc = add(acc[0], acc[1], X[0, q, i], X[1, q, i])
        Z[0, q] = acc[0]
        Z[1, q] = acc[1]


@njit(**_opts)
def backsub_kernel(R, D, Y, X):
    # solves R x = y upward; D holds the reciprocals of the diagonal of R
    n = R.shape[2]
    for i in range(n - 1, -1, -1):
        accr = (Y[0, 0, i], Y[0, 1, i],)
        acci = (Y[1, 0, i], Y[1, 1, i],)
        for j in range(i + 1, n):
            pr, pi = cmul(R[0, 0, i, j], R[0, 1, i, j], R[1, 0, i, j], R[1, 1, i, j], X[0, 0, j], X[0, 1, j], X[1, 0, j], X[1, 1, j])
            accr, acci = csub(accr[0], accr[1], acci[0], acci[1], pr[0], pr[1], pi[0], pi[1])
        xr, xi = cmul(accr[0], accr[1], acci[0], acci[1], D[0, 0, i], D[0, 1, i], D[1, 0, i], D[1, 1, i])
        X[0, 0, i] = xr[0]
        X[0, 1, i] = xr[1]
        X[1, 0, i] = xi[0]
        X[1, 1, i] = xi[1]
