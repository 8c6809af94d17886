# Generated by mdnewton._codegen -- do not edit.
"""Compiled 4-limb array kernels."""

from numba import njit

from . import k4 as _scalar

_opts = dict(cache=True, nogil=True)
add = njit(**_opts)(_scalar.add)
sub = njit(**_opts)(_scalar.sub)
mul = njit(**_opts)(_scalar.mul)


@njit(**_opts)
def cmul(xr0, xr1, xr2, xr3, xi0, xi1, xi2, xi3, yr0, yr1, yr2, yr3, yi0, yi1, yi2, yi3):
    rr = mul(xr0, xr1, xr2, xr3, yr0, yr1, yr2, yr3)
    ii = mul(xi0, xi1, xi2, xi3, yi0, yi1, yi2, yi3)
    ri = mul(xr0, xr1, xr2, xr3, yi0, yi1, yi2, yi3)
    ir = mul(xi0, xi1, xi2, xi3, yr0, yr1, yr2, yr3)
    return sub(rr[0], rr[1], rr[2], rr[3], ii[0], ii[1], ii[2], ii[3]), add(ri[0], ri[1], ri[2], ri[3], ir[0], ir[1], ir[2], ir[3])


@njit(**_opts)
def cadd(xr0, xr1, xr2, xr3, xi0, xi1, xi2, xi3, yr0, yr1, yr2, yr3, yi0, yi1, yi2, yi3):
    return add(xr0, xr1, xr2, xr3, yr0, yr1, yr2, yr3), add(xi0, xi1, xi2, xi3, yi0, yi1, yi2, yi3)


@njit(**_opts)
def csub(xr0, xr1, xr2, xr3, xi0, xi1, xi2, xi3, yr0, yr1, yr2, yr3, yi0, yi1, yi2, yi3):
    return sub(xr0, xr1, xr2, xr3, yr0, yr1, yr2, yr3), sub(xi0, xi1, xi2, xi3, yi0, yi1, yi2, yi3)


@njit(**_opts)
def absval(xr0, xr1, xr2, xr3):
    if xr0 < 0.0:
        return (-xr0, -xr1, -xr2, -xr3,)
    return (xr0, xr1, xr2, xr3,)


@njit(**_opts)
def radd_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = add(X[0, q], X[1, q], X[2, q], X[3, q], Y[0, q], Y[1, q], Y[2, q], Y[3, q])
        Z[0, q] = r[0]
        Z[1, q] = r[1]
        Z[2, q] = r[2]
        Z[3, q] = r[3]


@njit(**_opts)
def rsub_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = sub(X[0, q], X[1, q], X[2, q], X[3, q], Y[0, q], Y[1, q], Y[2, q], Y[3, q])
        Z[0, q] = r[0]
        Z[1, q] = r[1]
        Z[2, q] = r[2]
        Z[3, q] = r[3]


@njit(**_opts)
def rmul_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = mul(X[0, q], X[1, q], X[2, q], X[3, q], Y[0, q], Y[1, q], Y[2, q], Y[3, q])
        Z[0, q] = r[0]
        Z[1, q] = r[1]
        Z[2, q] = r[2]
        Z[3, q] = r[3]


@njit(**_opts)
def cadd_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = cadd(X[0, 0, q], X[0, 1, q], X[0, 2, q], X[0, 3, q], X[1, 0, q], X[1, 1, q], X[1, 2, q], X[1, 3, q], Y[0, 0, q], Y[0, 1, q], Y[0, 2, q], Y[0, 3, q], Y[1, 0, q], Y[1, 1, q], Y[1, 2, q], Y[1, 3, q])
        Z[0, 0, q] = re[0]
        Z[0, 1, q] = re[1]
        Z[0, 2, q] = re[2]
        Z[0, 3, q] = re[3]
        Z[1, 0, q] = im[0]
        Z[1, 1, q] = im[1]
        Z[1, 2, q] = im[2]
        Z[1, 3, q] = im[3]


@njit(**_opts)
def csub_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = csub(X[0, 0, q], X[0, 1, q], X[0, 2, q], X[0, 3, q], X[1, 0, q], X[1, 1, q], X[1, 2, q], X[1, 3, q], Y[0, 0, q], Y[0, 1, q], Y[0, 2, q], Y[0, 3, q], Y[1, 0, q], Y[1, 1, q], Y[1, 2, q], Y[1, 3, q])
        Z[0, 0, q] = re[0]
        Z[0, 1, q] = re[1]
        Z[0, 2, q] = re[2]
        Z[0, 3, q] = re[3]
        Z[1, 0, q] = im[0]
        Z[1, 1, q] = im[1]
        Z[1, 2, q] = im[2]
        Z[1, 3, q] = im[3]


@njit(**_opts)
def cmul_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = cmul(X[0, 0, q], X[0, 1, q], X[0, 2, q], X[0, 3, q], X[1, 0, q], X[1, 1, q], X[1, 2, q], X[1, 3, q], Y[0, 0, q], Y[0, 1, q], Y[0, 2, q], Y[0, 3, q], Y[1, 0, q], Y[1, 1, q], Y[1, 2, q], Y[1, 3, q])
        Z[0, 0, q] = re[0]
        Z[0, 1, q] = re[1]
        Z[0, 2, q] = re[2]
        Z[0, 3, q] = re[3]
        Z[1, 0, q] = im[0]
        Z[1, 1, q] = im[1]
        Z[1, 2, q] = im[2]
        Z[1, 3, q] = im[3]


@njit(**_opts)
def cabs2_kernel(X, Z, lo, hi):
    for q in range(lo, hi):
        rr = mul(X[0, 0, q], X[0, 1, q], X[0, 2, q], X[0, 3, q], X[0, 0, q], X[0, 1, q], X[0, 2, q], X[0, 3, q])
        ii = mul(X[1, 0, q], X[1, 1, q], X[1, 2, q], X[1, 3, q], X[1, 0, q], X[1, 1, q], X[1, 2, q], X[1, 3, q])
        r = add(rr[0], rr[1], rr[2], rr[3], ii[0], ii[1], ii[2], ii[3])
        Z[0, q] = r[0]
        Z[1, q] = r[1]
        Z[2, q] = r[2]
        Z[3, q] = r[3]


@njit(**_opts)
def conv_kernel(X, Y, Z, lo, hi):
    # one task per output coefficient; second operand padded with zeros
    d = X.shape[3]
    for q in range(lo, hi):
        b = q // d
        c = q % d
        accr = (0.0, 0.0, 0.0, 0.0,)
        acci = (0.0, 0.0, 0.0, 0.0,)
        for j in range(d):
            if c - j >= 0:
                yr = (Y[0, 0, b, c - j], Y[0, 1, b, c - j], Y[0, 2, b, c - j], Y[0, 3, b, c - j],)
                yi = (Y[1, 0, b, c - j], Y[1, 1, b, c - j], Y[1, 2, b, c - j], Y[1, 3, b, c - j],)
            else:
                yr = (0.0, 0.0, 0.0, 0.0,)
                yi = (0.0, 0.0, 0.0, 0.0,)
            pr, pi = cmul(X[0, 0, b, j], X[0, 1, b, j], X[0, 2, b, j], X[0, 3, b, j], X[1, 0, b, j], X[1, 1, b, j], X[1, 2, b, j], X[1, 3, b, j], yr[0], yr[1], yr[2], yr[3], yi[0], yi[1], yi[2], yi[3])
            if j == 0:
                accr = pr
                acci = pi
            else:
                accr = add(accr[0], accr[1], accr[2], accr[3], pr[0], pr[1], pr[2], pr[3])
                acci = add(acci[0], acci[1], acci[2], acci[3], pi[0], pi[1], pi[2], pi[3])
        Z[0, 0, b, c] = accr[0]
        Z[0, 1, b, c] = accr[1]
        Z[0, 2, b, c] = accr[2]
        Z[0, 3, b, c] = accr[3]
        Z[1, 0, b, c] = acci[0]
        Z[1, 1, b, c] = acci[1]
        Z[1, 2, b, c] = acci[2]
        Z[1, 3, b, c] = acci[3]


@njit(**_opts)
def gemv_kernel(M, V, Y, lo, hi):
    # Y[b, i] = sum_j M[b, i, j] V[b, j], ascending j
    n = M.shape[3]
    m = M.shape[4]
    for q in range(lo, hi):
        b = q // n
        i = q % n
        accr = (0.0, 0.0, 0.0, 0.0,)
        acci = (0.0, 0.0, 0.0, 0.0,)
        for j in range(m):
            pr, pi = cmul(M[0, 0, b, i, j], M[0, 1, b, i, j], M[0, 2, b, i, j], M[0, 3, b, i, j], M[1, 0, b, i, j], M[1, 1, b, i, j], M[1, 2, b, i, j], M[1, 3, b, i, j], V[0, 0, b, j], V[0, 1, b, j], V[0, 2, b, j], V[0, 3, b, j], V[1, 0, b, j], V[1, 1, b, j], V[1, 2, b, j], V[1, 3, b, j])
            if j == 0:
                accr = pr
                acci = pi
            else:
                accr = add(accr[0], accr[1], accr[2], accr[3], pr[0], pr[1], pr[2], pr[3])
                acci = add(acci[0], acci[1], acci[2], acci[3], pi[0], pi[1], pi[2], pi[3])
        Y[0, 0, b, i] = accr[0]
        Y[0, 1, b, i] = accr[1]
        Y[0, 2, b, i] = accr[2]
        Y[0, 3, b, i] = accr[3]
        Y[1, 0, b, i] = acci[0]
        Y[1, 1, b, i] = acci[1]
        Y[1, 2, b, i] = acci[2]
        Y[1, 3, b, i] = acci[3]


@njit(**_opts)
def subseq_kernel(B, T, Z, lo, hi):
    # Z[i] = ((B[i] - T[0, i]) - T[1, i]) - ...
    nt = T.shape[2]
    for q in range(lo, hi):
        accr = (B[0, 0, q], B[0, 1, q], B[0, 2, q], B[0, 3, q],)
        acci = (B[1, 0, q], B[1, 1, q], B[1, 2, q], B[1, 3, q],)
        for t in range(nt):
            accr, acci = csub(accr[0], accr[1], accr[2], accr[3], acci[0], acci[1], acci[2], acci[3], T[0, 0, t, q], T[0, 1, t, q], T[0, 2, t, q], T[0, 3, t, q], T[1, 0, t, q], T[1, 1, t, q], T[1, 2, t, q], T[1, 3, t, q])
        Z[0, 0, q] = accr[0]
        Z[0, 1, q] = accr[1]
        Z[0, 2, q] = accr[2]
        Z[0, 3, q] = accr[3]
        Z[1, 0, q] = acci[0]
        Z[1, 1, q] = acci[1]
        Z[1, 2, q] = acci[2]
        Z[1, 3, q] = acci[3]


@njit(**_opts)
def norm1_kernel(X, Z, lo, hi):
    # Z[b] = sum_i |re X[b, i]| + |im X[b, i]|, ascending i, from zero
    n = X.shape[3]
    for q in range(lo, hi):
        acc = (0.0, 0.0, 0.0, 0.0,)
        for i in range(n):
            r = absval(X[0, 0, q, i], X[0, 1, q, i], X[0, 2, q, i], X[0, 3, q, i])
            acc = add(acc[0], acc[1], acc[2], acc[3], r[0], r[1], r[2], r[3])
            r = absval(X[1, 0, q, i], X[1, 1, q, i], X[1, 2, q, i], X[1, 3, q, i])
            acc = add(acc[0], acc[1], acc[2], acc[3], r[0], r[1], r[2], r[3])
        Z[0, q] = acc[0]
        Z[1, q] = acc[1]
        Z[2, q] = acc[2]
        Z[3, q] = acc[3]


@njit(**_opts)
def rsum_kernel(X, Z, lo, hi):
    # Z[b] = sum_i X[b, i], ascending i
    n = X.shape[2]
    for q in range(lo, hi):
        acc = (X[0, q, 0], X[1, q, 0], X[2, q, 0], X[3, q, 0],)
        for i in range(1, n):
            acc = add(acc[0], acc[1], acc[2], acc[3], X[0, q, i], X[1, q, i], X[2, q, i], X[3, q, i])
        Z[0, q] = acc[0]
        Z[1, q] = acc[1]
        Z[2, q] = acc[2]
        Z[3, q] = acc[3]


@njit(**_opts)
def backsub_kernel(R, D, Y, X):
    # solves R x = y upward; D holds the reciprocals of the diagonal of R
    n = R.shape[2]
    for i in range(n - 1, -1, -1):
        accr = (Y[0, 0, i], Y[0, 1, i], Y[0, 2, i], Y[0, 3, i],)
        acci = (Y[1, 0, i], Y[1, 1, i], Y[1, 2, i], Y[1, 3, i],)
        for j in range(i + 1, n):
            pr, pi = cmul(R[0, 0, i, j], R[0, 1, i, j], R[0, 2, i, j], R[0, 3, i, j], R[1, 0, i, j], R[1, 1, i, j], R[1, 2, i, j], R[1, 3, i, j], X[0, 0, j], X[0, 1, j], X[0, 2, j], X[0, 3, j], X[1, 0, j], X[1, 1, j], X[1, 2, j], X[1, 3, j])
            accr, acci = csub(accr[0], accr[1], accr[2], accr[3], acci[0], acci[1], acci[2], acci[3], pr[0], pr[1], pr[2], pr[3], pi[0], pi[1], pi[2], pi[3])
        xr, xi = cmul(accr[0], accr[1], accr[2], accr[3], acci[0], acci[1], acci[2], acci[3], D[0, 0, i], D[0, 1, i], D[0, 2, i], D[0, 3, i], D[1, 0, i], D[1, 1, i], D[1, 2, i], D[1, 3, i])
        X[0, 0, i] = xr[0]
        X[0, 1, i] = xr[1]
        X[0, 2, i] = xr[2]
        X[0, 3, i] = xr[3]
        X[1, 0, i] = xi[0]
        X[1, 1, i] = xi[1]
        X[1, 2, i] = xi[2]
        X[1, 3, i] = xi[3]
