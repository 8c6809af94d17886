# Generated by mdnewton._codegen -- do not edit.
"""Compiled 8-limb array kernels."""

from numba import njit

from . import k8 as _scalar

_opts = dict(cache=True, nogil=True)
add = njit(**_opts)(_scalar.add)
sub = njit(**_opts)(_scalar.sub)
mul = njit(**_opts)(_scalar.mul)


@njit(**_opts)
def cmul(xr0, xr1, xr2, xr3, xr4, xr5, xr6, xr7, xi0, xi1, xi2, xi3, xi4, xi5, xi6, xi7, yr0, yr1, yr2, yr3, yr4, yr5, yr6, yr7, yi0, yi1, yi2, yi3, yi4, yi5, yi6, yi7):
    rr = mul(xr0, xr1, xr2, xr3, xr4, xr5, xr6, xr7, yr0, yr1, yr2, yr3, yr4, yr5, yr6, yr7)
    ii = mul(xi0, xi1, xi2, xi3, xi4, xi5, xi6, xi7, yi0, yi1, yi2, yi3, yi4, yi5, yi6, yi7)
    ri = mul(xr0, xr1, xr2, xr3, xr4, xr5, xr6, xr7, yi0, yi1, yi2, yi3, yi4, yi5, yi6, yi7)
    ir = mul(xi0, xi1, xi2, xi3, xi4, xi5, xi6, xi7, yr0, yr1, yr2, yr3, yr4, yr5, yr6, yr7)
    return sub(rr[0], rr[1], rr[2], rr[3], rr[4], rr[5], rr[6], rr[7], ii[0], ii[1], ii[2], ii[3], ii[4], ii[5], ii[6], ii[7]), add(ri[0], ri[1], ri[2], ri[3], ri[4], ri[5], ri[6], ri[7], ir[0], ir[1], ir[2], ir[3], ir[4], ir[5], ir[6], ir[7])


@njit(**_opts)
def cadd(xr0, xr1, xr2, xr3, xr4, xr5, xr6, xr7, xi0, xi1, xi2, xi3, xi4, xi5, xi6, xi7, yr0, yr1, yr2, yr3, yr4, yr5, yr6, yr7, yi0, yi1, yi2, yi3, yi4, yi5, yi6, yi7):
    return add(xr0, xr1, xr2, xr3, xr4, xr5, xr6, xr7, yr0, yr1, yr2, yr3, yr4, yr5, yr6, yr7), add(xi0, xi1, xi2, xi3, xi4, xi5, xi6, xi7, yi0, yi1, yi2, yi3, yi4, yi5, yi6, yi7)


@njit(**_opts)
def csub(xr0, xr1, xr2, xr3, xr4, xr5, xr6, xr7, xi0, xi1, xi2, xi3, xi4, xi5, xi6, xi7, yr0, yr1, yr2, yr3, yr4, yr5, yr6, yr7, yi0, yi1, yi2, yi3, yi4, yi5, yi6, yi7):
    return sub(xr0, xr1, xr2, xr3, xr4, xr5, xr6, xr7, yr0, yr1, yr2, yr3, yr4, yr5, yr6, yr7), sub(xi0, xi1, xi2, xi3, xi4, xi5, xi6, xi7, yi0, yi1, yi2, yi3, yi4, yi5, yi6, yi7)


@njit(**_opts)
def absval(xr0, xr1, xr2, xr3, xr4, xr5, xr6, xr7):
    if xr0 < 0.0:
        return (-xr0, -xr1, -xr2, -xr3, -xr4, -xr5, -xr6, -xr7,)
    return (xr0, xr1, xr2, xr3, xr4, xr5, xr6, xr7,)


@njit(**_opts)
def radd_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = add(X[0, q], X[1, q], X[2, q], X[3, q], X[4, q], X[5, q], X[6, q], X[7, q], Y[0, q], Y[1, q], Y[2, q], Y[3, q], Y[4, q], Y[5, q], Y[6, q], Y[7, q])
        Z[0, q] = r[0]
        Z[1, q] = r[1]
        Z[2, q] = r[2]
        Z[3, q] = r[3]
        Z[4, q] = r[4]
        Z[5, q] = r[5]
        Z[6, q] = r[6]
        Z[7, q] = r[7]


@njit(**_opts)
def rsub_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = sub(X[0, q], X[1, q], X[2, q], X[3, q], X[4, q], X[5, q], X[6, q], X[7, q], Y[0, q], Y[1, q], Y[2, q], Y[3, q], Y[4, q], Y[5, q], Y[6, q], Y[7, q])
        Z[0, q] = r[0]
        Z[1, q] = r[1]
        Z[2, q] = r[2]
        Z[3, q] = r[3]
        Z[4, q] = r[4]
        Z[5, q] = r[5]
        Z[6, q] = r[6]
        Z[7, q] = r[7]


@njit(**_opts)
def rmul_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = mul(X[0, q], X[1, q], X[2, q], X[3, q], X[4, q], X[5, q], X[6, q], X[7, q], Y[0, q], Y[1, q], Y[2, q], Y[3, q], Y[4, q], Y[5, q], Y[6, q], Y[7, q])
        Z[0, q] = r[0]
        Z[1, q] = r[1]
        Z[2, q] = r[2]
        Z[3, q] = r[3]
        Z[4, q] = r[4]
        Z[5, q] = r[5]
        Z[6, q] = r[6]
        Z[7, q] = r[7]


@njit(**_opts)
def cadd_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = cadd(X[0, 0, q], X[0, 1, q], X[0, 2, q], X[0, 3, q], X[0, 4, q], X[0, 5, q], X[0, 6, q], X[0, 7, q], X[1, 0, q], X[1, 1, q], X[1, 2, q], X[1, 3, q], X[1, 4, q], X[1, 5, q], X[1, 6, q], X[1, 7, q], Y[0, 0, q], Y[0, 1, q], Y[0, 2, q], Y[0, 3, q], Y[0, 4, q], Y[0, 5, q], Y[0, 6, q], Y[0, 7, q], Y[1, 0, q], Y[1, 1, q], Y[1, 2, q], Y[1, 3, q], Y[1, 4, q], Y[1, 5, q], Y[1, 6, q], Y[1, 7, q])
        Z[0, 0, q] = re[0]
        Z[0, 1, q] = re[1]
        Z[0, 2, q] = re[2]
        Z[0, 3, q] = re[3]
        Z[0, 4, q] = re[4]
        Z[0, 5, q] = re[5]
        Z[0, 6, q] = re[6]
        Z[0, 7, q] = re[7]
        Z[1, 0, q] = im[0]
        Z[1, 1, q] = im[1]
        Z[1, 2, q] = im[2]
        Z[1, 3, q] = im[3]
        Z[1, 4, q] = im[4]
        Z[1, 5, q] = im[5]
        Z[1, 6, q] = im[6]
        Z[1, 7, q] = im[7]


@njit(**_opts)
def csub_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = csub(X[0, 0, q], X[0, 1, q], X[0, 2, q], X[0, 3, q], X[0, 4, q], X[0, 5, q], X[0, 6, q], X[0, 7, q], X[1, 0, q], X[1, 1, q], X[1, 2, q], X[1, 3, q], X[1, 4, q], X[1, 5, q], X[1, 6, q], X[1, 7, q], Y[0, 0, q], Y[0, 1, q], Y[0, 2, q], Y[0, 3, q], Y[0, 4, q], Y[0, 5, q], Y[0, 6, q], Y[0, 7, q], Y[1, 0, q], Y[1, 1, q], Y[1, 2, q], Y[1, 3, q], Y[1, 4, q], Y[1, 5, q], Y[1, 6, q], Y[1, 7, q])
        Z[0, 0, q] = re[0]
        Z[0, 1, q] = re[1]
        Z[0, 2, q] = re[2]
        Z[0, 3, q] = re[3]
        Z[0, 4, q] = re[4]
        Z[0, 5, q] = re[5]
        Z[0, 6, q] = re[6]
        Z[0, 7, q] = re[7]
        Z[1, 0, q] = im[0]
        Z[1, 1, q] = im[1]
        Z[1, 2, q] = im[2]
        Z[1, 3, q] = im[3]
        Z[1, 4, q] = im[4]
        Z[1, 5, q] = im[5]
        Z[1, 6, q] = im[6]
        Z[1, 7, q] = im[7]


@njit(**_opts)
def cmul_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = cmul(X[0, 0, q], X[0, 1, q], X[0, 2, q], X[0, 3, q], X[0, 4, q], X[0, 5, q], X[0, 6, q], X[0, 7, q], X[1, 0, q], X[1, 1, q], X[1, 2, q], X[1, 3, q], X[1, 4, q], X[1, 5, q], X[1, 6, q], X[1, 7, q], Y[0, 0, q], Y[0, 1, q], Y[0, 2, q], Y[0, 3, q], Y[0, 4, q], Y[0, 5, q], Y[0, 6, q], Y[0, 7, q], Y[1, 0, q], Y[1, 1, q], Y[1, 2, q], Y[1, 3, q], Y[1, 4, q], Y[1, 5, q], Y[1, 6, q], Y[1, 7, q])
        Z[0, 0, q] = re[0]
        Z[0, 1, q] = re[1]
        Z[0, 2, q] = re[2]
        Z[0, 3, q] = re[3]
        Z[0, 4, q] = re[4]
        Z[0, 5, q] = re[5]
        Z[0, 6, q] = re[6]
        Z[0, 7, q] = re[7]
        Z[1, 0, q] = im[0]
        Z[1, 1, q] = im[1]
        Z[1, 2, q] = im[2]
        Z[1, 3, q] = im[3]
        Z[1, 4, q] = im[4]
        Z[1, 5, q] = im[5]
        Z[1, 6, q] = im[6]
        Z[1, 7, q] = im[7]


@njit(**_opts)
def cabs2_kernel(X, Z, lo, hi):
    for q in range(lo, hi):
        rr = mul(X[0, 0, q], X[0, 1, q], X[0, 2, q], X[0, 3, q], X[0, 4, q], X[0, 5, q], X[0, 6, q], X[0, 7, q], X[0, 0, q], X[0, 1, q], X[0, 2, q], X[0, 3, q], X[0, 4, q], X[0, 5, q], X[0, 6, q], X[0, 7, q])
        ii = mul(X[1, 0, q], X[1, 1, q], X[1, 2, q], X[1, 3, q], X[1, 4, q], X[1, 5, q], X[1, 6, q], X[1, 7, q], X[1, 0, q], X[1, 1, q], X[1, 2, q], X[1, 3, q], X[1, 4, q], X[1, 5, q], X[1, 6, q], X[1, 7, q])
        r = add(rr[0], rr[1], rr[2], rr[3], rr[4], rr[5], rr[6], rr[7], ii[0], ii[1], ii[2], ii[3], ii[4], ii[5], ii[6], ii[7])
        Z[0, q] = r[0]
        Z[1, q] = r[1]
        Z[2, q] = r[2]
        Z[3, q] = r[3]
        Z[4, q] = r[4]
        Z[5, q] = r[5]
        Z[6, q] = r[6]
        Z[7, q] = r[7]


@njit(**_opts)
def conv_kernel(X, Y, Z, lo, hi):
    # one task per output coefficient; second operand padded with zeros
    d = X.shape[3]
    for q in range(lo, hi):
        b = q // d
        c = q % d
        accr = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,)
        acci = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,)
        for j in range(d):
            if c - j >= 0:
                yr = (Y[0, 0, b, c - j], Y[0, 1, b, c - j], Y[0, 2, b, c - j], Y[0, 3, b, c - j], Y[0, 4, b, c - j], Y[0, 5, b, c - j], Y[0, 6, b, c - j], Y[0, 7, b, c - j],)
                yi = (Y[1, 0, b, c - j], Y[1, 1, b, c - j], Y[1, 2, b, c - j], Y[1, 3, b, c - j], Y[1, 4, b, c - j], Y[1, 5, b, c - j], Y[1, 6, b, c - j], Y[1, 7, b, c - j],)
            else:
                yr = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,)
                yi = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,)
            pr, pi = cmul(X[0, 0, b, j], X[0, 1, b, j], X[0, 2, b, j], X[0, 3, b, j], X[0, 4, b, j], X[0, 5, b, j], X[0, 6, b, j], X[0, 7, b, j], X[1, 0, b, j], X[1, 1, b, j], X[1, 2, b, j], X[1, 3, b, j], X[1, 4, b, j], X[1, 5, b, j], X[1, 6, b, j], X[1, 7, b, j], yr[0], yr[1], yr[2], yr[3], yr[4], yr[5], yr[6], yr[7], yi[0], yi[1], yi[2], yi[3], yi[4], yi[5], yi[6], yi[7])
            if j == 0:
                accr = pr
                acci = pi
            else:
                accr = add(accr[0], accr[1], accr[2], accr[3], accr[4], accr[5], accr[6], accr[7], pr[0], pr[1], pr[2], pr[3], pr[4], pr[5], pr[6], pr[7])
                acci = add(acci[0], acci[1], acci[2], acci[3], acci[4], acci[5], acci[6], acci[7], pi[0], pi[1], pi[2], pi[3], pi[4], pi[5], pi[6], pi[7])
        Z[0, 0, b, c] = accr[0]
        Z[0, 1, b, c] = accr[1]
        Z[0, 2, b, c] = accr[2]
        Z[0, 3, b, c] = accr[3]
        Z[0, 4, b, c] = accr[4]
        Z[0, 5, b, c] = accr[5]
        Z[0, 6, b, c] = accr[6]
        Z[0, 7, b, c] = accr[7]
        Z[1, 0, b, c] = acci[0]
        Z[1, 1, b, c] = acci[1]
        Z[1, 2, b, c] = acci[2]
        Z[1, 3, b, c] = acci[3]
        Z[1, 4, b, c] = acci[4]
        Z[1, 5, b, c] = acci[5]
        Z[1, 6, b, c] = acci[6]
        Z[1, 7, b, c] = acci[7]


@njit(**_opts)
def gemv_kernel(M, V, Y, lo, hi):
    # Y[b, i] = sum_j M[b, i, j] V[b, j], ascending j
    n = M.shape[3]
    m = M.shape[4]
    for q in range(lo, hi):
        b = q // n
        i = q % n
        accr = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,)
        acci = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,)
        for j in range(m):
            pr, pi = cmul(M[0, 0, b, i, j], M[0, 1, b, i, j], M[0, 2, b, i, j], M[0, 3, b, i, j], M[0, 4, b, i, j], M[0, 5, b, i, j], M[0, 6, b, i, j], M[0, 7, b, i, j], M[1, 0, b, i, j], M[1, 1, b, i, j], M[1, 2, b, i, j], M[1, 3, b, i, j], M[1, 4, b, i, j], M[1, 5, b, i, j], M[1, 6, b, i, j], M[1, 7, b, i, j], V[0, 0, b, j], V[0, 1, b, j], V[0, 2, b, j], V[0, 3, b, j], V[0, 4, b, j], V[0, 5, b, j], V[0, 6, b, j], V[0, 7, b, j], V[1, 0, b, j], V[1, 1, b, j], V[1, 2, b, j], V[1, 3, b, j], V[1, 4, b, j], V[1, 5, b, j], V[1, 6, b, j], V[1, 7, b, j])
            if j == 0:
                accr = pr
                acci = pi
            else:
                accr = add(accr[0], accr[1], accr[2], accr[3], accr[4], accr[5], accr[6], accr[7], pr[0], pr[1], pr[2], pr[3], pr[4], pr[5], pr[6], pr[7])
                acci = add(acci[0], acci[1], acci[2], acci[3], acci[4], acci[5], acci[6], acci[7], pi[0], pi[1], pi[2], pi[3], pi[4], pi[5], pi[6], pi[7])
        Y[0, 0, b, i] = accr[0]
        Y[0, 1, b, i] = accr[1]
        Y[0, 2, b, i] = accr[2]
        Y[0, 3, b, i] = accr[3]
        Y[0, 4, b, i] = accr[4]
        Y[0, 5, b, i] = accr[5]
        Y[0, 6, b, i] = accr[6]
        Y[0, 7, b, i] = accr[7]
        Y[1, 0, b, i] = acci[0]
        Y[1, 1, b, i] = acci[1]
        Y[1, 2, b, i] = acci[2]
        Y[1, 3, b, i] = acci[3]
        Y[1, 4, b, i] = acci[4]
        Y[1, 5, b, i] = acci[5]
        Y[1, 6, b, i] = acci[6]
        Y[1, 7, b, i] = acci[7]


@njit(**_opts)
def subseq_kernel(B, T, Z, lo, hi):
    # Z[i] = ((B[i] - T[0, i]) - T[1, i]) - ...
    nt = T.shape[2]
    for q in range(lo, hi):
        accr = (B[0, 0, q], B[0, 1, q], B[0, 2, q], B[0, 3, q], B[0, 4, q], B[0, 5, q], B[0, 6, q], B[0, 7, q],)
        acci = (B[1, 0, q], B[1, 1, q], B[1, 2, q], B[1, 3, q], B[1, 4, q], B[1, 5, q], B[1, 6, q], B[1, 7, q],)
        for t in range(nt):
            accr, acci = csub(accr[0], accr[1], accr[2], accr[3], accr[4], accr[5], accr[6], accr[7], acci[0], acci[1], acci[2], acci[3], acci[4], acci[5], acci[6], acci[7], T[0, 0, t, q], T[0, 1, t, q], T[0, 2, t, q], T[0, 3, t, q], T[0, 4, t, q], T[0, 5, t, q], T[0, 6, t, q], T[0, 7, t, q], T[1, 0, t, q], T[1, 1, t, q], T[1, 2, t, q], T[1, 3, t, q], T[1, 4, t, q], T[1, 5, t, q], T[1, 6, t, q], T[1, 7, t, q])
        Z[0, 0, q] = accr[0]
        Z[0, 1, q] = accr[1]
        Z[0, 2, q] = accr[2]
        Z[0, 3, q] = accr[3]
        Z[0, 4, q] = accr[4]
        Z[0, 5, q] = accr[5]
        Z[0, 6, q] = accr[6]
        Z[0, 7, q] = accr[7]
        Z[1, 0, q] = acci[0]
        Z[1, 1, q] = acci[1]
        Z[1, 2, q] = acci[2]
        Z[1, 3, q] = acci[3]
        Z[1, 4, q] = acci[4]
        Z[1, 5, q] = acci[5]
        Z[1, 6, q] = acci[6]
        Z[1, 7, q] = acci[7]


@njit(**_opts)
def norm1_kernel(X, Z, lo, hi):
    # Z[b] = sum_i |re X[b, i]| + |im X[b, i]|, ascending i, from zero
    n = X.shape[3]
    for q in range(lo, hi):
        acc = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,)
        for i in range(n):
            r = absval(X[0, 0, q, i], X[0, 1, q, i], X[0, 2, q, i], X[0, 3, q, i], X[0, 4, q, i], X[0, 5, q, i], X[0, 6, q, i], X[0, 7, q, i])
            acc = add(acc[0], acc[1], acc[2], acc[3], acc[4], acc[5], acc[6], acc[7], r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7])
            r = absval(X[1, 0, q, i], X[1, 1, q, i], X[1, 2, q, i], X[1, 3, q, i], X[1, 4, q, i], X[1, 5, q, i], X[1, 6, q, i], X[1, 7, q, i])
            acc = add(acc[0], acc[1], acc[2], acc[3], acc[4], acc[5], acc[6], acc[7], r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7])
        Z[0, q] = acc[0]
        Z[1, q] = acc[1]
        Z[2, q] = acc[2]
        Z[3, q] = acc[3]
        Z[4, q] = acc[4]
        Z[5, q] = acc[5]
        Z[6, q] = acc[6]
        Z[7, q] = acc[7]


@njit(**_opts)
def rsum_kernel(X, Z, lo, hi):
    # Z[b] = sum_i X[b, i], ascending i
    n = X.shape[2]
    for q in range(lo, hi):
        acc = (X[0, q, 0], X[1, q, 0], X[2, q, 0], X[3, q, 0], X[4, q, 0], X[5, q, 0], X[6, q, 0], X[7, q, 0],)
        for i in range(1, n):
            acc = add(acc[0], acc[1], acc[2], acc[3], acc[4], acc[5], acc[6], acc[7], X[0, q, i], X[1, q, i], X[2, q, i], X[3, q, i], X[4, q, i], X[5, q, i], X[6, q, i], X[7, q, i])
        Z[0, q] = acc[0]
        Z[1, q] = acc[1]
        Z[2, q] = acc[2]
        Z[3, q] = acc[3]
        Z[4, q] = acc[4]
        Z[5, q] = acc[5]
        Z[6, q] = acc[6]
        Z[7, q] = acc[7]


@njit(**_opts)
def backsub_kernel(R, D, Y, X):
    # solves R x = y upward; D holds the reciprocals of the diagonal of R
    n = R.shape[2]
    for i in range(n - 1, -1, -1):
        accr = (Y[0, 0, i], Y[0, 1, i], Y[0, 2, i], Y[0, 3, i], Y[0, 4, i], Y[0, 5, i], Y[0, 6, i], Y[0, 7, i],)
        acci = (Y[1, 0, i], Y[1, 1, i], Y[1, 2, i], Y[1, 3, i], Y[1, 4, i], Y[1, 5, i], Y[1, 6, i], Y[1, 7, i],)
        for j in range(i + 1, n):
            pr, pi = cmul(R[0, 0, i, j], R[0, 1, i, j], R[0, 2, i, j], R[0, 3, i, j], R[0, 4, i, j], R[0, 5, i, j], R[0, 6, i, j], R[0, 7, i, j], R[1, 0, i, j], R[1, 1, i, j], R[1, 2, i, j], R[1, 3, i, j], R[1, 4, i, j], R[1, 5, i, j], R[1, 6, i, j], R[1, 7, i, j], X[0, 0, j], X[0, 1, j], X[0, 2, j], X[0, 3, j], X[0, 4, j], X[0, 5, j], X[0, 6, j], X[0, 7, j], X[1, 0, j], X[1, 1, j], X[1, 2, j], X[1, 3, j], X[1, 4, j], X[1, 5, j], X[1, 6, j], X[1, 7, j])
            accr, acci = csub(accr[0], accr[1], accr[2], accr[3], accr[4], accr[5], accr[6], accr[7], acci[0], acci[1], acci[2], acci[3], acci[4], acci[5], acci[6], acci[7], pr[0], pr[1], pr[2], pr[3], pr[4], pr[5], pr[6], pr[7], pi[0], pi[1], pi[2], pi[3], pi[4], pi[5], pi[6], pi[7])
        xr, xi = cmul(accr[0], accr[1], accr[2], accr[3], accr[4], accr[5], accr[6], accr[7], acci[0], acci[1], acci[2], acci[3], acci[4], acci[5], acci[6], acci[7], D[0, 0, i], D[0, 1, i], D[0, 2, i], D[0, 3, i], D[0, 4, i], D[0, 5, i], D[0, 6, i], D[0, 7, i], D[1, 0, i], D[1, 1, i], D[1, 2, i], D[1, 3, i], D[1, 4, i], D[1, 5, i], D[1, 6, i], D[1, 7, i])
        X[0, 0, i] = xr[0]
        X[0, 1, i] = xr[1]
        X[0, 2, i] = xr[2]
        X[0, 3, i] = xr[3]
        X[0, 4, i] = xr[4]
        X[0, 5, i] = xr[5]
        X[0, 6, i] = xr[6]
        X[0, 7, i] = xr[7]
        X[1, 0, i] = xi[0]
        X[1, 1, i] = xi[1]
        X[1, 2, i] = xi[2]
        X[1, 3, i] = xi[3]
        X[1, 4, i] = xi[4]
        X[1, 5, i] = xi[5]
        X[1, 6, i] = xi[6]
        X[1, 7, i] = xi[7]
