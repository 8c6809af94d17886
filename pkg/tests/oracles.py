"""Independent exact references used by the tests.

Nothing here calls into the package: values are carried as Python integers
scaled by a fixed power of two, or as Fractions.
"""

import math
from fractions import Fraction

import numpy as np

SCALE = 1400  # values are integers times 2**-SCALE


def limbs_to_int(limbs, scale=SCALE):
    """Exact sum of double limbs as an integer multiple of 2**-scale."""
    total = 0
    for x in limbs:
        x = float(x)
        if x == 0.0:
            continue
        m, e = math.frexp(x)
        mi = int(m * (1 << 53))
        shift = e - 53 + scale
        total += mi << shift if shift >= 0 else mi >> -shift
    return total


def limbs_to_fraction(limbs):
    return sum((Fraction(float(x)) for x in limbs), Fraction(0))


def random_expansions(rng, k, count, lo=-60, hi=60):
    """``(k, count)`` array of random nonoverlapping k-limb expansions.

    Limb i carries a full random 53-bit mantissa and sits at least 54 bits
    below limb i-1.
    """
    out = np.zeros((k, count))
    f = rng.integers(lo, hi, size=count) - 52
    for i in range(k):
        mant = rng.integers(1 << 52, 1 << 53, size=count, dtype=np.int64)
        sign = rng.choice((-1.0, 1.0), size=count)
        out[i] = sign * np.ldexp(mant.astype(np.float64), f)
        f = f - 54 - rng.integers(0, 5, size=count)
    return out


def relative_errors_add(a, b, got, eps):
    """max relative error of got against the exact a + b, in units of eps."""
    worst = Fraction(0)
    e = Fraction(eps)
    for j in range(a.shape[1]):
        exact = limbs_to_int(a[:, j]) + limbs_to_int(b[:, j])
        err = abs(limbs_to_int(got[:, j]) - exact)
        if exact:
            worst = max(worst, Fraction(err, abs(exact)) / e)
        elif err:
            return math.inf
    return float(worst)


def relative_errors_mul(a, b, got, eps):
    worst = Fraction(0)
    e = Fraction(eps)
    for j in range(a.shape[1]):
        exact = limbs_to_int(a[:, j]) * limbs_to_int(b[:, j])
        g = limbs_to_int(got[:, j]) << SCALE
        err = abs(g - exact)
        if exact:
            worst = max(worst, Fraction(err, abs(exact)) / e)
        elif err:
            return math.inf
    return float(worst)


def exp_coefficient(re, im, k):
    """Exact (alpha**k / k!) for alpha = re + i im given as Fractions."""
    zr, zi = Fraction(1), Fraction(0)
    for _ in range(k):
        zr, zi = zr * re - zi * im, zr * im + zi * re
    f = math.factorial(k)
    return zr / f, zi / f


def dense_block_toeplitz(A, d):
    """Assemble the (n d) x (n d) block lower-triangular Toeplitz matrix.

    ``A`` is complex ``(n, n, d)``.
    """
    n = A.shape[0]
    M = np.zeros((n * d, n * d), dtype=complex)
    for i in range(d):
        for j in range(i + 1):
            M[i * n:(i + 1) * n, j * n:(j + 1) * n] = A[:, :, i - j]
    return M


def gauss_solve(M, b):
    """Gaussian elimination with partial pivoting, written out."""
    M = np.array(M, dtype=complex)
    b = np.array(b, dtype=complex)
    n = len(b)
    for c in range(n):
        p = c + int(np.argmax(np.abs(M[c:, c])))
        M[[c, p]], b[[c, p]] = M[[p, c]], b[[p, c]]
        for r in range(c + 1, n):
            f = M[r, c] / M[c, c]
            M[r, c:] -= f * M[c, c:]
            b[r] -= f * b[c]
    x = np.zeros(n, dtype=complex)
    for r in range(n - 1, -1, -1):
        x[r] = (b[r] - M[r, r + 1:] @ x[r + 1:]) / M[r, r]
    return x


def series_product(a, b, d):
    """Truncated product of complex coefficient lists."""
    return np.convolve(a, b)[:d]
