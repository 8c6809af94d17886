"""Built-in oracle suites run by ``mdnewton verify``.

Each suite compares package results against an independent reference and
returns a :class:`SuiteResult`.  The arithmetic suite goes through
``multidouble.md_add``/``md_mul`` by attribute lookup so a patched routine is
noticed.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import multidouble
from .evaldiff import speel_monomial
from .linsolve import householder_qr, toeplitz_solve
from .multidouble import DD, OD, QD, MultiDouble
from .series import SeriesVec, convolve, exp_series


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    detail: str = ""


def _dyadic_md(rng, k, lo=-30, hi=30):
    """A random nonoverlapping k-limb value made of short dyadic limbs."""
    e = int(rng.integers(lo, hi))
    limbs = []
    for _ in range(k):
        m = int(rng.integers(1 << 20, 1 << 21)) * int(rng.choice((-1, 1)))
        limbs.append(math.ldexp(m, e - 20))
        e -= int(rng.integers(54, 60))
    return MultiDouble(limbs)


def suite_dyadic(samples=300, seed=11):
    rng = np.random.default_rng(seed)
    worst = 0.0
    checks = 0
    for p in (DD, QD, OD):
        for _ in range(samples):
            a, b = _dyadic_md(rng, p.limbs), _dyadic_md(rng, p.limbs)
            fa, fb = a.to_fraction(), b.to_fraction()
            for got, exact in ((multidouble.md_add(a, b), fa + fb),
                               (multidouble.md_mul(a, b), fa * fb)):
                checks += 1
                if exact:
                    rel = abs(got.to_fraction() - exact) / abs(exact) / Fraction(p.eps)
                    worst = max(worst, float(rel))
    ok = worst <= 4.0
    return SuiteResult("dyadic arithmetic", ok, checks, f"worst error {worst:.3g} eps")


def _dense_block(A, d):
    n = A.shape[0]
    M = np.zeros((n * d, n * d), dtype=complex)
    for i in range(d):
        for j in range(i + 1):
            M[i * n:(i + 1) * n, j * n:(j + 1) * n] = A[:, :, i - j]
    return M


def suite_toeplitz(n=3, d=4, seed=12, tol=1e-10):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(n, n, d)) + 1j * rng.normal(size=(n, n, d))
    A[:, :, 0] += 3 * np.eye(n)
    b = rng.normal(size=(n, d)) + 1j * rng.normal(size=(n, d))
    Ap = np.stack([A.real, A.imag])[:, None]
    bp = np.stack([b.real, b.imag])[:, None]
    factors = householder_qr(Ap[..., 0])
    dx = toeplitz_solve(Ap, bp, factors).data
    got = dx[0, 0] + 1j * dx[1, 0]
    ref = np.linalg.solve(_dense_block(A, d), b.T.reshape(-1)).reshape(d, n).T
    err = float(np.max(np.abs(got - ref)))
    return SuiteResult("dense Toeplitz", err <= tol, n * d, f"max error {err:.3g}")


def suite_gradient(n=5, d=6, seed=13):
    """Partial derivatives of x_1 ... x_n against products of the other factors."""
    rng = np.random.default_rng(seed)
    coeffs = rng.integers(-8, 9, size=(2, n, d)).astype(float)
    x = np.zeros((2, 1, n, d))
    x[:, 0] = coeffs
    z = coeffs[0] + 1j * coeffs[1]
    value, grads = speel_monomial(list(range(n)), SeriesVec(x))

    def product(idx):
        out = np.zeros(d, dtype=complex)
        out[0] = 1
        for i in idx:
            out = np.convolve(out, z[i])[:d]
        return out

    def as_complex(s):
        return s.data[0, 0] + 1j * s.data[1, 0]

    checks = 1
    ok = np.array_equal(as_complex(value), product(range(n)))
    for v in range(n):
        checks += 1
        ok &= np.array_equal(as_complex(grads[v]), product([i for i in range(n) if i != v]))
    return SuiteResult("symbolic gradient", bool(ok), checks, "exact integer products")


def suite_exp_product(d=16, seed=14):
    """exp(a t) exp(b t) = exp((a + b) t) coefficient by coefficient."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for p in (DD, QD):
        a, b = [complex(*rng.uniform(-1, 1, 2)) for _ in range(2)]
        sa = exp_series(a, d, p)
        sb = exp_series(b, d, p)
        ab = sa.coeff(1) + sb.coeff(1)
        lhs = convolve(sa, sb)
        rhs = exp_series(ab, d, p)
        for k in range(d):
            dk = Fraction(0)
            for part in range(2):
                dk += abs(sum(map(Fraction, lhs.data[part, :, k].tolist()))
                          - sum(map(Fraction, rhs.data[part, :, k].tolist())))
            worst = max(worst, float(dk / Fraction(p.eps)))
    ok = worst <= 64 * d
    return SuiteResult("exp-product law", ok, 2 * d, f"worst error {worst:.3g} eps")


SUITES = {
    "dyadic": suite_dyadic,
    "toeplitz": suite_toeplitz,
    "gradient": suite_gradient,
    "exp-product": suite_exp_product,
}


def run_suites(names=None):
    names = list(SUITES) if names is None else names
    results = []
    for name in names:
        try:
            results.append(SUITES[name]())
        except Exception as exc:  # a crashing suite is a failing suite
            results.append(SuiteResult(name, False, 0, f"{type(exc).__name__}: {exc}"))
    return results


__all__ = ["SUITES", "SuiteResult", "run_suites"]
