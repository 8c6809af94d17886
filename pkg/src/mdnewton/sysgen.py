"""Test problems: monomial systems with known exponential series solutions."""

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .complexmd import to_planar
from .errors import DimensionMismatch
from .evaldiff import evaluate_values, plan_products
from .multidouble import DD, OD, QD, D, MultiDouble, precision
from .serialize import encode_planar
from .series import SeriesVec, damp_coefficients, exp_coefficients


class _Unsupported:
    """Marker for orders beyond octo-double reach."""

    name = "unsupported"

    def __repr__(self):
        return "UNSUPPORTED"


UNSUPPORTED = _Unsupported()


def triangular_ones(n, orientation="lower"):
    """0/1 exponent matrix: lower has E[i][j] = 1 for j <= i, upper for j <= n-1-i."""
    if n < 1:
        raise ValueError("dimension must be positive")
    i, j = np.indices((n, n))
    if orientation == "lower":
        return (j <= i).astype(np.int8)
    if orientation == "upper":
        return (j <= n - 1 - i).astype(np.int8)
    raise ValueError(f"orientation must be 'lower' or 'upper', not {orientation!r}")


def check_exponents(E, n=None):
    E = np.asarray(E)
    if E.ndim != 2 or E.shape[0] != E.shape[1] or (n is not None and E.shape[0] != n):
        raise DimensionMismatch(f"exponent matrix of shape {E.shape}")
    if not np.isin(E, (0, 1)).all():
        raise ValueError("exponents are restricted to 0 and 1")
    if not E.any(axis=1).all():
        raise ValueError("every monomial needs at least one variable")
    return E.astype(np.int8)


def recommend_precision(d):
    """Working precision for truncation order d (d coefficients)."""
    if d < 1:
        raise ValueError("order must be at least 1")
    if d <= 8:
        return D
    if d <= 24:
        return DD
    if d <= 32:
        return QD
    if d <= 64:
        return OD
    return UNSUPPORTED


def unit_complex(theta):
    """A point on the unit circle from the rational parametrization.

    With s = tan(pi theta) rounded to a double, (1 - s^2 + 2 s i)/(1 + s^2)
    has modulus exactly one before rounding to ``p``.
    """
    s = Fraction(math.tan(math.pi * theta))
    den = 1 + s * s
    return ((1 - s * s) / den, 2 * s / den)


def make_alphas(n, p, rng, mode="unit-complex", delta=0.1):
    """Exponential rates: unit modulus, or real in [-1,-1+delta] u [1-delta,1]."""
    p = precision(p)
    if mode == "unit-complex":
        vals = [unit_complex(rng.uniform(-0.5, 0.5)) for _ in range(n)]
    elif mode == "real-near-one":
        vals = [(Fraction(rng.choice([-1.0, 1.0]) * (1.0 - delta * rng.uniform())), 0) for _ in range(n)]
    elif mode == "ones":
        vals = [(1, 0)] * n
    else:
        raise ValueError(f"unknown alpha mode {mode!r}")
    return to_planar(vals, p)


@dataclass
class SolutionSpec:
    alphas: np.ndarray  # planar (2, K, n)
    order: int
    precision: object
    damping: float = 1.0

    def __post_init__(self):
        self.precision = precision(self.precision)
        if self.alphas.shape[:2] != (2, self.precision.limbs):
            raise DimensionMismatch("alphas do not match the precision")
        if not 0 < self.damping <= 1:
            raise ValueError("damping must lie in (0, 1]")

    @property
    def n(self):
        return self.alphas.shape[2]


@dataclass
class Column:
    """One term c * x^E of every equation; ``coeffs`` None means all ones."""

    E: np.ndarray
    coeffs: np.ndarray = None
    _plan: object = field(default=None, repr=False)

    def monomials(self):
        return [list(np.flatnonzero(row)) for row in self.E]

    def plan(self):
        if self._plan is None:
            self._plan = plan_products(self.monomials(), self.E.shape[0])
        return self._plan


@dataclass
class MonomialSystem:
    columns: list
    rhs: SeriesVec

    @property
    def n(self):
        return self.rhs.n

    @property
    def order(self):
        return self.rhs.order

    @property
    def precision(self):
        return self.rhs.precision

    def to_json(self):
        return {
            "columns": [{"E": c.E.tolist(),
                         "coeffs": None if c.coeffs is None else encode_planar(c.coeffs)}
                        for c in self.columns],
            "rhs": self.rhs.to_json(),
        }


def random_unit_coeffs(n, p, rng):
    return to_planar([unit_complex(rng.uniform(-0.5, 0.5)) for _ in range(n)], p)


def exact_solution(spec: SolutionSpec) -> SeriesVec:
    data = exp_coefficients(spec.alphas, spec.order)
    if spec.damping != 1:
        data = damp_coefficients(data, spec.damping)
    return SeriesVec(data)


def make_system(spec: SolutionSpec, columns=1, E1=None, E2=None, c1=None, c2=None, rng=None):
    """Monomial system whose solution is exp(alpha_k t), and that solution.

    The right-hand side is the system evaluated at the exact solution by the
    same code that evaluates residuals, so the exact solution leaves a zero
    residual.
    """
    n, p = spec.n, spec.precision
    rng = np.random.default_rng() if rng is None else rng
    if columns not in (1, 2):
        raise ValueError("columns must be 1 or 2")
    E1 = check_exponents(triangular_ones(n, "lower") if E1 is None else E1, n)
    cols = [Column(E1, None if c1 is None else _planar_coeffs(c1, n, p))]
    if columns == 2:
        E2 = check_exponents(triangular_ones(n, "upper") if E2 is None else E2, n)
        c1 = random_unit_coeffs(n, p, rng) if c1 is None else _planar_coeffs(c1, n, p)
        c2 = random_unit_coeffs(n, p, rng) if c2 is None else _planar_coeffs(c2, n, p)
        cols = [Column(E1, c1), Column(E2, c2)]
    exact = exact_solution(spec)
    placeholder = MonomialSystem(cols, SeriesVec.zeros(n, spec.order, p))
    rhs = evaluate_values(placeholder, exact)
    return MonomialSystem(cols, rhs), exact


def _planar_coeffs(c, n, p):
    c = np.asarray(c)
    if c.ndim == 3:
        if c.shape != (2, p.limbs, n):
            raise DimensionMismatch(f"coefficients of shape {c.shape}")
        return c
    if len(c) != n:
        raise DimensionMismatch(f"{len(c)} coefficients for {n} equations")
    return to_planar(list(c), p)


def perturb_start(exact: SeriesVec, p=None, rng=None, noise=None) -> SeriesVec:
    """Leading coefficients with relative noise of size sqrt(eps), rest zero.

    Each real and imaginary part is multiplied by 1 + noise * u with u
    uniform in [-1, 1].
    """
    p = exact.precision if p is None else precision(p)
    if p != exact.precision:
        raise DimensionMismatch("start precision differs from the exact solution")
    rng = np.random.default_rng() if rng is None else rng
    noise = math.sqrt(p.eps) if noise is None else noise
    x0 = exact.data[..., 0]
    factors = np.zeros_like(x0)
    factors[:, 0] = 1.0
    if noise:
        u = rng.uniform(-1.0, 1.0, size=(2, exact.n))
        for part in range(2):
            for i in range(exact.n):
                limbs = MultiDouble.from_value(1 + Fraction(noise) * Fraction(u[part, i]), p).limbs
                factors[part, :, i] = limbs
    start = np.zeros_like(exact.data)
    start[0, :, :, 0] = kernels.rmul(x0[0], factors[0])
    start[1, :, :, 0] = kernels.rmul(x0[1], factors[1])
    return SeriesVec(start)

