"""Truncated power series with complex multiple-double coefficients.

A :class:`Series` of order d stores coefficients of t^0 .. t^(d-1) in an
array of shape ``(2, K, d)``; a :class:`SeriesVec` of dimension n stores
``(2, K, n, d)``.  Coefficients sit on the last axis so that a batch of
series is contiguous for the convolution kernel.
"""

from fractions import Fraction

import numpy as np

from . import kernels
from .complexmd import ComplexMD, PlanarVector, cdiv
from .errors import (DimensionMismatch, LastCoefficientZero, OrderMismatch,
                     PrecisionMismatch)
from .multidouble import MultiDouble, md_mul, precision
from .serialize import decode_planar, encode_planar


class Series:
    def __init__(self, data):
        data = np.ascontiguousarray(data, dtype=np.float64)
        if data.ndim != 3 or data.shape[0] != 2 or data.shape[2] < 1:
            raise DimensionMismatch(f"series data needs shape (2, K, d), got {data.shape}")
        precision(data.shape[1])
        self.data = data

    @classmethod
    def zeros(cls, d, p):
        return cls(np.zeros((2, precision(p).limbs, d)))

    @classmethod
    def one(cls, d, p):
        s = cls.zeros(d, p)
        s.data[0, 0, 0] = 1.0
        return s

    @classmethod
    def from_coeffs(cls, coeffs, p):
        p = precision(p)
        s = cls.zeros(len(coeffs), p)
        for k, c in enumerate(coeffs):
            s.data[:, :, k] = ComplexMD.from_value(c, p).limbs()
        return s

    @property
    def order(self):
        return self.data.shape[2]

    @property
    def precision(self):
        return precision(self.data.shape[1])

    def coeff(self, k) -> ComplexMD:
        return ComplexMD.from_limbs(self.data[:, :, k])

    def coeffs(self):
        return [self.coeff(k) for k in range(self.order)]

    def to_complex(self):
        return self.data[0].sum(axis=0) + 1j * self.data[1].sum(axis=0)

    def __eq__(self, other):
        return isinstance(other, Series) and np.array_equal(self.data, other.data)

    def __repr__(self):
        return f"Series(order={self.order}, precision={self.precision.name})"

    def to_json(self):
        return {"precision": self.precision.name, "order": self.order,
                "coefficients": encode_planar(self.data)}

    @classmethod
    def from_json(cls, obj):
        k = precision(obj["precision"]).limbs
        data = decode_planar(obj["coefficients"], k)
        return cls(data.reshape(2, k, obj["order"]))


class SeriesVec:
    def __init__(self, data):
        data = np.ascontiguousarray(data, dtype=np.float64)
        if data.ndim != 4 or data.shape[0] != 2:
            raise DimensionMismatch(f"series vector data needs shape (2, K, n, d), got {data.shape}")
        precision(data.shape[1])
        self.data = data

    @classmethod
    def zeros(cls, n, d, p):
        return cls(np.zeros((2, precision(p).limbs, n, d)))

    @classmethod
    def from_series(cls, items):
        return cls(np.stack([s.data for s in items], axis=2))

    @property
    def n(self):
        return self.data.shape[2]

    @property
    def order(self):
        return self.data.shape[3]

    @property
    def precision(self):
        return precision(self.data.shape[1])

    def component(self, i) -> Series:
        return Series(self.data[:, :, i, :])

    def coeff(self, k) -> PlanarVector:
        """Coefficient vector of t^k."""
        return PlanarVector(self.data[:, :, :, k])

    def truncate(self, d):
        return SeriesVec(self.data[..., :d])

    def resized(self, d):
        """Truncate or zero-pad to order d."""
        if d <= self.order:
            return self.truncate(d)
        out = np.zeros(self.data.shape[:3] + (d,))
        out[..., :self.order] = self.data
        return SeriesVec(out)

    def copy(self):
        return SeriesVec(self.data.copy())

    def __eq__(self, other):
        return isinstance(other, SeriesVec) and np.array_equal(self.data, other.data)

    def __repr__(self):
        return f"SeriesVec(n={self.n}, order={self.order}, precision={self.precision.name})"

    def to_json(self):
        return {"precision": self.precision.name, "dim": self.n, "order": self.order,
                "components": [self.component(i).to_json()["coefficients"] for i in range(self.n)]}

    @classmethod
    def from_json(cls, obj):
        k = precision(obj["precision"]).limbs
        n, d = obj["dim"], obj["order"]
        data = decode_planar(obj["components"], k) if n else np.zeros((2, k, 0, d))
        return cls(data.reshape(2, k, n, d))


def _check_pair(a, b):
    if a.precision != b.precision:
        raise PrecisionMismatch(f"{a.precision} vs {b.precision}")
    if a.order != b.order:
        raise OrderMismatch(f"orders {a.order} and {b.order}")


def convolve(a: Series, b: Series) -> Series:
    """Truncated product; the second operand is treated as zero below index 0."""
    _check_pair(a, b)
    return Series(kernels.conv(a.data, b.data))


def reciprocal_table(d, p):
    """Correctly rounded 1/k for k = 1..d-1, shape ``(K, d)`` (entry 0 unused)."""
    p = precision(p)
    out = np.zeros((p.limbs, d))
    for k in range(1, d):
        out[:, k] = MultiDouble.from_value(Fraction(1, k), p).limbs
    return out


def exp_coefficients(alphas, d):
    """Coefficients alpha^k / k! for a planar array of alphas ``(2, K, ...)``.

    Uses c_k = (c_{k-1} alpha) (1/k) with a rounded reciprocal; k! is never
    formed.  Result shape ``(2, K, ..., d)``.
    """
    alphas = np.ascontiguousarray(alphas, dtype=np.float64)
    k = alphas.shape[1]
    inv = reciprocal_table(d, k)
    out = np.zeros(alphas.shape + (d,))
    out[0, 0, ..., 0] = 1.0
    for j in range(1, d):
        prod = kernels.cmul(out[..., j - 1], alphas)
        scale = np.broadcast_to(inv[(slice(None),) + (None,) * (alphas.ndim - 2) + (j,)],
                                alphas.shape[1:])
        out[..., j] = kernels.cscale(prod, scale)
    return out


def exp_series(alpha, d, p) -> Series:
    """exp(alpha t) truncated to order d."""
    p = precision(p)
    a = ComplexMD.from_value(alpha, p).limbs()
    return Series(exp_coefficients(a, d))


def damp_coefficients(data, delta):
    """Scale coefficient k of the series in ``data`` (last axis) by delta^k."""
    data = np.ascontiguousarray(data, dtype=np.float64)
    k, d = data.shape[1], data.shape[-1]
    delta = MultiDouble.from_value(delta, k) if not isinstance(delta, MultiDouble) else delta
    if delta == 1:
        return data.copy()
    powers = np.zeros((k, d))
    p = MultiDouble.from_value(1, k)
    for j in range(d):
        powers[:, j] = p.limbs
        if j + 1 < d:
            p = md_mul(p, delta)
    scale = np.broadcast_to(powers.reshape((k,) + (1,) * (data.ndim - 3) + (d,)), data.shape[1:])
    return kernels.cscale(data, scale)


def damp(x: Series, delta) -> Series:
    """x(delta t): coefficient k scaled by delta^k, 0 < delta <= 1."""
    return Series(damp_coefficients(x.data, delta))


def stage_norms(data):
    """1-norms (|re|+|im| summed over entries) of each coefficient vector.

    ``data`` is ``(2, K, n, d)``; returns ``(K, d)``.
    """
    data = np.ascontiguousarray(data, dtype=np.float64)
    return kernels.norm1(np.swapaxes(data, 2, 3))


def max_md(values):
    """Largest of a ``(K, m)`` array of nonnegative multiple doubles, exactly."""
    values = np.asarray(values)
    if values.shape[1] == 0:
        return MultiDouble.zero(values.shape[0])
    best = max(range(values.shape[1]),
               key=lambda j: sum((Fraction(float(x)) for x in values[:, j]), Fraction(0)))
    return MultiDouble(values[:, best])


def series_norm(b) -> MultiDouble:
    """Max over k of the 1-norm of coefficient vector b_k."""
    data = b.data if isinstance(b, SeriesVec) else np.asarray(b)
    if data.shape[2] == 0:
        return MultiDouble.zero(data.shape[1])
    return max_md(stage_norms(data))


def ratio_sequence(x: Series):
    """All consecutive ratios c_k / c_(k+1), k = 0..d-2."""
    out = []
    for k in range(x.order - 1):
        nxt = x.coeff(k + 1)
        if nxt.is_zero():
            raise LastCoefficientZero(f"coefficient {k + 1} vanishes")
        out.append(cdiv(x.coeff(k), nxt))
    return out


def fabry_ratio(x: Series):
    """Estimate of the nearest singularity from the last coefficient pair.

    Returns ``(z, radius)`` with ``z = c_(d-2) / c_(d-1)`` and ``radius = |z|``.
    """
    if x.order < 2:
        raise LastCoefficientZero("need at least two coefficients")
    last = x.coeff(x.order - 1)
    if last.is_zero():
        raise LastCoefficientZero("last coefficient is zero, no estimate")
    z = cdiv(x.coeff(x.order - 2), last)
    return z, z.abs()
