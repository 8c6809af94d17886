"""Complex multiple doubles: scalars, the 4M product, and planar vectors."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, PrecisionMismatch
from .multidouble import (MultiDouble, md_add, md_div, md_mul, md_sqrt, md_sub,
                          precision)


@dataclass(frozen=True)
class ComplexMD:
    re: MultiDouble
    im: MultiDouble

    def __post_init__(self):
        if len(self.re.limbs) != len(self.im.limbs):
            raise PrecisionMismatch("real and imaginary parts differ in precision")

    @property
    def precision(self):
        return self.re.precision

    @classmethod
    def zero(cls, p):
        z = MultiDouble.zero(p)
        return cls(z, z)

    @classmethod
    def one(cls, p):
        return cls(MultiDouble.from_value(1, p), MultiDouble.zero(p))

    @classmethod
    def from_value(cls, z, p):
        """From a Python number, a ``(re, im)`` pair, or another ComplexMD."""
        if isinstance(z, ComplexMD):
            return cls(z.re.to_precision(p), z.im.to_precision(p))
        if isinstance(z, tuple):
            re, im = z
        elif isinstance(z, complex):
            re, im = z.real, z.imag
        else:
            re, im = z, 0
        return cls(MultiDouble.from_value(re, p), MultiDouble.from_value(im, p))

    @classmethod
    def from_limbs(cls, limbs):
        """From an array of shape ``(2, K)``."""
        limbs = np.asarray(limbs, dtype=np.float64)
        return cls(MultiDouble(limbs[0]), MultiDouble(limbs[1]))

    def limbs(self):
        return np.array([self.re.limbs, self.im.limbs])

    def to_complex(self):
        return complex(float(self.re), float(self.im))

    def to_fractions(self):
        return self.re.to_fraction(), self.im.to_fraction()

    def conj(self):
        return ComplexMD(self.re, -self.im)

    def __neg__(self):
        return ComplexMD(-self.re, -self.im)

    def __add__(self, other):
        return ComplexMD(md_add(self.re, other.re), md_add(self.im, other.im))

    def __sub__(self, other):
        return ComplexMD(md_sub(self.re, other.re), md_sub(self.im, other.im))

    def __mul__(self, other):
        return cmul_4m(self, other)

    def __truediv__(self, other):
        return cdiv(self, other)

    def abs2(self):
        return md_add(md_mul(self.re, self.re), md_mul(self.im, self.im))

    def abs(self):
        return md_sqrt(self.abs2())

    def abs1(self):
        """``|re| + |im|``, the cheap modulus used by the norms."""
        return md_add(abs(self.re), abs(self.im))

    def is_zero(self):
        return not self.re and not self.im

    def __repr__(self):
        return f"ComplexMD({self.re!r}, {self.im!r})"


def cmul_4m(x: ComplexMD, y: ComplexMD) -> ComplexMD:
    """Four real products, one subtraction and one addition."""
    if x.precision != y.precision:
        raise PrecisionMismatch(f"{x.precision} vs {y.precision}")
    rr = md_mul(x.re, y.re)
    ii = md_mul(x.im, y.im)
    ri = md_mul(x.re, y.im)
    ir = md_mul(x.im, y.re)
    return ComplexMD(md_sub(rr, ii), md_add(ri, ir))


def cdiv(x: ComplexMD, y: ComplexMD) -> ComplexMD:
    """x / y as x * conj(y) / |y|^2."""
    inv = md_div(MultiDouble.from_value(1, y.precision), y.abs2())
    num = cmul_4m(x, y.conj())
    return ComplexMD(md_mul(num.re, inv), md_mul(num.im, inv))


class PlanarVector:
    """An n-vector of complex multiple doubles stored as ``2K`` limb planes.

    ``data[0, j]`` holds limb ``j`` of every real part and ``data[1, j]``
    limb ``j`` of every imaginary part, each a contiguous row of n doubles.
    """

    def __init__(self, data):
        data = np.ascontiguousarray(data, dtype=np.float64)
        if data.ndim != 3 or data.shape[0] != 2:
            raise DimensionMismatch(f"planar data needs shape (2, K, n), got {data.shape}")
        precision(data.shape[1])
        self.data = data

    @classmethod
    def zeros(cls, n, p):
        return cls(np.zeros((2, precision(p).limbs, n)))

    @classmethod
    def from_entries(cls, entries, p=None):
        entries = list(entries)
        if p is None:
            p = entries[0].precision
        v = cls.zeros(len(entries), p)
        for i, z in enumerate(entries):
            v.scatter(i, ComplexMD.from_value(z, p))
        return v

    @property
    def n(self):
        return self.data.shape[2]

    @property
    def precision(self):
        return precision(self.data.shape[1])

    def planes(self):
        """The ``2K`` component arrays: real limbs first, then imaginary."""
        return [self.data[c, j] for c in range(2) for j in range(self.data.shape[1])]

    def _check(self, i):
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"index {i} outside 0..{self.n - 1}")

    def gather(self, i) -> ComplexMD:
        self._check(i)
        return ComplexMD.from_limbs(self.data[:, :, i])

    def scatter(self, i, z: ComplexMD):
        self._check(i)
        if z.precision != self.precision:
            raise PrecisionMismatch(f"{z.precision} into a {self.precision} vector")
        self.data[:, :, i] = z.limbs()

    def entries(self):
        return [self.gather(i) for i in range(self.n)]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, PlanarVector) and np.array_equal(self.data, other.data)


def planar_gather(v: PlanarVector, i) -> ComplexMD:
    return v.gather(i)


def planar_scatter(v: PlanarVector, i, z: ComplexMD):
    v.scatter(i, z)


def to_planar(values, p):
    """Round nested lists of numbers or ``(re, im)`` pairs to planar form.

    The result has shape ``(2, K) + shape`` where ``shape`` is the nesting
    of the lists (tuples count as single complex entries).
    """
    p = precision(p)
    if isinstance(values, list) or (isinstance(values, np.ndarray) and values.ndim > 0):
        items = [to_planar(v, p) for v in values]
        if not items:
            return np.zeros((2, p.limbs, 0))
        return np.stack(items, axis=2)
    return ComplexMD.from_value(values, p).limbs()


def planar_fractions(data):
    """Exact values of a planar array as ``(re, im)`` arrays of Fractions."""
    data = np.asarray(data)
    shape = data.shape[2:]
    re = np.empty(shape, dtype=object)
    im = np.empty(shape, dtype=object)
    for idx in np.ndindex(shape):
        sl = (slice(None),) + idx
        re[idx] = sum((Fraction(float(x)) for x in data[(0,) + sl]), Fraction(0))
        im[idx] = sum((Fraction(float(x)) for x in data[(1,) + sl]), Fraction(0))
    return re, im


def planar_to_complex(data):
    """Leading-limb-accurate complex128 view (sum of limbs in double)."""
    data = np.asarray(data)
    return data[0].sum(axis=0) + 1j * data[1].sum(axis=0)
