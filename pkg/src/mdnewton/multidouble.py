"""Real multiple-double arithmetic at 1, 2, 4 and 8 limbs.

A multiple double is an unevaluated sum of nonoverlapping hardware doubles,
most significant limb first.  Scalar values are :class:`MultiDouble`;
array code works on numpy arrays whose leading axis runs over the limbs and
goes through the compiled kernels in :mod:`mdnewton.kernels`.

Every routine here charges its exact hardware-operation count to the
calling thread's counter (see :mod:`mdnewton.counting`).
"""

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from . import counting
from ._kernels import k1, k2, k4, k8
from .counting import Cost, hw_sqrt, measure
from .errors import DivisionByZero, NegativeOperand, PrecisionMismatch

SPLITTER = 134217729.0  # 2**27 + 1


@dataclass(frozen=True)
class Precision:
    name: str
    limbs: int
    eps: float

    def __post_init__(self):
        if self.limbs not in (1, 2, 4, 8):
            raise ValueError(f"unsupported limb count {self.limbs}")

    @property
    def sqrt_eps(self):
        return math.sqrt(self.eps)

    def __str__(self):
        return self.name


D = Precision("d", 1, 2.2e-16)
DD = Precision("dd", 2, 4.9e-32)
QD = Precision("qd", 4, 6.1e-64)
OD = Precision("od", 8, 4.6e-128)

PRECISIONS = {p.name: p for p in (D, DD, QD, OD)}
BY_LIMBS = {p.limbs: p for p in (D, DD, QD, OD)}


def precision(p):
    """Coerce a name, limb count or Precision into a Precision."""
    if isinstance(p, Precision):
        return p
    if isinstance(p, str):
        try:
            return PRECISIONS[p]
        except KeyError:
            raise ValueError(f"unknown precision {p!r}") from None
    try:
        return BY_LIMBS[int(p)]
    except KeyError:
        raise ValueError(f"no precision with {p} limbs") from None


_SCALAR = {1: k1, 2: k2, 4: k4, 8: k8}


def _probe(k, seed):
    # generic operands: distinct nonzero limbs, nonoverlapping
    vals = []
    x = 1.0 + seed / 7.0
    for _ in range(k):
        vals.append(x)
        x = math.ulp(x) * 0.3
    return vals


def _record_costs():
    costs = {}
    for k, mod in _SCALAR.items():
        a, b = _probe(k, 1), _probe(k, 3)
        costs[k] = {
            "add": measure(lambda x, y: mod.add(*x, *y), a, b),
            "sub": measure(lambda x, y: mod.sub(*x, *y), a, b),
            "mul": measure(lambda x, y: mod.mul(*x, *y), a, b),
        }
    return costs


# per-precision cost constants, measured on the routines that execute
COSTS = _record_costs()

TWO_SUM_COST = Cost(add=2, sub=4)
TWO_PROD_COST = Cost(add=3, sub=7, mul=7)


def op_cost(p, op):
    """Recorded cost of one ``op`` in {'add','sub','mul','div','sqrt'}."""
    p = precision(p)
    if op in ("div", "sqrt"):
        return _COMPOSITE_COSTS[(p.limbs, op)]
    return COSTS[p.limbs][op]


# ---------------------------------------------------------------- primitives

def two_sum(a, b):
    """Error-free sum: ``s = fl(a+b)`` and ``s + e == a + b`` exactly."""
    counting.counter().charge(TWO_SUM_COST)
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def split(a):
    t = SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a, b):
    """Error-free product by Dekker splitting (no fused multiply-add)."""
    counting.counter().charge(TWO_PROD_COST)
    p = a * b
    ah, al = split(a)
    bh, bl = split(b)
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def _renorm(xs, k):
    # same two-pass scheme as the generated code, for arbitrary input length
    n = len(xs)
    errs = [0.0] * n
    s = xs[-1]
    for i in range(n - 2, -1, -1):
        t = xs[i] + s
        bb = t - xs[i]
        errs[i + 1] = (xs[i] - (t - bb)) + (s - bb)
        s = t
    errs[0] = s
    out = [0.0] * k
    slot = 0
    carry = errs[0]
    for i in range(1, n):
        r = carry + errs[i]
        bb = r - carry
        e = (carry - (r - bb)) + (errs[i] - bb)
        if e != 0.0:
            if slot < k:
                out[slot] = r
            slot += 1
            carry = e
        else:
            carry = r
    if slot < k:
        out[slot] = carry
    return out


def renormalize(raw, p):
    """Compress a sequence of doubles into a nonoverlapping ``p`` value."""
    p = precision(p)
    xs = [float(x) for x in raw]
    if not xs:
        return MultiDouble.zero(p)
    if len(xs) == 1:
        return MultiDouble([xs[0]] + [0.0] * (p.limbs - 1))
    counting.counter().charge(TWO_SUM_COST, 2 * (len(xs) - 1))
    return MultiDouble(_renorm(xs, p.limbs))


# ---------------------------------------------------------- limb-level core
# These work on lists of limbs (floats or CountingFloats) and charge nothing;
# the public functions below charge the recorded constants.

def _add(a, b):
    return list(_SCALAR[len(a)].add(*a, *b))


def _sub(a, b):
    return list(_SCALAR[len(a)].sub(*a, *b))


def _mul(a, b):
    return list(_SCALAR[len(a)].mul(*a, *b))


def _pad(x, k):
    return list(x[:k]) + [0.0] * (k - len(x[:k]))


def _div(a, b):
    k = len(a)
    if k == 1:
        return [a[0] / b[0]]
    # reciprocal by Newton, doubling the limb count each step
    r = [1.0 / b[0]]
    m = 1
    while m < k:
        m *= 2
        rr = _pad(r, m)
        e = _sub(_pad([1.0], m), _mul(_pad(b, m), rr))
        r = _add(rr, _mul(rr, e))
    q = _mul(a, r)
    # one correction step on the quotient itself
    return _add(q, _mul(r, _sub(a, _mul(b, q))))


def _half(x):
    return [v * 0.5 for v in x]


def _sqrt(a):
    k = len(a)
    if k == 1:
        return [hw_sqrt(a[0])]
    # reciprocal square root by Newton from the hardware root of limb 0
    y = [1.0 / hw_sqrt(a[0])]
    m = 1
    while m < k:
        m *= 2
        yy = _pad(y, m)
        e = _sub(_pad([1.0], m), _mul(_pad(a, m), _mul(yy, yy)))
        y = _add(yy, _half(_mul(yy, e)))
    s = _mul(a, y)
    return _add(s, _half(_mul(y, _sub(a, _mul(s, s)))))


def _composite_costs():
    out = {}
    for k in _SCALAR:
        out[(k, "div")] = measure(_div, _probe(k, 2), _probe(k, 5))
        out[(k, "sqrt")] = measure(_sqrt, _probe(k, 2))
    return out


_COMPOSITE_COSTS = _composite_costs()


# ------------------------------------------------------------- public API

def _operands(a, b, p):
    a = as_md(a, p)
    b = as_md(b, p if p is not None else a.precision)
    if a.precision != b.precision:
        raise PrecisionMismatch(f"{a.precision} vs {b.precision}")
    if p is not None and precision(p) != a.precision:
        raise PrecisionMismatch(f"operands at {a.precision}, requested {precision(p)}")
    return a, b


def md_add(a, b, p=None):
    a, b = _operands(a, b, p)
    counting.counter().charge(COSTS[len(a.limbs)]["add"])
    return MultiDouble(_add(a.limbs, b.limbs))


def md_sub(a, b, p=None):
    a, b = _operands(a, b, p)
    counting.counter().charge(COSTS[len(a.limbs)]["sub"])
    return MultiDouble(_sub(a.limbs, b.limbs))


def md_mul(a, b, p=None):
    a, b = _operands(a, b, p)
    counting.counter().charge(COSTS[len(a.limbs)]["mul"])
    return MultiDouble(_mul(a.limbs, b.limbs))


def md_div(a, b, p=None):
    a, b = _operands(a, b, p)
    if all(x == 0.0 for x in b.limbs):
        raise DivisionByZero("division by a zero multiple double")
    k = len(a.limbs)
    counting.counter().charge(_COMPOSITE_COSTS[(k, "div")])
    return MultiDouble(_div(a.limbs, b.limbs))


def md_sqrt(a, p=None):
    a = as_md(a, p)
    if a.limbs[0] < 0.0:
        raise NegativeOperand("square root of a negative value")
    if a.limbs[0] == 0.0:
        return MultiDouble.zero(a.precision)
    counting.counter().charge(_COMPOSITE_COSTS[(len(a.limbs), "sqrt")])
    return MultiDouble(_sqrt(a.limbs))


def is_nonoverlapping(limbs):
    """True when each nonzero limb is at most half an ulp of its predecessor."""
    for a, b in zip(limbs, limbs[1:]):
        if b != 0.0 and abs(b) > math.ulp(a) / 2:
            return False
    return True


def _round_exact(x, k):
    limbs = []
    rest = Fraction(x)
    for _ in range(k):
        v = float(rest)
        limbs.append(v)
        rest -= Fraction(v)
    return limbs


class MultiDouble:
    """An immutable multiple-double scalar."""

    __slots__ = ("limbs",)

    def __init__(self, limbs):
        limbs = tuple(float(x) for x in limbs)
        if len(limbs) not in (1, 2, 4, 8):
            raise ValueError(f"a multiple double has 1, 2, 4 or 8 limbs, got {len(limbs)}")
        object.__setattr__(self, "limbs", limbs)

    def __setattr__(self, name, value):
        raise AttributeError("MultiDouble is immutable")

    @property
    def precision(self) -> Precision:
        return BY_LIMBS[len(self.limbs)]

    @classmethod
    def zero(cls, p):
        return cls([0.0] * precision(p).limbs)

    @classmethod
    def from_value(cls, x, p):
        """Round an int, float, Fraction, Decimal or numeric string to ``p``."""
        p = precision(p)
        if isinstance(x, MultiDouble):
            return x.to_precision(p)
        if isinstance(x, str):
            x = Decimal(x)
        if isinstance(x, float) and not math.isfinite(x):
            return cls([x] + [0.0] * (p.limbs - 1))
        return cls(_round_exact(x, p.limbs))

    def to_precision(self, p):
        """Truncate or zero-extend to another precision."""
        k = precision(p).limbs
        return MultiDouble(_pad(self.limbs, k))

    def to_fraction(self) -> Fraction:
        return sum((Fraction(x) for x in self.limbs), Fraction(0))

    def to_decimal(self, digits=None) -> Decimal:
        if digits is None:
            digits = 17 * len(self.limbs) + 2
        with localcontext() as ctx:
            ctx.prec = digits
            f = self.to_fraction()
            return Decimal(f.numerator) / Decimal(f.denominator)

    def hex(self):
        return [x.hex() for x in self.limbs]

    @classmethod
    def fromhex(cls, items):
        return cls([float.fromhex(s) for s in items])

    def __float__(self):
        return float(self.to_fraction()) if all(map(math.isfinite, self.limbs)) else self.limbs[0]

    def __bool__(self):
        return any(x != 0.0 for x in self.limbs)

    def __neg__(self):
        return MultiDouble([-x for x in self.limbs])

    def __abs__(self):
        return -self if self.limbs[0] < 0.0 else self

    def _coerce(self, other):
        if isinstance(other, MultiDouble):
            return other
        if isinstance(other, (int, float, Fraction, Decimal)):
            return MultiDouble.from_value(other, self.precision)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else md_add(self, other)

    def __radd__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else md_add(other, self)

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else md_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else md_sub(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else md_mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else md_mul(other, self)

    def __truediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else md_div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else md_div(other, self)

    def sqrt(self):
        return md_sqrt(self)

    def __eq__(self, other):
        if isinstance(other, MultiDouble):
            return self.limbs == other.limbs
        if isinstance(other, (int, float, Fraction)):
            return self.to_fraction() == Fraction(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.limbs)

    def _cmp_value(self, other):
        if isinstance(other, MultiDouble):
            return other.to_fraction()
        return Fraction(other)

    def __lt__(self, other):
        return self.to_fraction() < self._cmp_value(other)

    def __le__(self, other):
        return self.to_fraction() <= self._cmp_value(other)

    def __gt__(self, other):
        return self.to_fraction() > self._cmp_value(other)

    def __ge__(self, other):
        return self.to_fraction() >= self._cmp_value(other)

    def __repr__(self):
        digits = 16 * len(self.limbs)
        return f"MultiDouble({self.to_decimal(digits):.{digits - 1}e}, {self.precision.name})"


def as_md(x, p=None):
    if isinstance(x, MultiDouble):
        return x
    if p is None:
        raise TypeError("a precision is needed to convert a plain number")
    return MultiDouble.from_value(x, p)
