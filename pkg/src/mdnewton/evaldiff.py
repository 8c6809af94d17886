"""Evaluation and differentiation of monomial systems at power series.

A product of m series and all m partial derivatives cost 3m - 5 series
products when m >= 3:

* forward products  F_s = x_1 * ... * x_(s+1),           s = 1 .. m-1
* backward products G_s = x_m * ... * x_(m-s),           s = 1 .. m-2
* cross products    x_1..x_(p-1) * x_(p+1)..x_m,          p = 2 .. m-1

F_(m-1) is the value, G_(m-2) and F_(m-2) are the derivatives for the first
and last variable, and the cross products give the rest.  Products of all
monomials are grouped into waves of mutually independent convolutions, so
each wave is a single batched kernel launch.
"""

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DimensionMismatch, DuplicateVariable, EmptyMonomial
from .ledger import section
from .multidouble import COSTS, precision
from .series import Series, SeriesVec

# reference multiplication costs behind the published intensity factors
REFERENCE_MUL_COST = {1: 1, 2: 23, 4: 336, 8: 1742}


class SeriesMatrix:
    """Matrix series A(t): ``data`` has shape ``(2, K, n, n, d)``."""

    def __init__(self, data):
        self.data = np.ascontiguousarray(data, dtype=np.float64)

    @property
    def n(self):
        return self.data.shape[2]

    @property
    def order(self):
        return self.data.shape[4]

    @property
    def precision(self):
        return precision(self.data.shape[1])

    def coeff(self, k):
        return self.data[..., k]


def check_monomial(variables, n):
    variables = [int(v) for v in variables]
    if not variables:
        raise EmptyMonomial("a monomial needs at least one variable")
    if len(set(variables)) != len(variables):
        raise DuplicateVariable(f"repeated variable in {variables}")
    for v in variables:
        if not 0 <= v < n:
            raise DimensionMismatch(f"variable {v} outside 0..{n - 1}")
    return variables


@dataclass
class ProductPlan:
    """Slots and waves of convolutions for a list of monomials.

    Slots ``0..n-1`` hold the variables and slot ``n`` the constant series 1;
    every product gets a fresh slot.
    """

    n: int
    monomials: list
    waves: list = field(default_factory=list)
    value_slot: list = field(default_factory=list)
    grad_slots: list = field(default_factory=list)
    nslots: int = 0

    @property
    def products(self):
        return sum(len(w) for w in self.waves)


def plan_products(monomials, n) -> ProductPlan:
    plan = ProductPlan(n=n, monomials=[check_monomial(m, n) for m in monomials])
    one = n
    nslots = n + 1
    depth = {}  # slot -> wave index; variables are absent
    tasks = []

    def product(left, right):
        nonlocal nslots
        out = nslots
        nslots += 1
        w = max(depth.get(left, -1), depth.get(right, -1)) + 1
        depth[out] = w
        tasks.append((w, out, left, right))
        return out

    for vs in plan.monomials:
        m = len(vs)
        if m == 1:
            plan.value_slot.append(vs[0])
            plan.grad_slots.append({vs[0]: one})
            continue
        if m == 2:
            plan.value_slot.append(product(vs[0], vs[1]))
            plan.grad_slots.append({vs[0]: vs[1], vs[1]: vs[0]})
            continue
        fwd = [None, product(vs[0], vs[1])]
        for s in range(2, m):
            fwd.append(product(fwd[s - 1], vs[s]))
        bwd = [None, product(vs[m - 1], vs[m - 2])]
        for s in range(2, m - 1):
            bwd.append(product(bwd[s - 1], vs[m - 1 - s]))
        grads = {vs[0]: bwd[m - 2], vs[m - 1]: fwd[m - 2]}
        for p in range(2, m):
            left = fwd[p - 2] if p >= 3 else vs[0]
            right = bwd[m - p - 1] if p <= m - 2 else vs[m - 1]
            grads[vs[p - 1]] = product(left, right)
        plan.value_slot.append(fwd[m - 1])
        plan.grad_slots.append(grads)

    nwaves = max((t[0] for t in tasks), default=-1) + 1
    plan.waves = [[] for _ in range(nwaves)]
    for w, out, left, right in tasks:
        plan.waves[w].append((out, left, right))
    plan.nslots = nslots
    return plan


def run_plan(plan: ProductPlan, x):
    """Fill the slot workspace ``(2, K, nslots, d)`` for series data ``x``."""
    x = np.asarray(x)
    _, k, n, d = x.shape
    if n != plan.n:
        raise DimensionMismatch(f"plan for {plan.n} variables, got {n}")
    work = np.zeros((2, k, plan.nslots, d))
    work[:, :, :n] = x
    work[0, 0, n, 0] = 1.0
    for wave in plan.waves:
        outs, lefts, rights = (list(t) for t in zip(*wave))
        work[:, :, outs] = kernels.conv(work[:, :, lefts], work[:, :, rights])
    return work


def speel_monomial(variables, x: SeriesVec):
    """Value and gradient of the product of the listed variables.

    Returns ``(value, gradient)`` where ``gradient`` maps each variable
    index to its partial derivative series.
    """
    plan = plan_products([variables], x.n)
    work = run_plan(plan, x.data)
    value = Series(work[:, :, plan.value_slot[0]])
    grads = {v: Series(work[:, :, s]) for v, s in plan.grad_slots[0].items()}
    return value, grads


def _scaled(series, coeffs):
    """Multiply series ``(2, K, m, d)`` by per-series constants ``(2, K, m)``."""
    c = np.broadcast_to(coeffs[..., None], series.shape)
    return kernels.cmul(c, series)


def evaluate_system(system, x, ledger=None):
    """Jacobian series A(t) and residual series b(t) = rhs - f(x(t)).

    ``x`` is a SeriesVec whose order sets the truncation; the right-hand
    side is truncated to match.
    """
    xd = x.data if isinstance(x, SeriesVec) else np.asarray(x)
    _, k, n, d = xd.shape
    if n != system.n or k != system.precision.limbs:
        raise DimensionMismatch("series vector does not match the system")
    with section(ledger, "convolution"):
        A = np.zeros((2, k, n, n, d))
        f = None
        touched = np.zeros((n, n), dtype=bool)
        for col in system.columns:
            plan = col.plan()
            work = run_plan(plan, xd)
            rows, cols, slots = [], [], []
            for i, grads in enumerate(plan.grad_slots):
                for v, s in grads.items():
                    rows.append(i)
                    cols.append(v)
                    slots.append(s)
            grad = work[:, :, slots]
            value = work[:, :, plan.value_slot]
            if col.coeffs is not None:
                # coefficients applied at write-back
                grad = _scaled(grad, col.coeffs[:, :, rows])
                value = _scaled(value, col.coeffs)
            rows, cols = np.array(rows), np.array(cols)
            hit = touched[rows, cols]
            if hit.any():
                old = A[:, :, rows[hit], cols[hit]]
                A[:, :, rows[hit], cols[hit]] = kernels.cadd(old, grad[:, :, hit])
            A[:, :, rows[~hit], cols[~hit]] = grad[:, :, ~hit]
            touched[rows, cols] = True
            f = value if f is None else kernels.cadd(f, value)
        rhs = system.rhs.data[..., :d]
        if rhs.shape[-1] < d:
            rhs = np.concatenate([rhs, np.zeros(rhs.shape[:-1] + (d - rhs.shape[-1],))], axis=-1)
        b = kernels.csub(rhs, f)
    return SeriesMatrix(A), SeriesVec(b)


def evaluate_values(system, x):
    """f(x(t)) alone, computed along the same path as :func:`evaluate_system`."""
    xd = x.data if isinstance(x, SeriesVec) else np.asarray(x)
    f = None
    for col in system.columns:
        plan = col.plan()
        value = run_plan(plan, xd)[:, :, plan.value_slot]
        if col.coeffs is not None:
            value = _scaled(value, col.coeffs)
        f = value if f is None else kernels.cadd(f, value)
    return SeriesVec(f)


def convolution_count(m, d):
    """Coefficient products for one monomial of m variables at order d."""
    products = 0 if m == 1 else 1 if m == 2 else 3 * m - 5
    return products * d * d


@dataclass
class ArithmeticIntensity:
    n: int
    d: int
    precision: str
    scale_factor: float  # reference multiplication cost per limb
    predicted: float  # reference flops per double for one n-variable product
    implementation_scale: float  # same with this package's recorded cost
    implementation_predicted: float
    measured: float = None  # from the counters of an actual evaluation
    measured_series_products: int = None
    matvec_intensity: float = 0.0
    convolution_intensity: float = 0.0

    @property
    def conv_to_matvec(self):
        return self.convolution_intensity / self.matvec_intensity

    def as_dict(self):
        out = dict(self.__dict__)
        out["conv_to_matvec"] = self.conv_to_matvec
        return out


def intensity_report(n, d, p, measure=True, rng=None) -> ArithmeticIntensity:
    """Multiplications per double for evaluating and differentiating a
    product of n series of order d, predicted and measured."""
    from . import counting

    p = precision(p)
    k = p.limbs
    products = convolution_count(n, d)
    doubles = k * n * d
    ref = REFERENCE_MUL_COST[k] / k
    own_mul = COSTS[k]["mul"].total
    rep = ArithmeticIntensity(
        n=n, d=d, precision=p.name,
        scale_factor=ref, predicted=REFERENCE_MUL_COST[k] * products / doubles,
        implementation_scale=own_mul / k, implementation_predicted=own_mul * products / doubles,
        matvec_intensity=n * n * d * d / ((n + 1) * n * d),
        convolution_intensity=products / (n * d),
    )
    if measure:
        rng = np.random.default_rng(0) if rng is None else rng
        x = np.zeros((2, k, n, d))
        x[:, 0] = rng.uniform(-1, 1, size=(2, n, d))
        with counting.count_ops() as ops:
            speel_monomial(list(range(n)), SeriesVec(x))
        rep.measured_series_products = ops.series_products
        rep.measured = ops.series_products * own_mul / doubles
    return rep
