"""Source generator for the per-precision arithmetic kernels.

Every precision level gets its own straight-line routines: ``_kernels/k{K}.py``
holds plain Python functions of scalar limbs, ``_kernels/j{K}.py`` compiles
them with numba and wraps them in array loops.  The plain functions are also
run on counting floats to record the per-operation cost constants, so the
counts always describe the code that executes.

Regenerate with ``python -m mdnewton._codegen``.
"""

from pathlib import Path

HEADER = "# Generated by mdnewton._codegen -- do not edit.\n"
LIMB_COUNTS = (1, 2, 4, 8)


class _Emitter:
    """Collects straight-line statements over fresh temporaries."""

    def __init__(self, indent="    "):
        self.lines = []
        self.indent = indent
        self._n = 0

    def tmp(self):
        self._n += 1
        return f"t{self._n}"

    def emit(self, line):
        self.lines.append(self.indent + line)

    def op(self, a, o, b):
        t = self.tmp()
        self.emit(f"{t} = {a} {o} {b}")
        return t

    def neg(self, a):
        t = self.tmp()
        self.emit(f"{t} = -{a}")
        return t

    def two_sum(self, a, b):
        s = self.op(a, "+", b)
        bb = self.op(s, "-", a)
        e = self.op(self.op(a, "-", self.op(s, "-", bb)), "+", self.op(b, "-", bb))
        return s, e

    def quick_two_sum(self, a, b):
        # requires |a| >= |b|
        s = self.op(a, "+", b)
        e = self.op(b, "-", self.op(s, "-", a))
        return s, e

    def split(self, a):
        t = self.op("SPLITTER", "*", a)
        hi = self.op(t, "-", self.op(t, "-", a))
        lo = self.op(a, "-", hi)
        return hi, lo

    def two_prod(self, a, b, sa, sb):
        ah, al = sa
        bh, bl = sb
        p = self.op(a, "*", b)
        e = self.op(self.op(ah, "*", bh), "-", p)
        e = self.op(e, "+", self.op(ah, "*", bl))
        e = self.op(e, "+", self.op(al, "*", bh))
        e = self.op(e, "+", self.op(al, "*", bl))
        return p, e

    def merge_by_magnitude(self, a, b):
        """Merge two magnitude-sorted limb lists with an odd-even network.

        Compare-exchanges only reorder values, so no arithmetic is added.
        """
        xs = [self.tmp() for _ in range(len(a) + len(b))]
        for x, v in zip(xs, list(a) + list(b)):
            self.emit(f"{x} = {v}")
        for i, j in _oddeven_merge(0, len(xs) - 1, 1):
            self.emit(f"if abs({xs[i]}) < abs({xs[j]}):")
            self.emit(f"    {xs[i]}, {xs[j]} = {xs[j]}, {xs[i]}")
        return xs

    def renormalize(self, xs, k):
        """Two-pass renormalization of ``xs`` into ``k`` nonoverlapping limbs.

        The first pass is an error-free bottom-up accumulation; the second
        sweeps top-down and compacts away zero errors; a last quick-two-sum
        sweep leaves every limb within half an ulp of its predecessor.  The arithmetic is the
        same on every path, only the slot assignments branch.
        """
        n = len(xs)
        errs = [None] * n
        s = xs[-1]
        for i in range(n - 2, -1, -1):
            s, errs[i + 1] = self.two_sum(xs[i], s)
        errs[0] = s
        ys = [self.tmp() for _ in range(k)]
        for y in ys:
            self.emit(f"{y} = 0.0")
        slot = self.tmp()
        carry = self.tmp()
        self.emit(f"{slot} = 0")
        self.emit(f"{carry} = {errs[0]}")
        for i in range(1, n):
            r, e = self.two_sum(carry, errs[i])
            self.emit(f"if {e} != 0.0:")
            for j, y in enumerate(ys):
                self.emit(f"    {'if' if j == 0 else 'elif'} {slot} == {j}:")
                self.emit(f"        {y} = {r}")
            self.emit(f"    {slot} += 1")
            self.emit(f"    {carry} = {e}")
            self.emit("else:")
            self.emit(f"    {carry} = {r}")
        for j, y in enumerate(ys):
            self.emit(f"{'if' if j == 0 else 'elif'} {slot} == {j}:")
            self.emit(f"    {y} = {carry}")
        # final sweep tightens each neighbouring pair to half an ulp
        for j in range(k - 1):
            ys[j], ys[j + 1] = self.quick_two_sum(ys[j], ys[j + 1])
        return ys


def _oddeven_merge(lo, hi, r):
    # Batcher's merge of the sorted halves of positions lo..hi
    step = r * 2
    if step < hi - lo:
        yield from _oddeven_merge(lo, hi, step)
        yield from _oddeven_merge(lo + r, hi, step)
        for i in range(lo + r, hi - r, step):
            yield i, i + r
    else:
        yield lo, lo + r


def _limbs(name, k):
    return [f"{name}{i}" for i in range(k)]


def _function(name, args, em, results):
    body = "\n".join(em.lines)
    return (f"def {name}({', '.join(args)}):\n{body}\n"
            f"    return ({', '.join(results)},)\n")


def _emit_add(em, a, b, k):
    if k == 1:
        return [em.op(a[0], "+", b[0])]
    if k == 2:
        # accurate double-double addition
        s1, s2 = em.two_sum(a[0], b[0])
        t1, t2 = em.two_sum(a[1], b[1])
        s2 = em.op(s2, "+", t1)
        s1, s2 = em.quick_two_sum(s1, s2)
        s2 = em.op(s2, "+", t2)
        return list(em.quick_two_sum(s1, s2))
    return em.renormalize(em.merge_by_magnitude(a, b), k)


def _emit_mul(em, a, b, k):
    if k == 1:
        return [em.op(a[0], "*", b[0])]
    if k == 2:
        p, e = em.two_prod(a[0], b[0], em.split(a[0]), em.split(b[0]))
        cross = em.op(em.op(a[0], "*", b[1]), "+", em.op(a[1], "*", b[0]))
        e = em.op(e, "+", cross)
        return list(em.quick_two_sum(p, e))
    sa = [em.split(x) for x in a]
    sb = [em.split(x) for x in b]
    # levels[l] collects terms of magnitude ~ 2^(-53 l) relative to a*b
    levels = [[] for _ in range(k + 1)]
    for lev in range(k):
        for i in range(lev + 1):
            p, e = em.two_prod(a[i], b[lev - i], sa[i], sb[lev - i])
            levels[lev].append(p)
            levels[lev + 1].append(e)
    for i in range(1, k):
        levels[k].append(em.op(a[i], "*", b[k - i]))
    partial = []
    for lev in range(k):
        terms = levels[lev]
        s = terms[0]
        for t in terms[1:]:
            s, err = em.two_sum(s, t)
            levels[lev + 1].append(err)
        partial.append(s)
    terms = levels[k]
    s = terms[0]
    for t in terms[1:]:
        s = em.op(s, "+", t)
    partial.append(s)
    return em.renormalize(partial, k)


def scalar_module(k):
    """Source of the plain-Python limb routines for ``k`` limbs."""
    a, b = _limbs("a", k), _limbs("b", k)
    parts = [HEADER, f'"""Straight-line {k}-limb arithmetic."""\n\n',
             f"LIMBS = {k}\nSPLITTER = 134217729.0\n\n"]

    em = _Emitter()
    parts.append(_function("add", a + b, em, _emit_add(em, a, b, k)) + "\n\n")

    em = _Emitter()
    nb = [em.neg(x) for x in b]
    parts.append(_function("sub", a + b, em, _emit_add(em, a, nb, k)) + "\n\n")

    em = _Emitter()
    parts.append(_function("mul", a + b, em, _emit_mul(em, a, b, k)))
    return "".join(parts)


def _tuple(items):
    return "(" + ", ".join(items) + ",)"


def _at(arr, prefix, k, index):
    """Limb loads ``arr[prefix, i, index]`` for i < k."""
    return [f"{arr}[{prefix}{i}, {index}]" for i in range(k)]


def _call(fn, *groups):
    return f"{fn}({', '.join(x for g in groups for x in g)})"


def _unpack(var, k):
    return [f"{var}[{i}]" for i in range(k)]


def jit_module(k):
    """Source of the numba array kernels for ``k`` limbs."""
    zero = _tuple(["0.0"] * k)
    L = lambda v: _unpack(v, k)  # noqa: E731
    out = [HEADER, f'"""Compiled {k}-limb array kernels."""\n\n',
           "from numba import njit\n\n",
           f"from . import k{k} as _scalar\n\n",
           "_opts = dict(cache=True, nogil=True)\n",
           "add = njit(**_opts)(_scalar.add)\n",
           "sub = njit(**_opts)(_scalar.sub)\n",
           "mul = njit(**_opts)(_scalar.mul)\n\n\n"]

    xr, xi = _limbs("xr", k), _limbs("xi", k)
    yr, yi = _limbs("yr", k), _limbs("yi", k)
    out.append(f"""@njit(**_opts)
def cmul({', '.join(xr + xi + yr + yi)}):
    rr = {_call('mul', xr, yr)}
    ii = {_call('mul', xi, yi)}
    ri = {_call('mul', xr, yi)}
    ir = {_call('mul', xi, yr)}
    return {_call('sub', L('rr'), L('ii'))}, {_call('add', L('ri'), L('ir'))}


@njit(**_opts)
def cadd({', '.join(xr + xi + yr + yi)}):
    return {_call('add', xr, yr)}, {_call('add', xi, yi)}


@njit(**_opts)
def csub({', '.join(xr + xi + yr + yi)}):
    return {_call('sub', xr, yr)}, {_call('sub', xi, yi)}


@njit(**_opts)
def absval({', '.join(xr)}):
    if xr0 < 0.0:
        return {_tuple(['-' + v for v in xr])}
    return {_tuple(xr)}


""")

    def store(arr, prefix, index, var):
        return "\n".join(f"        {arr}[{prefix}{i}, {index}] = {var}[{i}]"
                         for i in range(k))

    for name, fn in (("radd", "add"), ("rsub", "sub"), ("rmul", "mul")):
        out.append(f"""@njit(**_opts)
def {name}_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        r = {_call(fn, _at('X', '', k, 'q'), _at('Y', '', k, 'q'))}
{store('Z', '', 'q', 'r')}


""")

    for name in ("cadd", "csub", "cmul"):
        out.append(f"""@njit(**_opts)
def {name}_kernel(X, Y, Z, lo, hi):
    for q in range(lo, hi):
        re, im = {_call(name, _at('X', '0, ', k, 'q'), _at('X', '1, ', k, 'q'),
                        _at('Y', '0, ', k, 'q'), _at('Y', '1, ', k, 'q'))}
{store('Z', '0, ', 'q', 're')}
{store('Z', '1, ', 'q', 'im')}


""")

    out.append(f"""@njit(**_opts)
def cabs2_kernel(X, Z, lo, hi):
    for q in range(lo, hi):
        rr = {_call('mul', _at('X', '0, ', k, 'q'), _at('X', '0, ', k, 'q'))}
        ii = {_call('mul', _at('X', '1, ', k, 'q'), _at('X', '1, ', k, 'q'))}
        r = {_call('add', L('rr'), L('ii'))}
{store('Z', '', 'q', 'r')}


@njit(**_opts)
def conv_kernel(X, Y, Z, lo, hi):
    # one task per output coefficient; second operand padded with zeros
    d = X.shape[3]
    for q in range(lo, hi):
        b = q // d
        c = q % d
        accr = {zero}
        acci = {zero}
        for j in range(d):
            if c - j >= 0:
                yr = {_tuple(_at('Y', '0, ', k, 'b, c - j'))}
                yi = {_tuple(_at('Y', '1, ', k, 'b, c - j'))}
            else:
                yr = {zero}
                yi = {zero}
            pr, pi = {_call('cmul', _at('X', '0, ', k, 'b, j'), _at('X', '1, ', k, 'b, j'),
                            L('yr'), L('yi'))}
            if j == 0:
                accr = pr
                acci = pi
            else:
                accr = {_call('add', L('accr'), L('pr'))}
                acci = {_call('add', L('acci'), L('pi'))}
{store('Z', '0, ', 'b, c', 'accr')}
{store('Z', '1, ', 'b, c', 'acci')}


@njit(**_opts)
def gemv_kernel(M, V, Y, lo, hi):
    # Y[b, i] = sum_j M[b, i, j] V[b, j], ascending j
    n = M.shape[3]
    m = M.shape[4]
    for q in range(lo, hi):
        b = q // n
        i = q % n
        accr = {zero}
        acci = {zero}
        for j in range(m):
            pr, pi = {_call('cmul', _at('M', '0, ', k, 'b, i, j'), _at('M', '1, ', k, 'b, i, j'),
                            _at('V', '0, ', k, 'b, j'), _at('V', '1, ', k, 'b, j'))}
            if j == 0:
                accr = pr
                acci = pi
            else:
                accr = {_call('add', L('accr'), L('pr'))}
                acci = {_call('add', L('acci'), L('pi'))}
{store('Y', '0, ', 'b, i', 'accr')}
{store('Y', '1, ', 'b, i', 'acci')}


@njit(**_opts)
def subseq_kernel(B, T, Z, lo, hi):
    # Z[i] = ((B[i] - T[0, i]) - T[1, i]) - ...
    nt = T.shape[2]
    for q in range(lo, hi):
        accr = {_tuple(_at('B', '0, ', k, 'q'))}
        acci = {_tuple(_at('B', '1, ', k, 'q'))}
        for t in range(nt):
            accr, acci = {_call('csub', L('accr'), L('acci'),
                                _at('T', '0, ', k, 't, q'), _at('T', '1, ', k, 't, q'))}
{store('Z', '0, ', 'q', 'accr')}
{store('Z', '1, ', 'q', 'acci')}


@njit(**_opts)
def norm1_kernel(X, Z, lo, hi):
    # Z[b] = sum_i |re X[b, i]| + |im X[b, i]|, ascending i, from zero
    n = X.shape[3]
    for q in range(lo, hi):
        acc = {zero}
        for i in range(n):
            r = {_call('absval', _at('X', '0, ', k, 'q, i'))}
            acc = {_call('add', L('acc'), L('r'))}
            r = {_call('absval', _at('X', '1, ', k, 'q, i'))}
            acc = {_call('add', L('acc'), L('r'))}
{store('Z', '', 'q', 'acc')}


@njit(**_opts)
def rsum_kernel(X, Z, lo, hi):
    # Z[b] = sum_i X[b, i], ascending i
    n = X.shape[2]
    for q in range(lo, hi):
        acc = {_tuple(_at('X', '', k, 'q, 0'))}
        for i in range(1, n):
            acc = {_call('add', L('acc'), _at('X', '', k, 'q, i'))}
{store('Z', '', 'q', 'acc')}


@njit(**_opts)
def backsub_kernel(R, D, Y, X):
    # solves R x = y upward; D holds the reciprocals of the diagonal of R
    n = R.shape[2]
    for i in range(n - 1, -1, -1):
        accr = {_tuple(_at('Y', '0, ', k, 'i'))}
        acci = {_tuple(_at('Y', '1, ', k, 'i'))}
        for j in range(i + 1, n):
            pr, pi = {_call('cmul', _at('R', '0, ', k, 'i, j'), _at('R', '1, ', k, 'i, j'),
                            _at('X', '0, ', k, 'j'), _at('X', '1, ', k, 'j'))}
            accr, acci = {_call('csub', L('accr'), L('acci'), L('pr'), L('pi'))}
        xr, xi = {_call('cmul', L('accr'), L('acci'),
                        _at('D', '0, ', k, 'i'), _at('D', '1, ', k, 'i'))}
{store('X', '0, ', 'i', 'xr')}
{store('X', '1, ', 'i', 'xi')}
""")
    return "".join(out)


def render():
    """Map of file name to generated source for every precision level."""
    files = {}
    for k in LIMB_COUNTS:
        files[f"k{k}.py"] = scalar_module(k)
        files[f"j{k}.py"] = jit_module(k)
    files["__init__.py"] = HEADER
    return files


def write(target=None):
    target = Path(target or Path(__file__).with_name("_kernels"))
    target.mkdir(exist_ok=True)
    for name, src in render().items():
        (target / name).write_text(src)
    return target


if __name__ == "__main__":
    print(f"wrote {write()}")
