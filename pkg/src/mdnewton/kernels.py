"""Array operations on planar multiple-double data, run by compiled kernels.

Real arrays have shape ``(K, ...)`` (limb planes first); complex arrays have
shape ``(2, K, ...)`` with the real planes before the imaginary ones.  Each
wrapper charges the exact operation count of the work it launches to the
calling thread's counter.

Work is split into contiguous task ranges over a thread pool.  Every output
element is produced by one task with a fixed summation order, so results are
bitwise independent of the number of threads.
"""

import importlib
import os
import threading
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import counting
from .counting import Cost
from .errors import DimensionMismatch
from .multidouble import COSTS

_lock = threading.Lock()
_pool = None
_pool_size = 0
_threads = max(1, int(os.environ.get("MDNEWTON_THREADS", "1") or 1))
_modules = {}


def set_threads(n):
    """Set the worker count used by all kernels."""
    global _threads
    _threads = max(1, int(n))


def get_threads():
    return _threads


def _executor(n):
    global _pool, _pool_size
    with _lock:
        if _pool is None or _pool_size != n:
            if _pool is not None:
                _pool.shutdown(wait=True)
            _pool = ThreadPoolExecutor(max_workers=n, thread_name_prefix="mdkernel")
            _pool_size = n
        return _pool


def jit(k):
    """Compiled kernel module for ``k`` limbs."""
    mod = _modules.get(k)
    if mod is None:
        mod = _modules[k] = importlib.import_module(f"mdnewton._kernels.j{k}")
    return mod


def launch(kernel, ntasks, *arrays):
    """Run ``kernel(*arrays, lo, hi)`` over ``range(ntasks)`` in chunks."""
    if ntasks <= 0:
        return
    nthreads = min(get_threads(), ntasks)
    if nthreads <= 1:
        kernel(*arrays, 0, ntasks)
        return
    bounds = np.linspace(0, ntasks, nthreads + 1).astype(np.int64)
    pool = _executor(get_threads())
    futures = [pool.submit(kernel, *arrays, int(lo), int(hi))
               for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
    for f in futures:
        f.result()


# cost helpers ---------------------------------------------------------------

def cost(k, op):
    c = COSTS[k]
    if op in ("add", "sub", "mul"):
        return c[op]
    if op == "cadd":
        return c["add"] * 2
    if op == "csub":
        return c["sub"] * 2
    if op == "cmul":
        return c["mul"] * 4 + c["add"] + c["sub"]
    if op == "cabs2":
        return c["mul"] * 2 + c["add"]
    raise KeyError(op)


def _charge(c, times):
    counting.counter().charge(c, int(times))


def _c(a):
    return np.ascontiguousarray(a, dtype=np.float64)


# elementwise -------------------------------------------------------------------

def _real_binary(name, X, Y):
    X, Y = _c(X), _c(Y)
    if X.shape != Y.shape:
        raise DimensionMismatch(f"{X.shape} vs {Y.shape}")
    k = X.shape[0]
    n = X.size // k
    Z = np.empty_like(X)
    launch(getattr(jit(k), f"r{name}_kernel"), n, X.reshape(k, n), Y.reshape(k, n), Z.reshape(k, n))
    _charge(cost(k, name), n)
    return Z


def radd(X, Y):
    return _real_binary("add", X, Y)


def rsub(X, Y):
    return _real_binary("sub", X, Y)


def rmul(X, Y):
    return _real_binary("mul", X, Y)


def _complex_binary(name, X, Y):
    X, Y = _c(X), _c(Y)
    if X.shape != Y.shape:
        raise DimensionMismatch(f"{X.shape} vs {Y.shape}")
    k = X.shape[1]
    n = X.size // (2 * k)
    Z = np.empty_like(X)
    shape = (2, k, n)
    launch(getattr(jit(k), f"c{name}_kernel"), n, X.reshape(shape), Y.reshape(shape), Z.reshape(shape))
    _charge(cost(k, "c" + name), n)
    return Z


def cadd(X, Y):
    return _complex_binary("add", X, Y)


def csub(X, Y):
    return _complex_binary("sub", X, Y)


def cmul(X, Y):
    """Elementwise 4M complex product."""
    return _complex_binary("mul", X, Y)


def cscale(X, S):
    """Complex array times a real array ``S`` of shape ``X.shape[1:]``."""
    X = _c(X)
    return np.stack([rmul(X[0], S), rmul(X[1], S)])


def cabs2(X):
    """Squared moduli, shape ``(K, ...)``."""
    X = _c(X)
    k = X.shape[1]
    n = X.size // (2 * k)
    Z = np.empty(X.shape[1:], dtype=np.float64)
    launch(jit(k).cabs2_kernel, n, X.reshape(2, k, n), Z.reshape(k, n))
    _charge(cost(k, "cabs2"), n)
    return Z


# series and linear algebra ----------------------------------------------------------

def conv(X, Y):
    """Padded truncated products of complex series along the last axis.

    ``X`` and ``Y`` have shape ``(2, K, ..., d)``; every output coefficient
    costs ``d`` complex multiplications, zero operands included.
    """
    X, Y = _c(X), _c(Y)
    if X.shape != Y.shape:
        raise DimensionMismatch(f"{X.shape} vs {Y.shape}")
    k, d = X.shape[1], X.shape[-1]
    batch = X.size // (2 * k * d)
    Z = np.empty_like(X)
    shape = (2, k, batch, d)
    launch(jit(k).conv_kernel, batch * d, X.reshape(shape), Y.reshape(shape), Z.reshape(shape))
    _charge(cost(k, "cmul"), batch * d * d)
    _charge(cost(k, "cadd"), batch * d * (d - 1))
    counting.counter().series_products += batch * d * d
    return Z


def gemv(M, V):
    """Batched complex matrix-vector products, ascending inner index.

    ``M`` is ``(2, K, B, n, m)`` and ``V`` is ``(2, K, B, m)``.
    """
    M, V = _c(M), _c(V)
    _, k, b, n, m = M.shape
    if V.shape != (2, k, b, m):
        raise DimensionMismatch(f"matrix {M.shape} against vector {V.shape}")
    Y = np.empty((2, k, b, n))
    launch(jit(k).gemv_kernel, b * n, M, V, Y)
    _charge(cost(k, "cmul"), b * n * m)
    _charge(cost(k, "cadd"), b * n * (m - 1))
    return Y


def subtract_sequence(B, T):
    """``B - T[0] - T[1] - ...`` in that order; ``T`` is ``(2, K, t, ...)``."""
    B, T = _c(B), _c(T)
    k = B.shape[1]
    n = B.size // (2 * k)
    t = T.shape[2]
    if T.shape[:2] != (2, k) or T.size != 2 * k * t * n:
        raise DimensionMismatch(f"{B.shape} vs {T.shape}")
    Z = np.empty_like(B)
    launch(jit(k).subseq_kernel, n, B.reshape(2, k, n), T.reshape(2, k, t, n), Z.reshape(2, k, n))
    _charge(cost(k, "csub"), n * t)
    return Z


def norm1(X):
    """Sums of ``|re| + |im|`` over the last axis; result ``(K, ...)``."""
    X = _c(X)
    k, n = X.shape[1], X.shape[-1]
    batch = X.size // (2 * k * n)
    Z = np.empty((k,) + X.shape[2:-1])
    launch(jit(k).norm1_kernel, batch, X.reshape(2, k, batch, n), Z.reshape(k, batch))
    _charge(cost(k, "add"), batch * 2 * n)
    return Z


def rsum(X):
    """Sums of a real array over its last axis, ascending."""
    X = _c(X)
    k, n = X.shape[0], X.shape[-1]
    batch = X.size // (k * n)
    Z = np.empty(X.shape[:-1])
    launch(jit(k).rsum_kernel, batch, X.reshape(k, batch, n), Z.reshape(k, batch))
    _charge(cost(k, "add"), batch * (n - 1))
    return Z


def backsub(R, D, Y):
    """Solve the upper triangular system with diagonal reciprocals ``D``."""
    R, D, Y = _c(R), _c(D), _c(Y)
    k, n = R.shape[1], R.shape[2]
    X = np.empty_like(Y)
    jit(k).backsub_kernel(R, D, Y, X)
    _charge(cost(k, "cmul") + cost(k, "csub"), n * (n - 1) // 2)
    _charge(cost(k, "cmul"), n)
    return X


__all__ = ["set_threads", "get_threads", "launch", "cost", "radd", "rsub", "rmul",
           "cadd", "csub", "cmul", "cscale", "cabs2", "conv", "gemv", "subtract_sequence",
           "norm1", "rsum", "backsub", "Cost"]
