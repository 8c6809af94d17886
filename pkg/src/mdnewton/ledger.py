"""Per-kernel-class accounting of operation counts and elapsed time."""

import time
from contextlib import contextmanager, nullcontext
from dataclasses import dataclass, field

from . import counting
from .counting import OpCounter

CLASSES = ("convolution", "qr", "qhb", "bs", "updates", "residuals")


@dataclass
class KernelStat:
    invocations: int = 0
    seconds: float = 0.0
    ops: OpCounter = field(default_factory=OpCounter)


class KernelLedger:
    """Accumulates work under the six kernel classes.

    Sections may not nest, so every counted operation lands in exactly one
    class.
    """

    def __init__(self):
        self.stats = {c: KernelStat() for c in CLASSES}
        self._open = None

    @contextmanager
    def kernel(self, cls):
        if cls not in self.stats:
            raise ValueError(f"unknown kernel class {cls!r}")
        if self._open is not None:
            raise RuntimeError(f"kernel section {cls!r} opened inside {self._open!r}")
        self._open = cls
        start = counting.counter().copy()
        t0 = time.perf_counter()
        try:
            yield
        finally:
            stat = self.stats[cls]
            stat.seconds += time.perf_counter() - t0
            stat.ops = stat.ops + (counting.counter() - start)
            stat.invocations += 1
            self._open = None

    def invocations(self, cls):
        return self.stats[cls].invocations

    def ops(self, cls):
        return self.stats[cls].ops.total

    @property
    def total_ops(self):
        return sum(s.ops.total for s in self.stats.values())

    @property
    def total_seconds(self):
        return sum(s.seconds for s in self.stats.values())

    def report(self, wall_seconds=None):
        return ledger_report(self, wall_seconds)


def section(ledger, cls):
    """``ledger.kernel(cls)`` or a no-op when there is no ledger."""
    return nullcontext() if ledger is None else ledger.kernel(cls)


def ledger_report(ledger: KernelLedger, wall_seconds=None) -> dict:
    total_t = ledger.total_seconds
    classes = {}
    for name, s in ledger.stats.items():
        classes[name] = {
            "invocations": s.invocations,
            "seconds": s.seconds,
            "percent": 100.0 * s.seconds / total_t if total_t > 0 else 0.0,
            "ops": s.ops.as_dict(),
            "gflops": s.ops.total / s.seconds / 1e9 if s.seconds > 0 else 0.0,
        }
    out = {
        "classes": classes,
        "total_kernel_seconds": total_t,
        "total_ops": ledger.total_ops,
        "kernel_gflops": ledger.total_ops / total_t / 1e9 if total_t > 0 else 0.0,
    }
    if wall_seconds is not None:
        out["wall_seconds"] = wall_seconds
        out["wall_gflops"] = ledger.total_ops / wall_seconds / 1e9 if wall_seconds > 0 else 0.0
    return out
