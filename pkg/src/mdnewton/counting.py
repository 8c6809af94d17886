"""Hardware double operation counting.

Each thread owns an :class:`OpCounter`; kernels add to the counter of the
thread that launched them, so counting never synchronizes workers.
:func:`merged` folds all per-thread counters together on demand.

Cost constants of the straight-line arithmetic routines are measured by
running those same routines on :class:`CountingFloat` inputs.
"""

import math
import threading
from dataclasses import dataclass, fields
from typing import NamedTuple


class Cost(NamedTuple):
    """Operation mix of one routine, in hardware double operations."""

    add: int = 0
    sub: int = 0
    mul: int = 0
    div: int = 0

    @property
    def total(self):
        return self.add + self.sub + self.mul + self.div

    def __add__(self, other):
        return Cost(*(x + y for x, y in zip(self, other)))

    def __mul__(self, times):
        return Cost(*(x * times for x in self))

    __rmul__ = __mul__


@dataclass
class OpCounter:
    additions: int = 0
    subtractions: int = 0
    multiplications: int = 0
    divisions: int = 0
    # coefficient products performed by convolutions (not hardware ops)
    series_products: int = 0

    @property
    def total(self):
        return self.additions + self.subtractions + self.multiplications + self.divisions

    def charge(self, cost, times=1):
        self.additions += cost.add * times
        self.subtractions += cost.sub * times
        self.multiplications += cost.mul * times
        self.divisions += cost.div * times

    def copy(self):
        return OpCounter(**{f.name: getattr(self, f.name) for f in fields(self)})

    def __add__(self, other):
        return OpCounter(**{f.name: getattr(self, f.name) + getattr(other, f.name)
                            for f in fields(self)})

    def __sub__(self, other):
        return OpCounter(**{f.name: getattr(self, f.name) - getattr(other, f.name)
                            for f in fields(self)})

    def as_dict(self):
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["total"] = self.total
        return d


_local = threading.local()
_registry = []
_registry_lock = threading.Lock()


def counter():
    """The calling thread's counter."""
    c = getattr(_local, "counter", None)
    if c is None:
        c = _local.counter = OpCounter()
        with _registry_lock:
            _registry.append(c)
    return c


def merged():
    """Sum of the counters of every thread that has counted anything."""
    with _registry_lock:
        parts = list(_registry)
    total = OpCounter()
    for c in parts:
        total = total + c
    return total


class count_ops:
    """Context manager exposing the operations counted on this thread inside it.

    >>> with count_ops() as ops:
    ...     pass
    >>> ops.total
    0
    """

    def __enter__(self):
        self._start = counter().copy()
        self._delta = None
        return self

    def __exit__(self, *exc):
        self._delta = counter() - self._start
        return False

    @property
    def delta(self):
        return self._delta if self._delta is not None else counter() - self._start

    def __getattr__(self, name):
        if name.startswith("_"):
            raise AttributeError(name)
        return getattr(self.delta, name)


class CountingFloat:
    """A float that tallies the arithmetic performed on it.

    Negation, absolute value and comparisons are free; every binary ``+ - * /`` is one
    operation of the matching kind.
    """

    __slots__ = ("v", "tally")

    def __init__(self, v, tally):
        self.v = float(v)
        self.tally = tally

    def _wrap(self, v):
        return CountingFloat(v, self.tally)

    @staticmethod
    def _val(x):
        return x.v if isinstance(x, CountingFloat) else float(x)

    def __add__(self, o):
        self.tally[0] += 1
        return self._wrap(self.v + self._val(o))

    def __radd__(self, o):
        self.tally[0] += 1
        return self._wrap(self._val(o) + self.v)

    def __sub__(self, o):
        self.tally[1] += 1
        return self._wrap(self.v - self._val(o))

    def __rsub__(self, o):
        self.tally[1] += 1
        return self._wrap(self._val(o) - self.v)

    def __mul__(self, o):
        self.tally[2] += 1
        return self._wrap(self.v * self._val(o))

    def __rmul__(self, o):
        self.tally[2] += 1
        return self._wrap(self._val(o) * self.v)

    def __truediv__(self, o):
        self.tally[3] += 1
        return self._wrap(self.v / self._val(o))

    def __rtruediv__(self, o):
        self.tally[3] += 1
        return self._wrap(self._val(o) / self.v)

    def __neg__(self):
        return self._wrap(-self.v)

    def __abs__(self):
        return self._wrap(abs(self.v))

    def __float__(self):
        return self.v

    def __eq__(self, o):
        return self.v == self._val(o)

    def __ne__(self, o):
        return self.v != self._val(o)

    def __lt__(self, o):
        return self.v < self._val(o)

    def __le__(self, o):
        return self.v <= self._val(o)

    def __gt__(self, o):
        return self.v > self._val(o)

    def __ge__(self, o):
        return self.v >= self._val(o)

    __hash__ = None


def hw_sqrt(x):
    """Hardware square root; tallied with the divisions."""
    if isinstance(x, CountingFloat):
        x.tally[3] += 1
        return x._wrap(math.sqrt(x.v))
    return math.sqrt(x)


def measure(fn, *args):
    """Run ``fn`` on counting copies of ``args`` (floats or lists of floats).

    Returns the :class:`Cost` of the call.
    """
    tally = [0, 0, 0, 0]

    def wrap(a):
        if isinstance(a, (list, tuple)):
            return [CountingFloat(x, tally) for x in a]
        return CountingFloat(a, tally)

    fn(*(wrap(a) for a in args))
    return Cost(*tally)
