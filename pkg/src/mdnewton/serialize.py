"""Exact JSON encoding of multiple-double data.

Every limb is written as a hexadecimal float literal, which round-trips
bit for bit, together with a decimal rendering of the whole value for
human readers.
"""

from fractions import Fraction

import numpy as np

from .multidouble import MultiDouble


def encode_md(limbs):
    md = MultiDouble(limbs)
    return {"hex": md.hex(), "decimal": format(md.to_decimal(), "e")}


def decode_md(obj):
    return [float.fromhex(s) for s in obj["hex"]]


def encode_complex_limbs(arr):
    """``(2, K)`` limbs to ``{"re": ..., "im": ...}``."""
    return {"re": encode_md(arr[0]), "im": encode_md(arr[1])}


def decode_complex_limbs(obj):
    return np.array([decode_md(obj["re"]), decode_md(obj["im"])])


def encode_planar(data):
    """A planar array ``(2, K, *shape)`` as nested lists of encoded entries."""
    data = np.asarray(data)
    shape = data.shape[2:]
    if not shape:
        return encode_complex_limbs(data)
    return [encode_planar(data[:, :, i]) for i in range(shape[0])]


def decode_planar(obj, k):
    if isinstance(obj, dict):
        return decode_complex_limbs(obj)
    parts = [decode_planar(o, k) for o in obj]
    if not parts:
        return np.zeros((2, k, 0))
    return np.stack(parts, axis=2)


def encode_float(x):
    return {"hex": float(x).hex(), "decimal": repr(float(x))}


def exact_decimal(limbs, digits=40):
    return format(MultiDouble(limbs).to_decimal(digits), "e")


def fraction_of(limbs):
    return sum((Fraction(float(x)) for x in limbs), Fraction(0))
