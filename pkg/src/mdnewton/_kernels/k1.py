# Generated by mdnewton._codegen -- do not edit.
"""Straight-line 1-limb arithmetic."""

LIMBS = 1
SPLITTER = 134217729.0

def add(a0, b0):
    t1 = a0 + b0
    return (t1,)


def sub(a0, b0):
    t1 = -b0
    t2 = a0 + t1
    return (t2,)


def mul(a0, b0):
    t1 = a0 * b0
    return (t1,)
