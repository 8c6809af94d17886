# Generated by mdnewton._codegen -- do not edit.
"""Straight-line 2-limb arithmetic."""

LIMBS = 2
SPLITTER = 134217729.0

def add(a0, a1, b0, b1):
    t1 = a0 + b0
    t2 = t1 - a0
    t3 = t1 - t2
    t4 = a0 - t3
    t5 = b0 - t2
    t6 = t4 + t5
    t7 = a1 + b1
    t8 = t7 - a1
    t9 = t7 - t8
    t10 = a1 - t9
    t11 = b1 - t8
    t12 = t10 + t11
    t13 = t6 + t7
    t14 = t1 + t13
    t15 = t14 - t1
    t16 = t13 - t15
    t17 = t16 + t12
    t18 = t14 + t17
    t19 = t18 - t14
    t20 = t17 - t19
    return (t18, t20,)


def sub(a0, a1, b0, b1):
    t1 = -b0
    t2 = -b1
    t3 = a0 + t1
    t4 = t3 - a0
    t5 = t3 - t4
    t6 = a0 - t5
    t7 = t1 - t4
    t8 = t6 + t7
    t9 = a1 + t2
    t10 = t9 - a1
    t11 = t9 - t10
    t12 = a1 - t11
    t13 = t2 - t10
    t14 = t12 + t13
    t15 = t8 + t9
    t16 = t3 + t15
    t17 = t16 - t3
    t18 = t15 - t17
    t19 = t18 + t14
    t20 = t16 + t19
    t21 = t20 - t16
    t22 = t19 - t21
    return (t20, t22,)


def mul(a0, a1, b0, b1):
    t1 = SPLITTER * a0
    t2 = t1 - a0
    t3 = t1 - t2
    t4 = a0 - t3
    t5 = SPLITTER * b0
    t6 = t5 - b0
    t7 = t5 - t6
    t8 = b0 - t7
    t9 = a0 * b0
    t10 = t3 * t7
    t11 = t10 - t9
    t12 = t3 * t8
    t13 = t11 + t12
    t14 = t4 * t7
    t15 = t13 + t14
    t16 = t4 * t8
    t17 = t15 + t16
    t18 = a0 * b1
    t19 = a1 * b0
    t20 = t18 + t19
    t21 = t17 + t20
    t22 = t9 + t21
    t23 = t22 - t9
    t24 = t21 - t23
    return (t22, t24,)
