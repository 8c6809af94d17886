"""Estimate the nearest singularity of 1/(1 - t/z0) from its Taylor coefficients."""

from fractions import Fraction

import numpy as np

from mdnewton import QD, ComplexMD, Series, fabry_ratio

z0 = ComplexMD.from_value((Fraction(3, 10), Fraction(2, 5)), QD)
step = ComplexMD.one(QD) / z0
coeffs = [ComplexMD.one(QD)]
for _ in range(11):
    coeffs.append(coeffs[-1] * step)
z, radius = fabry_ratio(Series(np.stack([c.limbs() for c in coeffs], axis=-1)))
print("estimated pole:", z)
print("radius:", radius.to_decimal(40))
