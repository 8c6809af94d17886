"""A short tour of the multiple-double types and their operation counts."""

from fractions import Fraction

from mdnewton import DD, OD, QD, MultiDouble, count_ops, md_mul, md_sqrt

for p in (DD, QD, OD):
    two = MultiDouble.from_value(2, p)
    with count_ops() as ops:
        md_mul(two, two)
    root = md_sqrt(two)
    print(f"{p.name}: sqrt(2) = {root.to_decimal(16 * p.limbs)}")
    print(f"    one multiply: {ops.additions} add, {ops.subtractions} sub, "
          f"{ops.multiplications} mul")

third = MultiDouble.from_value(Fraction(1, 3), QD)
print("1/3 in quad double, limb by limb:", third.hex())
