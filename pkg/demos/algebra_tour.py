"""
Tour of the eight-dimensional commutative algebra behind the renderers
======================================================================

Units multiply by tag composition, numbers split into two independent
components, and powers become cheap once they do.
"""

import numpy as np

from multibrot import Tricomplex, unit_product

# the three imaginary generators and everything they generate
names = ("1", "i1", "i2", "i3", "i4", "j1", "j2", "j3")
print("unit products (sign, unit):")
for a in ("i1", "i2", "i3", "j3"):
    row = []
    for b in ("i1", "i2", "i3", "j3"):
        sign, tag = unit_product(a, b)
        row.append(f"{'+' if sign > 0 else '-'}{tag}")
    print(f"  {a:>2}: " + "  ".join(f"{s:>4}" for s in row))

# i-type units square to -1, j-type to +1
print("\nsquares:", {u: unit_product(u, u)[0] for u in names[1:]})

# a number is eight real coefficients; multiplication is commutative
rng = np.random.default_rng(7)
a = Tricomplex.from_coeffs(rng.uniform(-2, 2, 8))
b = Tricomplex.from_coeffs(rng.uniform(-2, 2, 8))
print("\na * b == b * a:", a * b == b * a)

# the idempotent split turns * into two independent 2-component products
pa, pb = a.idempotent(), b.idempotent()
direct = a * b
routed = Tricomplex.from_idempotent(pa.plus * pb.plus, pa.minus * pb.minus)
worst = max(abs(x - y) for x, y in zip(direct.coeffs, routed.coeffs))
print("direct vs split multiplication, worst coefficient gap:", worst)

# which is why high powers stay cheap and accurate
p17 = a ** 17
check = a
for _ in range(16):
    check = check * a
gap = max(abs(x - y) for x, y in zip(p17.coeffs, check.coeffs))
print("a**17 vs 16 multiplications, relative gap:", gap / p17.norm())

# the split also carries the norm
pair = a.idempotent()
split_norm = np.sqrt((pair.plus.norm() ** 2 + pair.minus.norm() ** 2) / 2)
print("norm directly:", a.norm())
print("norm via split:", float(split_norm))
