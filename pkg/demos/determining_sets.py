"""Layers of the standard orange and the lifted determining set.

The lattice of the standard model splits into scaled copies of the star's
lattices, shifted along the joined coordinate simplex. Choosing a minimal
determining set on each scaled copy and lifting through the same shifts
produces a determining set for the whole spline space; its size is exactly
the dimension.

Run: python3 demos/determining_sets.py
"""

from orangesplines import (
    compute_mds,
    layer_decomposition,
    lift_mds,
    spline_dim,
    standard_form,
)
from orangesplines.catalog import get

cx = get("two-tetrahedron").complex
sf = standard_form(cx)
standard = sf.standard
star = sf.projected.complex
r, d = 0, 3

print(f"standard model of two-tetrahedron, r={r}, d={d}\n")

decomposition = layer_decomposition(standard, d)
print(f"lattice of {decomposition.total} points in {len(decomposition.layers)} layers:")
for layer in decomposition.layers:
    print(
        f"  level {layer.level}: {len(layer.base_points)} star points "
        f"(scale {layer.factor}) x {len(layer.shifts)} shifts = {len(layer.points)}"
    )

print("\nminimal determining sets on the star, degree by degree:")
for j in range(d + 1):
    ds = compute_mds(star, r, j)
    print(f"  degree {j}: {len(ds.points)} points (dimension {spline_dim(star, r, j)})")

lifted = lift_mds(standard, r, d)
print(f"\nlifted set: {lifted.total} points, closed-form dimension {lifted.formula_value}")
for level, size, mult in lifted.per_level:
    print(f"  level {level}: {size} x {mult}")
print("\nfirst few lifted points:")
for p in lifted.points[:6]:
    coords = ", ".join(str(c) for c in p.coordinates)
    print(f"  level {p.level} face {p.face}: ({coords})")
