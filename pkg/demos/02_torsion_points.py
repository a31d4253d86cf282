"""Root-of-unity points on plane curves.

The curve traced by (f(t), g(t)) is cut out by a resultant; roots of unity
on it are found by scanning orders in prime fields.

Run: python demos/02_torsion_points.py
"""

from arlab.expr import to_mpoly, to_upoly
from arlab.torsion import TorsionScanConfig, count_torsion_points
from arlab.upoly import resultant

H = resultant(to_upoly("T"), to_upoly("T+1"))
print("curve of (t, t+1):", H, "= 0")

res = count_torsion_points(H, TorsionScanConfig(max_order=12, certify=True))
print(f"{res.count} points with orders <= 12 (primes {res.primes_used})")
for p in res.points:
    print(f"  x = zeta_{p.order_x}^{p.index_x}, y = zeta_{p.order_y}^{p.index_y}")
print("a curve of degree 1 has at most", res.beukers_smyth_bound(), "such points")

# Binomial factors carry infinitely many points and are flagged instead.
print()
print(count_torsion_points(to_mpoly("X1^2 - X1*X2 + X2^2", 2)))
print(count_torsion_points(to_mpoly("X1*X2 - 2", 2), TorsionScanConfig(max_order=12)).count, "points on XY = 2")
