"""The closed-form bounds, and how common torsion zeros are covered by
monomial relations.

Run: python demos/05_bounds_and_cosets.py
"""

from arlab.bounds import bounds
from arlab.expr import to_mpoly, to_upoly
from arlab.reduce import common_torsion_variety_check

for tag, params in [("univar", dict(df=1, dg=1)), ("genar1", dict(dh1=1, dh2=1, df=1, dg=1)),
                    ("multivar", dict(dh1=1, dh2=1, D=1, ell=2)), ("gamma", dict(ell=1, D=2)),
                    ("common-zeros-degree", dict(ell=1, D=2)), ("common-zeros-count", dict(ell=1, D=2))]:
    r = bounds(tag, **params)
    note = "" if r.exact else " (rounded up)"
    print(f"{tag:22s} {params}: {r.value}{note}")

# t and t + 1 are both roots of unity only at the primitive cube roots.
rep = common_torsion_variety_check([to_upoly("T"), to_upoly("T+1")], 6, 4)
print()
print("pieces:", [(p.orders, p.point_count) for p in rep.pieces])
print("relations covering every piece:", rep.covering_relations)

rep = common_torsion_variety_check([to_mpoly("X1", 2), to_mpoly("X2", 2), to_mpoly("X1+X2", 2)], 6, 3)
print()
print("x, y, x + y all roots of unity:", sum(p.point_count for p in rep.pieces), "points")
print("covering relations:", rep.covering_relations)
