"""How gcd(T^n - 1, (T+1)^m - 1) behaves as n and m grow.

Run: python demos/01_stable_divisor.py
"""

from arlab.expr import to_upoly
from arlab.gcdlab import Family, ar_gcd, coprimality_density, stable_divisor_sweep

f, g = to_upoly("T"), to_upoly("T+1")

# A few individual gcds first.  Most are 1; some are not.
for n, m in [(1, 1), (2, 2), (3, 6), (6, 6), (9, 12)]:
    print(f"gcd(T^{n} - 1, (T+1)^{m} - 1) = {ar_gcd(f, g, n, m)}")

# Sweep the whole 24 x 24 grid and fold the gcds into a running lcm.
rep = stable_divisor_sweep(Family.ar(f, g), 24, B_torsion=24)
print()
print("records:", len(rep.records))
print("stable divisor:", rep.stable_divisor)
print("last change at:", rep.last_change, "(stable over the final half:", rep.stabilized, ")")
print("largest degree seen:", max(r.degree for r in rep.records), "against the bound", rep.records[0].bound)

# The common zeros are the t with t and t + 1 both roots of unity.
print("torsion cross-check:", rep.torsion_check)

# Which exponent pairs see the zero?  They form a monoid.
dens = coprimality_density(Family.ar(f, g), 24)
print()
print("share of coprime pairs on the 24 x 24 box:", dens.density)
for mon in dens.monoids:
    print(f"zero {mon.zero}: {len(mon.members)} members, first few {mon.members[:4]}")
