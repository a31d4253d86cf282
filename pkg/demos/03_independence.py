"""Multiplicative (in)dependence, with certificates that re-multiply exactly.

Run: python demos/03_independence.py
"""

from arlab.expr import parse_poly
from arlab.mulind import MOD_CONSTANTS, PLAIN, gcd_free_basis, is_mult_independent

cases = [
    (["T^2", "T^3"], PLAIN),
    (["2*T", "T"], MOD_CONSTANTS),
    (["2*T", "T"], PLAIN),
    (["T^2+T", "T", "T+1"], PLAIN),
    (["T", "T+1"], PLAIN),
]
for texts, mode in cases:
    polys = [parse_poly(t) for t in texts]
    v = is_mult_independent(polys, mode)
    if v:
        print(f"{texts} ({mode}): independent")
    else:
        print(f"{texts} ({mode}): exponents {v.relation} give the constant {v.constant};"
              f" check {v.check(polys)}")

# The engine works over a coprime basis rather than irreducible factors.
b = gcd_free_basis([parse_poly("T^2*(T+1)"), parse_poly("T*(T+1)^2")])
print()
print("basis:", [str(p) for p in b.basis], "exponents:", b.exponents)
