"""From several variables to one.

The shift X2 -> X2 + X1^d keeps total degree visible after X2 is set to a
number, so independence survives specialization.

Run: python demos/04_several_variables.py
"""

from arlab.expr import to_mpoly, to_upoly
from arlab.reduce import annihilator, find_independent_specialization, kronecker_forward, multivAR_check


def M(s):
    return to_mpoly(s, 2)


F, G = M("X1"), M("X2")
print("shifted:", kronecker_forward(F, 2), "and", kronecker_forward(G, 2))
sp = find_independent_specialization([kronecker_forward(F, 2), kronecker_forward(G, 2)])
print("first good specialization:", [str(a) for a in sp.alphas], "->", [str(p) for p in sp.specialized])

# Without the shift X2 becomes a constant and no specialization works.
try:
    find_independent_specialization([F, G], budget=20)
except RuntimeError as e:
    print("unshifted:", e)

r = multivAR_check(to_upoly("T-1"), to_upoly("T-1"), M("X1*X2"), M("X1*X2+1"), 3, 6)
print()
print("direct gcd:", r.gcd)
print("degree chain:", r.to_dict()["chain"])

# Two polynomials in one variable always satisfy a polynomial relation.
R = annihilator([to_mpoly("X1^2 - 1", 1), to_mpoly("X1^3", 1)], 3)
print()
print("relation between T^2 - 1 and T^3:", R.poly, "(X_i stands for the i-th input)")
