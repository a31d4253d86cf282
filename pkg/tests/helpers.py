"""Shared generators and sympy bridges for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy

from arlab.mpoly import MPoly
from arlab.upoly import UPoly, gcd_monic

T = sympy.Symbol("T")
XS = sympy.symbols("X1:4")


def to_sympy(p):
    if isinstance(p, UPoly):
        return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0], T)
    gens = XS[: p.arity]
    expr = sum((sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[g ** k for g, k in zip(gens, e)])
                for e, c in p.items()), sympy.Integer(0))
    return sympy.Poly(expr, *gens)


def from_sympy_u(P) -> UPoly:
    return UPoly([Fraction(int(c.p), int(c.q)) for c in reversed(sympy.Poly(P, T).all_coeffs())])


def from_sympy_m(P, arity) -> MPoly:
    P = sympy.Poly(P, *XS[:arity])
    return MPoly({e: Fraction(int(c.p), int(c.q)) for e, c in P.terms()}, arity)


def rand_upoly(rng: random.Random, max_deg: int, lo: int = 1, coeff: int = 5, rational: bool = False) -> UPoly:
    deg = rng.randint(lo, max_deg)
    cs = []
    for _ in range(deg + 1):
        c = Fraction(rng.randint(-coeff, coeff))
        if rational and rng.random() < 0.3:
            c /= rng.randint(1, 6)
        cs.append(c)
    if deg > 0 and not cs[-1]:
        cs[-1] = Fraction(rng.choice([-2, -1, 1, 2]))
    return UPoly(cs)


def rand_mpoly(rng: random.Random, arity: int, max_deg: int, terms: int = 5, coeff: int = 5,
               rational: bool = False) -> MPoly:
    d = {}
    for _ in range(rng.randint(1, terms)):
        e = [0] * arity
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(arity)] += 1
        c = Fraction(rng.randint(-coeff, coeff))
        if rational and rng.random() < 0.3:
            c /= rng.randint(1, 6)
        d[tuple(e)] = d.get(tuple(e), 0) + c
    return MPoly(d, arity)


def mason_triples(seed: int, count: int, max_deg: int = 8):
    """Random coprime A, C with B = C - A, not all constant."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        A = rand_upoly(rng, max_deg, lo=0)
        C = rand_upoly(rng, max_deg, lo=0)
        if A.is_zero or C.is_zero:
            continue
        B = C - A
        if B.is_zero or (A.is_constant() and C.is_constant()):
            continue
        if not gcd_monic(A, C).is_constant():
            continue
        out.append((A, B, C))
    return out


def abc_instances(seed: int, count: int, max_deg: int = 4, max_exp: int = 12):
    """(f, g, n, m) with gcd(f, g) = 1 and f^n != g^m, by rejection."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        f = rand_upoly(rng, max_deg)
        g = rand_upoly(rng, max_deg)
        n, m = rng.randint(1, max_exp), rng.randint(1, max_exp)
        if not gcd_monic(f, g).is_constant():
            continue
        if f ** n == g ** m:
            continue
        out.append((f, g, n, m))
    return out


def annihilator_pairs(seed: int, count: int, max_deg: int = 3):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a, b = rand_upoly(rng, max_deg), rand_upoly(rng, max_deg)
        out.append((MPoly.from_upoly(a, 1), MPoly.from_upoly(b, 1)))
    return out


def roundtrip_polys(seed: int, count: int):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        if i % 2 == 0:
            out.append(rand_upoly(rng, 8, lo=0, rational=True))
        else:
            out.append(rand_mpoly(rng, rng.randint(1, 3), 5, terms=6, rational=True))
    return out
