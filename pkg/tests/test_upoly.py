import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from arlab.expr import to_upoly as U
from arlab.upoly import (UPoly, compose, gcd_monic, is_squarefree, lcm_monic, radical, resultant,
                         squarefree_decompose, xgcd)
from arlab.expr import to_mpoly

from helpers import T, from_sympy_u, rand_upoly, to_sympy

small = st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=0, max_size=7).map(UPoly)


def test_ring_examples():
    assert U("T-1") * U("T+1") == U("T^2-1")
    assert compose(U("T-1"), U("T^3")) == U("T^3-1")
    assert U("T^3-1").divrem(U("T-1")) == (U("T^2+T+1"), UPoly())
    assert U("T^3+2*T").derivative() == U("3*T^2+2")


def test_zero_has_no_degree():
    assert UPoly().degree is None and UPoly([0, 0]).is_zero


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        U("T").divrem(UPoly())


@pytest.mark.parametrize("a,b,g", [("T^2-1", "T^3-1", "T-1"), ("T^2+T+1", "T^2-1", "1"),
                                   ("T^2-2*T+1", "T-1", "T-1"), ("0", "0", "0"), ("0", "2*T+4", "T+2")])
def test_gcd_examples(a, b, g):
    assert gcd_monic(U(a), U(b)) == U(g)


@settings(max_examples=150, deadline=None)
@given(small, small)
def test_divrem_identity(a, b):
    if b.is_zero:
        return
    q, r = a.divrem(b)
    assert q * b + r == a
    assert r.is_zero or r.degree < b.degree


@settings(max_examples=150, deadline=None)
@given(small, small)
def test_gcd_matches_sympy(a, b):
    g = gcd_monic(a, b)
    expected = sympy.gcd(to_sympy(a), to_sympy(b))
    if not expected.is_zero:
        expected = expected.monic()
    assert g == from_sympy_u(expected.as_expr())


@settings(max_examples=80, deadline=None)
@given(small, small)
def test_xgcd_bezout(a, b):
    g, s, t = xgcd(a, b)
    assert s * a + t * b == g
    assert g == gcd_monic(a, b)


def test_lcm():
    assert lcm_monic(U("T^2-1"), U("T^2+2*T+1")) == U("(T-1)*(T+1)^2")


@pytest.mark.parametrize("p,parts", [("(T-1)^2*(T+2)", [("T-1", 2), ("T+2", 1)]),
                                     ("T^2+T+1", [("T^2+T+1", 1)]), ("(T-1)^3", [("T-1", 3)])])
def test_squarefree_examples(p, parts):
    assert squarefree_decompose(U(p)) == [(U(a), k) for a, k in parts]


def test_squarefree_zero():
    with pytest.raises(ValueError):
        squarefree_decompose(UPoly())
    with pytest.raises(ValueError):
        radical(UPoly())


def test_radical_examples():
    assert radical(U("(T-1)^2*(T+1)")) == U("(T-1)*(T+1)")
    assert radical(U("T^5")) == U("T")
    assert radical(U("3*T^2-3")) == U("T^2-1")
    assert is_squarefree(U("T^2-T-1")) and not is_squarefree(U("T^2"))


def test_squarefree_against_sympy():
    rng = random.Random(3)
    for _ in range(60):
        p = rand_upoly(rng, 3) ** rng.randint(1, 3) * rand_upoly(rng, 2)
        mine = {(str(a), k) for a, k in squarefree_decompose(p)}
        _, fs = sympy.sqf_list(to_sympy(p).as_expr(), T)
        theirs = {}
        for f, k in fs:
            theirs.setdefault(k, sympy.Integer(1))
            theirs[k] *= f
        exp = {(str(from_sympy_u(f).monic()), k) for k, f in theirs.items() if sympy.degree(f, T) > 0}
        assert mine == exp


def test_resultant_examples():
    M = lambda s: to_mpoly(s, 2)
    assert resultant(U("T"), U("T+1")) == M("X1 - X2 + 1")
    assert resultant(U("T^2"), U("T^3")) == M("X2^2 - X1^3")
    assert resultant(U("T"), U("T")) == M("X1 - X2")
    with pytest.raises(ValueError):
        resultant(U("3"), U("T"))


def test_resultant_vanishes_on_curve():
    rng = random.Random(11)
    x1, x2 = sympy.symbols("X1 X2")
    for _ in range(15):
        f, g = rand_upoly(rng, 3), rand_upoly(rng, 3)
        H = resultant(f, g)
        assert H.compose([to_mpoly_u(f), to_mpoly_u(g)]).is_zero
        ref = sympy.resultant(to_sympy(f).as_expr() - x1, to_sympy(g).as_expr() - x2, T)
        mine = to_sympy(H).as_expr()
        assert sympy.expand(mine - ref) == 0 or sympy.expand(mine + ref) == 0


def to_mpoly_u(p):
    from arlab.mpoly import MPoly

    return MPoly.from_upoly(p, 1)


def test_eval_and_mod():
    p = U("T^2 - 1/2")
    assert p(Fraction(1, 2)) == Fraction(-1, 4)
    assert p.eval_mod(3, 7) == (9 * 1 - 4) % 7  # 1/2 = 4 mod 7
