import random

import pytest
import sympy

from arlab.expr import to_mpoly
from arlab.mpoly import ArityError, mgcd, resultant_in, specialize
from arlab.expr import to_upoly as U

from helpers import from_sympy_m, rand_mpoly, to_sympy


def M(s, arity=2):
    return to_mpoly(s, arity)


def test_ring_examples():
    assert M("X1") * M("X2") == M("X1*X2")
    assert M("X1+X2") ** 2 == M("X1^2+2*X1*X2+X2^2")
    assert M("X1*X2").substitute(2, M("X2+X1^2")) == M("X1*X2+X1^3")


def test_arity_mismatch():
    with pytest.raises(ArityError):
        M("X1", 2) + M("X1", 3)


def test_specialize_examples():
    assert specialize(M("X1*X2"), [3]) == U("3*T")
    assert specialize(M("X2+X1^2"), [1]) == U("T^2+1")
    assert specialize(M("X1+X2-X2"), [7]) == U("T")
    with pytest.raises(ArityError):
        specialize(M("X1"), [1, 2])


@pytest.mark.parametrize("a,b,g", [("X1*X2", "X1^2*X2", "X1*X2"),
                                   ("(X1+X2)^2*(X1-1)", "(X1+X2)*(X2+3)", "X1+X2"),
                                   ("X1^2-1", "X2^2-1", "1")])
def test_mgcd_examples(a, b, g):
    assert mgcd(M(a), M(b)) == M(g)


def test_mgcd_arity_limit():
    with pytest.raises(ArityError, match="desk-scale limit"):
        mgcd(M("X1", 4), M("X2", 4))


def test_mgcd_against_sympy():
    rng = random.Random(5)
    for arity in (2, 3):
        for _ in range(12):
            c = rand_mpoly(rng, arity, 2, terms=3)
            a = rand_mpoly(rng, arity, 2, terms=3) * c
            b = rand_mpoly(rng, arity, 2, terms=3) * c
            if a.is_zero or b.is_zero:
                continue
            g = mgcd(a, b)
            ref = sympy.gcd(to_sympy(a), to_sympy(b))
            ref = from_sympy_m(ref.as_expr(), arity)
            assert g == ref.normalized() if not ref.is_zero else g.is_zero
            assert g.divides(a) and g.divides(b)


def test_divrem_identity():
    rng = random.Random(8)
    for _ in range(40):
        a, b = rand_mpoly(rng, 2, 4), rand_mpoly(rng, 2, 2)
        if b.is_zero:
            continue
        q, r = a.divrem(b)
        assert q * b + r == a


def test_resultant_in_eliminates():
    a, b = M("X1^2+X2^2-1"), M("X1-X2")
    r = resultant_in(a, b, 2)
    assert r.degree_in(2) in (None, 0)
    assert r.normalized() == M("X1^2-1/2")


def test_eval_mod():
    assert M("X1*X2+1/2").eval_mod((2, 3), 7) == (6 + 4) % 7
