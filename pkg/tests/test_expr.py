import random

import pytest
from hypothesis import given, settings, strategies as st

from arlab.expr import (Add, Const, ExprSyntaxError, Neg, Pow, Var, ast_arity, parse, parse_poly,
                        print_canonical, to_mpoly, to_upoly)
from arlab.upoly import UPoly

from helpers import rand_mpoly, rand_upoly


def test_parse_shapes():
    assert to_upoly("T^2 - 3/2*T + 1").degree == 2
    assert ast_arity(parse("X1*X2^2 + 2")) == 2
    assert parse("-T^2") == Neg(Pow(Var("T"), 2))
    assert parse("1 - T") == Add(Const(1), Neg(Var("T")))


@pytest.mark.parametrize("text,msg,offset", [
    ("T^(-1)", "negative exponent", 2),
    ("T^-1", "negative exponent", 2),
    ("T^1/2", "fractional exponent", 3),
    ("Y + 1", "unknown identifier", 0),
    ("X0", "unknown identifier", 0),
    ("1/0", "zero denominator", 2),
    ("(T+1", "expected ')'", 4),
    ("T + ", "unexpected end of input", 4),
    ("T $ 1", "unexpected character", 2),
])
def test_errors_are_located(text, msg, offset):
    with pytest.raises(ExprSyntaxError) as e:
        to_upoly(text)
    assert msg in e.value.message
    assert e.value.offset == offset


def test_offsets_are_bytes():
    with pytest.raises(ExprSyntaxError) as e:
        parse("T + é")
    assert e.value.offset == 4


def test_conversion_examples():
    assert to_upoly("(T-1)*(T+1)") == UPoly([-1, 0, 1])
    p = to_mpoly("X1 + 0*X2", 2)
    assert p.arity == 2 and p.terms == {(1, 0): 1}
    assert to_upoly("2^3") == UPoly([8])


def test_conversion_errors():
    with pytest.raises(ValueError):
        to_upoly("X1 + T")
    with pytest.raises(ValueError):
        to_mpoly("X3", 2)
    with pytest.raises(ValueError):
        to_mpoly("T")


def test_printing():
    assert print_canonical(to_upoly("T^2-1")) == "T^2 - 1"
    assert print_canonical(UPoly()) == "0"
    assert print_canonical(to_mpoly("X1*X2 + X1^3")) == "X1^3 + X1*X2"
    assert print_canonical(to_upoly("-T + 1/2")) == "-T + 1/2"
    assert print_canonical(to_mpoly("-2/3*X2^2*X1")) == "-2/3*X1*X2^2"


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_round_trip_property(seed):
    rng = random.Random(seed)
    p = rand_upoly(rng, 6, lo=0, rational=True) if seed % 2 else rand_mpoly(rng, 3, 4, rational=True)
    s = print_canonical(p)
    q = to_upoly(s) if isinstance(p, UPoly) else parse_poly(s, p.arity)
    assert q == p and print_canonical(q) == s
