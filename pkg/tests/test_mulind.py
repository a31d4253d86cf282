from fractions import Fraction

import pytest

from arlab.expr import to_mpoly, to_upoly as U
from arlab.mulind import (MOD_CONSTANTS, PLAIN, UnitFactorizationError, factor_rational, gcd_free_basis,
                          is_mult_independent, normalize_at_origin)


def test_gcd_free_basis_examples():
    b = gcd_free_basis([U("T^2*(T+1)"), U("T*(T+1)^2")])
    assert b.basis == (U("T"), U("T+1")) and b.exponents == ((2, 1), (1, 2)) and b.units == (1, 1)
    b = gcd_free_basis([U("T"), U("T+1")])
    assert b.exponents == ((1, 0), (0, 1))
    b = gcd_free_basis([U("6*(T-1)")])
    assert b.basis == (U("T-1"),) and b.exponents == ((1,),) and b.units == (6,)
    for i, p in enumerate([U("6*(T-1)")]):
        assert b.reassemble(i) == p


def test_gcd_free_basis_is_coprime_and_covers():
    polys = [U("(T^2-1)^2*(T+3)"), U("(T+1)*(T^2+T)"), U("T^3+3*T^2"), U("-2*T")]
    b = gcd_free_basis(polys)
    from arlab.upoly import gcd_monic

    for i, x in enumerate(b.basis):
        for y in b.basis[i + 1:]:
            assert gcd_monic(x, y).is_constant()
    for i, p in enumerate(polys):
        assert b.reassemble(i) == p


def test_zero_rejected():
    with pytest.raises(ValueError):
        gcd_free_basis([U("0")])


def test_certificates():
    v = is_mult_independent([U("T^2"), U("T^3")], PLAIN)
    assert not v and v.relation == (3, -2) and v.constant == 1
    v = is_mult_independent([U("2*T"), U("T")], MOD_CONSTANTS)
    assert not v and v.relation == (1, -1) and v.constant == 2 and v.check([U("2*T"), U("T")])
    assert is_mult_independent([U("2*T"), U("T")], PLAIN)
    assert is_mult_independent([U("T"), U("T+1")], PLAIN)


def test_units_enter_plain_mode():
    # (2T)^2 / (4T^2) = 1
    v = is_mult_independent([U("2*T"), U("4*T^2")], PLAIN)
    assert not v and v.check([U("2*T"), U("4*T^2")])
    # constants alone
    v = is_mult_independent([U("4"), U("8")], PLAIN)
    assert not v and v.relation == (3, -2)
    assert is_mult_independent([U("2"), U("3")], PLAIN)
    v = is_mult_independent([U("-1")], PLAIN)
    assert not v and v.relation == (2,)


def test_multivariate():
    M = lambda s: to_mpoly(s, 2)
    v = is_mult_independent([M("X1*X2"), M("X1*X2")], PLAIN)
    assert not v and v.relation == (1, -1)
    assert is_mult_independent([M("X1"), M("X2+X1^2")], MOD_CONSTANTS)


def test_factor_rational():
    assert factor_rational(Fraction(-12, 35)) == (-1, {2: 2, 3: 1, 5: -1, 7: -1})
    assert factor_rational(Fraction(1)) == (1, {})
    with pytest.raises(UnitFactorizationError):
        factor_rational(Fraction(1000003 * 1000033 * 1000037))


def test_normalize_at_origin():
    assert normalize_at_origin(U("2*T+4")) == U("1/2*T+1")
    assert normalize_at_origin(U("3*T")) == U("3*T")
