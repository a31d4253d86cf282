import pytest
import sympy

from arlab.expr import to_mpoly, to_upoly as U
from arlab.torsion import (ExceptionalFactorFlag, TorsionScanConfig, admissible_primes, common_torsion_zeros,
                           count_torsion_points, cyclotomic, element_of_order, find_exceptional_factor,
                           is_cyclotomic_product, recheck_point, torsion_window)

from helpers import T, from_sympy_u


def M(s):
    return to_mpoly(s, 2)


def test_cyclotomic():
    assert cyclotomic(1) == U("T-1")
    assert cyclotomic(6) == U("T^2-T+1")
    assert cyclotomic(8) == U("T^4+1")
    for d in range(1, 40):
        assert cyclotomic(d) == from_sympy_u(sympy.cyclotomic_poly(d, T))
    with pytest.raises(ValueError):
        cyclotomic(0)


def test_is_cyclotomic_product():
    assert is_cyclotomic_product(U("T^2+T+1"))
    assert not is_cyclotomic_product(U("T^2-2"))
    assert is_cyclotomic_product(U("(T-1)^2*(T^2+1)"))
    assert is_cyclotomic_product(U("3*T^4+3"))
    with pytest.raises(ValueError):
        is_cyclotomic_product(U("0"))


def test_window():
    assert torsion_window(2) == U("T^2-1")
    assert torsion_window(3) == U("(T^2-1)*(T^2+T+1)")
    assert torsion_window(6).degree == 12


def test_common_zeros():
    assert common_torsion_zeros(U("T"), U("T+1"), 6) == U("T^2+T+1")
    assert common_torsion_zeros(U("T"), U("T+1"), 2) == U("1")
    assert common_torsion_zeros(U("T"), U("2*T"), 12) == U("1")
    # agrees with the single-gcd definition
    psi = torsion_window(8)
    from arlab.upoly import gcd_monic, radical

    f, g = U("T^2"), U("-T")
    assert common_torsion_zeros(f, g, 8) == radical(gcd_monic(psi(f), psi(g)))


def test_points_on_line():
    res = count_torsion_points(M("X1+X2-1"), TorsionScanConfig(max_order=12))
    assert res.count == 2
    assert {(p.order_x, p.index_x, p.order_y, p.index_y) for p in res.points} == {(6, 1, 6, 5), (6, 5, 6, 1)}
    assert res.count <= res.beukers_smyth_bound()
    more = admissible_primes(6, 3, 10**6, 10**5)
    assert all(recheck_point(res.curve, p, more) for p in res.points)


def test_no_points():
    assert count_torsion_points(M("X1*X2-2"), TorsionScanConfig(max_order=12)).count == 0


def test_certify_agrees():
    cfg = TorsionScanConfig(max_order=10, certify=True)
    res = count_torsion_points(M("X1^2+X2+1"), cfg)
    plain = count_torsion_points(M("X1^2+X2+1"), TorsionScanConfig(max_order=10))
    assert res.points == plain.points and res.certified


def test_exceptional():
    assert isinstance(count_torsion_points(M("X1-X2")), ExceptionalFactorFlag)
    H = M("(X1^2+X2^2)*(X1+X2-1)")
    flag = find_exceptional_factor(H)
    assert flag is not None and flag.factor.divides(H) and (flag.i, flag.j) == (2, 2)
    flag = find_exceptional_factor(M("(X1^2-X1*X2+X2^2)*(X1+X2-1)"))
    assert flag is not None and flag.rho_order == 6 and flag.form == "X^i - rho*Y^j"
    flag = find_exceptional_factor(M("(X1*X2+1)*(X2-3)"))
    assert flag is not None and flag.form == "X^i*Y^j - rho" and flag.rho_order == 2
    assert find_exceptional_factor(M("X1+X2-1")) is None


def test_element_of_order():
    p = admissible_primes(12, 1, 1000, 1000)[0]
    w = element_of_order(12, p)
    assert pow(w, 12, p) == 1 and all(pow(w, k, p) != 1 for k in range(1, 12))
