import mpmath
import pytest

from arlab import bounds as B


def test_values():
    assert B.univariate_ar(1, 1) == 44
    assert B.genar1(1, 1, 1, 1) == 44
    assert B.multivar(1, 1, 1, 2) == 704 ** 4
    assert B.gamma(1, 2) == 6
    assert B.primorial(6) == 30 and B.primorial(1) == 1
    assert B.beukers_smyth(1) == 11


def test_reports():
    r = B.bounds("common-zeros-degree", ell=1, D=2)
    assert r.value == 120 and r.exact
    assert r.intermediates["proof_degree_bound"] == 2 * 4 * 30
    n = B.bounds("common-zeros-count", ell=1, D=2)
    assert not n.exact and n.value == 213
    assert n.to_dict()["rounding"] == "upper rounding"
    assert B.bounds("abc", degrees=[1, 3]).value == 4
    with pytest.raises(ValueError):
        B.bounds("univar", df=0, dg=1)
    with pytest.raises(ValueError):
        B.bounds("nope")


@pytest.mark.parametrize("x", [1, 2, 6, 10, 25, 60])
def test_gr_against_mpmath(x):
    mpmath.mp.dps = 80
    expected = int(mpmath.ceil((mpmath.mpf("0.792") * x / mpmath.log(x + 1)) ** x))
    assert B.gr_count_ceiling(x) == expected


def test_monotone():
    for a in range(1, 4):
        for b in range(1, 4):
            assert B.univariate_ar(a, b) <= B.univariate_ar(a + 1, b)
            assert B.multivar(1, 1, a, b) <= B.multivar(1, 1, a + 1, b)
            assert B.multivar(1, 1, a, b) <= B.multivar(1, 1, a, b + 1)
            assert B.gamma(a, b) <= B.gamma(a, b + 1)
    vals = [B.gr_count_ceiling(x) for x in range(1, 30)]
    assert vals[5:] == sorted(vals[5:])
