"""Closed-form degree and count bounds, evaluated exactly.

Every bound is an exact integer except the Granville-Rudnick count
``(0.792 x / log(x + 1))^x``, which is evaluated in decimal arithmetic with
generous precision and rounded up.
"""

from __future__ import annotations

import decimal
import math
import warnings
from dataclasses import dataclass, field
from math import comb

from sympy import primerange

GAMMA_WARN = 10**6


def primorial(k: int) -> int:
    """Product of the primes p <= k."""
    acc = 1
    for p in primerange(2, k + 1):
        acc *= p
    return acc


def beukers_smyth(deg_h: int) -> int:
    """Root-of-unity points on a curve of degree deg_h without binomial factors."""
    return 11 * deg_h ** 2


def univariate_ar(df: int, dg: int) -> int:
    """deg gcd(f^n - 1, g^m - 1) bound for independent f, g."""
    return (11 * (df + dg) ** 2) ** min(df, dg)


def genar1(dh1: int, dh2: int, df: int, dg: int) -> int:
    """deg gcd(h1(f^n), h2(g^m)) bound."""
    return dh1 * dh2 * univariate_ar(df, dg)


def multivar(dh1: int, dh2: int, D: int, ell: int) -> int:
    """deg gcd(h1(F^n), h2(G^m)) bound in ell variables with partial degrees <= D."""
    return dh1 * dh2 * (44 * (D + 1) ** (2 * ell)) ** ((D + 1) ** ell)


def abc_multiplicity(degrees) -> int:
    return sum(degrees)


def gamma(ell: int, D: int) -> int:
    """Number of monomials of degree <= D^ell in ell + 1 variables."""
    return comb(ell + 1 + D ** ell, ell + 1)


def gr_count_ceiling(x: int) -> int:
    """ceil((0.792 x / ln(x + 1))^x)."""
    if x < 1:
        raise ValueError("term count must be positive")
    # digits of the result, plus guard digits
    est = x * max(math.log10(0.792 * x / math.log(x + 1)), 0.0)
    if est > 1e5:
        warnings.warn(f"count bound has about {int(est)} digits")
    ctx = decimal.Context(prec=int(est) + 60, rounding=decimal.ROUND_CEILING)
    base = ctx.divide(ctx.multiply(decimal.Decimal("0.792"), x), ctx.ln(decimal.Decimal(x + 1)))
    val = ctx.power(base, x)
    return int(val.to_integral_value(rounding=decimal.ROUND_CEILING))


@dataclass
class BoundReport:
    theorem: str
    inputs: dict
    value: int
    exact: bool = True
    intermediates: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "inputs": self.inputs,
            "value": str(self.value),
            "exact": self.exact,
            "rounding": "exact" if self.exact else "upper rounding",
            "intermediates": {k: (str(v) if isinstance(v, int) else v) for k, v in self.intermediates.items()},
            "warnings": self.warnings,
        }


THEOREMS = ("bs", "univar", "genar1", "multivar", "gamma", "common-zeros-count",
            "common-zeros-degree", "granville-rudnick", "abc")


def _positive(params: dict, *names):
    for n in names:
        v = params.get(n)
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"parameter {n} must be a positive integer")


def bounds(theorem: str, **params) -> BoundReport:
    """Evaluate one of the named bounds; see ``THEOREMS``."""
    notes: list[str] = []
    if theorem == "bs":
        _positive(params, "deg")
        return BoundReport(theorem, params, beukers_smyth(params["deg"]))
    if theorem == "univar":
        _positive(params, "df", "dg")
        return BoundReport(theorem, params, univariate_ar(params["df"], params["dg"]),
                           intermediates={"distinct_zeros": 11 * (params["df"] + params["dg"]) ** 2,
                                          "multiplicity_cap": min(params["df"], params["dg"])})
    if theorem == "genar1":
        _positive(params, "dh1", "dh2", "df", "dg")
        p = params
        return BoundReport(theorem, p, genar1(p["dh1"], p["dh2"], p["df"], p["dg"]),
                           intermediates={"univar": univariate_ar(p["df"], p["dg"])})
    if theorem == "multivar":
        _positive(params, "dh1", "dh2", "D", "ell")
        p = params
        d = p["D"] + 1
        return BoundReport(theorem, p, multivar(p["dh1"], p["dh2"], p["D"], p["ell"]),
                           intermediates={"base": 44 * d ** (2 * p["ell"]), "exponent": d ** p["ell"],
                                          "specialized_degree_cap": p["D"] * (d ** p["ell"] - 1) // (d - 1)})
    if theorem == "abc":
        degs = params.get("degrees")
        if not degs or any(not isinstance(x, int) or x < 0 for x in degs):
            raise ValueError("degrees must be a nonempty list of nonnegative integers")
        return BoundReport(theorem, {"degrees": list(degs)}, abc_multiplicity(degs))
    if theorem in ("gamma", "common-zeros-count", "common-zeros-degree"):
        _positive(params, "ell", "D")
        ell, D = params["ell"], params["D"]
        g = gamma(ell, D)
        if g > GAMMA_WARN:
            notes.append(f"gamma = {g} is very large; primorial evaluation is slow")
        if theorem == "gamma":
            return BoundReport(theorem, params, g, warnings=notes)
        if theorem == "common-zeros-count":
            return BoundReport(theorem, params, gr_count_ceiling(g), exact=False,
                               intermediates={"gamma": g}, warnings=notes)
        pr = primorial(g)
        return BoundReport(theorem, params, (ell + 1) * D ** ell * pr,
                           intermediates={"gamma": g, "primorial": pr,
                                          "proof_degree_bound": (ell + 1) * D ** (ell + 1) * pr,
                                          "log_primorial": math.log(pr) if pr < 10**300 else None,
                                          "pnt_comparison_exp_gamma": math.exp(g) if g < 700 else None},
                           warnings=notes)
    if theorem == "granville-rudnick":
        _positive(params, "s", "D")
        s, D = params["s"], params["D"]
        return BoundReport(theorem, params, gr_count_ceiling(s), exact=False,
                           intermediates={"entry_bound": D * primorial(s)})
    raise ValueError(f"unknown theorem tag {theorem!r}; choose from {', '.join(THEOREMS)}")


def common_zeros_count_bound(ell: int, D: int) -> int:
    """Number of relation varieties needed for the common torsion zeros."""
    return gr_count_ceiling(gamma(ell, D))
