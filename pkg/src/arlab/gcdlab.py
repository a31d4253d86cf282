"""Gcd sweeps over exponent grids and the checks that go with them.

The central object is a :class:`Family`: polynomials f_i, phi_i, g_i, psi_i
giving, for an exponent tuple (n, nu, m, mu), the two S-unit differences

    A = prod f_i^n_i - prod phi_i^nu_i,    B = prod g_i^m_i - prod psi_i^mu_i.

With no phi or psi (empty products are 1) and one f and one g this is the
classical f^n - 1, g^m - 1 case.  Optional outer polynomials h1, h2 turn the
sides into h1(f^n), h2(g^m).
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import bounds as _bounds
from .expr import print_canonical
from .mulind import MOD_CONSTANTS, PLAIN, gcd_free_basis, is_mult_independent
from .torsion import common_torsion_zeros
from .upoly import UPoly, gcd_monic, lcm_monic, product, radical, squarefree_decompose


class HypothesisError(ValueError):
    """Inputs do not satisfy the hypotheses of the statement being tested."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class BoundViolation(RuntimeError):
    """A computed value exceeds a proven bound."""


T_MINUS_1 = UPoly((-1, 1))


# single gcds


def ar_gcd(f: UPoly, g: UPoly, n: int, m: int) -> UPoly:
    """Monic gcd(f^n - 1, g^m - 1)."""
    if n < 1 or m < 1:
        raise ValueError("exponents must be positive")
    if f.is_constant() or g.is_constant():
        raise ValueError("f and g must be nonconstant")
    return gcd_monic(f ** n - 1, g ** m - 1)


def genAR1_gcd(h1: UPoly, h2: UPoly, f: UPoly, g: UPoly, n: int, m: int,
               precheck: bool = False) -> tuple[UPoly, int]:
    """gcd(h1(f^n), h2(g^m)) together with its degree bound.

    With ``precheck`` the pair (f, g) is first tested for independence modulo
    constants and the bound is enforced.
    """
    for name, p in (("h1", h1), ("h2", h2), ("f", f), ("g", g)):
        if p.is_constant():
            raise ValueError(f"{name} must be nonconstant")
    if n < 1 or m < 1:
        raise ValueError("exponents must be positive")
    if precheck:
        verdict = is_mult_independent([f, g], MOD_CONSTANTS)
        if not verdict:
            raise HypothesisError("f and g are dependent modulo constants", verdict)
    d = gcd_monic(h1(f ** n), h2(g ** m))
    bound = _bounds.genar1(h1.degree, h2.degree, f.degree, g.degree)
    if precheck and d.degree > bound:
        raise BoundViolation(f"degree {d.degree} exceeds {bound}")
    return d, bound


# families


@dataclass(frozen=True)
class Family:
    fs: tuple[UPoly, ...]
    gs: tuple[UPoly, ...]
    phis: tuple[UPoly, ...] = ()
    psis: tuple[UPoly, ...] = ()
    h1: UPoly | None = None
    h2: UPoly | None = None

    @classmethod
    def ar(cls, f: UPoly, g: UPoly) -> "Family":
        return cls((f,), (g,))

    @classmethod
    def genar1(cls, h1: UPoly, h2: UPoly, f: UPoly, g: UPoly) -> "Family":
        return cls((f,), (g,), h1=h1, h2=h2)

    @property
    def sizes(self) -> tuple[int, int, int, int]:
        return len(self.fs), len(self.phis), len(self.gs), len(self.psis)

    @property
    def width(self) -> int:
        return sum(self.sizes)

    @property
    def is_classical(self) -> bool:
        return len(self.fs) == 1 and len(self.gs) == 1 and not self.phis and not self.psis

    @property
    def has_outer(self) -> bool:
        return self.h1 is not None or self.h2 is not None

    def split(self, exps: Sequence[int]):
        l, k, r, s = self.sizes
        if len(exps) != l + k + r + s:
            raise ValueError(f"expected {l + k + r + s} exponents, got {len(exps)}")
        return exps[:l], exps[l:l + k], exps[l + k:l + k + r], exps[l + k + r:]

    def sides(self, exps: Sequence[int]) -> tuple[UPoly, UPoly]:
        n, nu, m, mu = self.split(exps)
        left = product([f ** e for f, e in zip(self.fs, n)])
        right = product([g ** e for g, e in zip(self.gs, m)])
        if self.has_outer:
            h1 = self.h1 if self.h1 is not None else T_MINUS_1
            h2 = self.h2 if self.h2 is not None else T_MINUS_1
            return h1(left), h2(right)
        a = left - product([p ** e for p, e in zip(self.phis, nu)])
        b = right - product([p ** e for p, e in zip(self.psis, mu)])
        return a, b

    def multiplicity_cap(self) -> int | None:
        if self.has_outer:
            return None
        return min(sum(p.degree for p in self.fs + self.phis),
                   sum(p.degree for p in self.gs + self.psis))

    def degree_bound(self) -> int | None:
        if not self.is_classical:
            return None
        df, dg = self.fs[0].degree, self.gs[0].degree
        if self.has_outer:
            h1 = self.h1 if self.h1 is not None else T_MINUS_1
            h2 = self.h2 if self.h2 is not None else T_MINUS_1
            return _bounds.genar1(h1.degree, h2.degree, df, dg)
        return _bounds.univariate_ar(df, dg)

    def describe(self) -> dict:
        d = {
            "fs": [print_canonical(p) for p in self.fs],
            "phis": [print_canonical(p) for p in self.phis],
            "gs": [print_canonical(p) for p in self.gs],
            "psis": [print_canonical(p) for p in self.psis],
        }
        if self.has_outer:
            d["h1"] = print_canonical(self.h1 if self.h1 is not None else T_MINUS_1)
            d["h2"] = print_canonical(self.h2 if self.h2 is not None else T_MINUS_1)
        return d


def check_family(family: Family) -> None:
    """Raise :class:`HypothesisError` unless the family meets its theorem's hypotheses."""
    members = family.fs + family.phis + family.gs + family.psis
    if not family.fs or not family.gs:
        raise HypothesisError("need at least one f and one g")
    for p in members:
        if p.is_constant():
            raise HypothesisError(f"{print_canonical(p)} is constant")
    if family.has_outer:
        if not family.is_classical:
            raise HypothesisError("outer polynomials are supported for one f and one g only")
        for h in (family.h1, family.h2):
            if h is not None and h.is_constant():
                raise HypothesisError("h1 and h2 must be nonconstant")
        verdict = is_mult_independent([family.fs[0], family.gs[0]], MOD_CONSTANTS)
        if not verdict:
            raise HypothesisError("f and g are dependent modulo constants", verdict)
        return
    if family.phis and not gcd_monic(product(family.fs), product(family.phis)).is_constant():
        raise HypothesisError("f_i and phi_i share a zero")
    if family.psis and not gcd_monic(product(family.gs), product(family.psis)).is_constant():
        raise HypothesisError("g_i and psi_i share a zero")
    verdict = is_mult_independent(list(members), PLAIN)
    if not verdict:
        raise HypothesisError("family is multiplicatively dependent", verdict)


def sunit_gcd(fs, phis, gs, psis, exps: Sequence[int], check: bool = True) -> UPoly:
    """Monic gcd of the two S-unit differences at one exponent tuple."""
    family = Family(tuple(fs), tuple(gs), tuple(phis), tuple(psis))
    if any(e < 0 for e in exps):
        raise ValueError("exponents must be nonnegative")
    if check:
        check_family(family)
    a, b = family.sides(exps)
    if a.is_zero or b.is_zero:
        raise HypothesisError("a difference vanishes identically at these exponents")
    return gcd_monic(a, b)


# multiplicities


def max_multiplicity(p: UPoly) -> int:
    """Largest root multiplicity; 0 for nonzero constants."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    parts = squarefree_decompose(p)
    return max((k for _, k in parts), default=0)


@dataclass(frozen=True)
class AbcResult:
    mult: int
    bound: int
    ok: bool


def abc_mult_check(fs: Sequence[UPoly], gs: Sequence[UPoly], ns: Sequence[int], ms: Sequence[int]) -> AbcResult:
    """Largest multiplicity of prod f_i^n_i - prod g_j^m_j against sum of degrees."""
    if len(fs) != len(ns) or len(gs) != len(ms):
        raise ValueError("exponent tuple lengths do not match")
    if any(e < 0 for e in list(ns) + list(ms)):
        raise ValueError("exponents must be nonnegative")
    if not gcd_monic(product(fs), product(gs)).is_constant():
        raise HypothesisError("the f_i and g_j share a zero")
    diff = product([f ** n for f, n in zip(fs, ns)]) - product([g ** m for g, m in zip(gs, ms)])
    if diff.is_zero:
        raise HypothesisError("difference vanishes identically")
    bound = sum(f.degree for f in fs) + sum(g.degree for g in gs)
    mult = max_multiplicity(diff)
    return AbcResult(mult, bound, mult <= bound)


def abc_rational_check(nums: Sequence[UPoly], dens: Sequence[UPoly], ns: Sequence[int]) -> AbcResult:
    """Multiplicity of prod (f_i/g_i)^n_i - 1, via its numerator."""
    return abc_mult_check(nums, dens, ns, ns)


class PreconditionError(ValueError):
    pass


def mason_stothers_check(A: UPoly, B: UPoly, C: UPoly) -> bool:
    """max(deg A, deg B, deg C) <= deg rad(ABC) - 1 for coprime A + B = C."""
    if A + B != C:
        raise PreconditionError("sum mismatch: A + B != C")
    for x, y in ((A, B), (A, C), (B, C)):
        if not gcd_monic(x, y).is_constant():
            raise PreconditionError("coprimality: inputs are not pairwise coprime")
    if A.is_constant() and B.is_constant() and C.is_constant():
        raise PreconditionError("all of A, B, C are constant")
    top = max(p.degree for p in (A, B, C) if not p.is_zero)
    return top <= radical(A * B * C).degree - 1


# sweeps


@dataclass
class SweepRecord:
    exps: tuple[int, ...]
    gcd: UPoly
    degree: int
    bound: int | None
    max_multiplicity: int
    multiplicity_cap: int | None

    @property
    def within_bound(self) -> bool:
        ok = self.bound is None or self.degree <= self.bound
        if self.multiplicity_cap is not None:
            ok = ok and self.max_multiplicity <= self.multiplicity_cap
        return ok

    def to_dict(self) -> dict:
        return {
            "exps": list(self.exps),
            "gcd": print_canonical(self.gcd),
            "degree": self.degree,
            "bound": None if self.bound is None else str(self.bound),
            "max_multiplicity": self.max_multiplicity,
            "multiplicity_cap": self.multiplicity_cap,
            "within_bound": self.within_bound,
        }


@dataclass
class SweepReport:
    family: Family
    grid_bound: int
    records: list[SweepRecord]
    stable_divisor: UPoly
    last_change: tuple[int, ...] | None
    stabilized: bool
    torsion_check: dict | None = None
    violations: list[str] = field(default_factory=list)

    @property
    def grid(self) -> list[tuple[int, ...]]:
        return [r.exps for r in self.records]

    @property
    def stabilized_at(self) -> tuple[int, ...] | None:
        return self.last_change if self.stabilized else None

    def to_dict(self) -> dict:
        return {
            "family": self.family.describe(),
            "grid_bound": self.grid_bound,
            "records": [r.to_dict() for r in self.records],
            "stable_divisor": print_canonical(self.stable_divisor),
            "last_change": None if self.last_change is None else list(self.last_change),
            "stabilized": self.stabilized,
            "stabilization_note": "empirical: unchanged over the final half of the grid",
            "torsion_check": self.torsion_check,
            "violations": list(self.violations),
        }


def grid_points(family: Family, grid_bound: int) -> list[tuple[int, ...]]:
    """Exponent tuples in lexicographic order.

    Classical and outer-polynomial families use 1..grid_bound; S-unit
    families use 0..grid_bound.
    """
    lo = 1 if (not family.phis and not family.psis) else 0
    return list(itertools.product(range(lo, grid_bound + 1), repeat=family.width))


def _cell(args) -> SweepRecord | None:
    family, exps, bound, cap = args
    a, b = family.sides(exps)
    if a.is_zero or b.is_zero:
        return None
    d = gcd_monic(a, b)
    mult = max_multiplicity(d) if not d.is_constant() else 0
    return SweepRecord(tuple(exps), d, d.degree, bound, mult, cap)


def _default_workers() -> int:
    env = os.environ.get("ARLAB_WORKERS")
    if env:
        return max(1, int(env))
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def _map(fn, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(items) // (4 * workers))
        return list(pool.map(fn, items, chunksize=chunk))


def stable_divisor_sweep(family: Family, grid_bound: int, B_torsion: int | None = None,
                         workers: int | None = None, check: bool = True,
                         bound_override: int | None = None) -> SweepReport:
    """Sweep the exponent grid, fold gcds into a running lcm, check bounds.

    ``bound_override`` replaces the theorem's degree bound on every record; it
    exists so the violation path can be exercised.
    """
    if grid_bound < 1:
        raise ValueError("grid bound must be positive")
    if check:
        check_family(family)
    workers = _default_workers() if workers is None else workers
    bound = family.degree_bound() if bound_override is None else bound_override
    cap = family.multiplicity_cap()
    cells = [(family, e, bound, cap) for e in grid_points(family, grid_bound)]
    results = _map(_cell, cells, workers)
    records = [r for r in results if r is not None]
    lcm = UPoly.const(1)
    last_idx = -1
    for i, rec in enumerate(records):
        new = lcm_monic(lcm, rec.gcd)
        if new != lcm:
            lcm = new
            last_idx = i
    last = records[last_idx].exps if last_idx >= 0 else None
    stabilized = last_idx < len(records) / 2
    violations = [f"record {list(r.exps)}: degree {r.degree} / bound {r.bound}, "
                  f"multiplicity {r.max_multiplicity} / cap {r.multiplicity_cap}"
                  for r in records if not r.within_bound]
    for r in records:
        if not r.gcd.divides(lcm):  # defensive; lcm folding guarantees this
            violations.append(f"record {list(r.exps)} does not divide the stable divisor")
    torsion = None
    if family.is_classical and not family.has_outer and B_torsion is not None:
        torsion = _torsion_cross_check(family, lcm, grid_bound, B_torsion)
        if torsion["window_sufficient"] and not torsion["divides"]:
            violations.append("stable divisor does not divide the torsion-window candidate")
    return SweepReport(family, grid_bound, records, lcm, last, stabilized, torsion, violations)


def _torsion_cross_check(family: Family, lcm: UPoly, grid_bound: int, B: int) -> dict:
    f, g = family.fs[0], family.gs[0]
    d = family.multiplicity_cap()
    zeros = common_torsion_zeros(f, g, B)
    h = zeros ** d
    # every zero of f^n - 1 with n <= grid_bound has f(t) of order <= grid_bound
    return {
        "B_torsion": B,
        "torsion_zeros": print_canonical(zeros),
        "multiplicity": d,
        "candidate_h": print_canonical(h),
        "divides": h.divrem(lcm)[1].is_zero if not lcm.is_zero else False,
        "window_sufficient": B >= grid_bound,
    }


# monoids and density


@dataclass
class MonoidRecord:
    zero: UPoly
    members: list[tuple[int, ...]]
    pairs_checked: int = 0
    closure_violations: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "zero": print_canonical(self.zero),
            "members": [list(m) for m in self.members],
            "pairs_checked": self.pairs_checked,
            "closure_violations": [[list(a), list(b)] for a, b in self.closure_violations],
        }


@dataclass
class DensityReport:
    density: Fraction
    coprime: int
    total: int
    monoids: list[MonoidRecord]
    sweep: SweepReport

    def to_dict(self) -> dict:
        return {
            "density": f"{self.density.numerator}/{self.density.denominator}",
            "coprime": self.coprime,
            "total": self.total,
            "grid_note": "box density on the cubical grid, not an asymptotic limit",
            "monoids": [m.to_dict() for m in self.monoids],
        }


def coprimality_density(family: Family, grid_bound: int, workers: int | None = None,
                        max_pairs: int = 5000, seed: int = 0) -> DensityReport:
    """Share of grid tuples with coprime sides, and the exceptional monoids.

    Each monoid is indexed by an element of a coprime basis of the observed
    gcds; all zeros inside one basis element share the same membership set.
    """
    check_family(family)
    top = gcd_monic(product(family.fs) - 1, product(family.gs) - 1)
    if not top.is_constant():
        raise HypothesisError("gcd(prod f_i - 1, prod g_i - 1) is not 1")
    sweep = stable_divisor_sweep(family, grid_bound, workers=workers, check=False)
    total = len(sweep.records)
    coprime = sum(1 for r in sweep.records if r.gcd.is_constant())
    nontrivial = [radical(r.gcd) for r in sweep.records if not r.gcd.is_constant()]
    classes = gcd_free_basis(nontrivial).basis if nontrivial else ()
    lookup = {r.exps: r.gcd for r in sweep.records}
    # membership keyed by the tuple's position in the grid; the grid is a box
    rng = random.Random(seed)
    monoids = []
    for z in classes:
        members = [r.exps for r in sweep.records if z.divides(r.gcd)]
        pairs = list(itertools.combinations_with_replacement(range(len(members)), 2))
        if len(pairs) > max_pairs:
            pairs = sorted(rng.sample(pairs, max_pairs))
        mset = set(members)
        rec = MonoidRecord(z, members)
        for i, j in pairs:
            s = tuple(x + y for x, y in zip(members[i], members[j]))
            if s in lookup:
                rec.pairs_checked += 1
                if s not in mset:
                    rec.closure_violations.append((members[i], members[j]))
        monoids.append(rec)
    return DensityReport(Fraction(coprime, total) if total else Fraction(0), coprime, total, monoids, sweep)


def in_all(polys: Iterable[UPoly], target: UPoly) -> bool:
    return all(p.divides(target) for p in polys)
