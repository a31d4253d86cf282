"""Reduction from several variables to one, and root-of-unity structure.

Contents: the Kronecker shift X_i -> X_i + X1^(d^(i-1)) and its inverse, a
deterministic search for specializations that keep independence, the direct
versus specialized gcd comparison, algebraic relations between l + 1
polynomials in l variables, and a bounded search for monomial relations
prod F_i^b_i = 1 covering the common torsion zeros of F_1, ..., F_{l+1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Iterator, Sequence

from .bounds import BoundReport, bounds, common_zeros_count_bound, multivar
from .expr import print_canonical
from .gcdlab import HypothesisError
from .linalg import integer_nullspace
from .mpoly import MPoly, grlex_key, mgcd, resultant_in, specialize
from .mulind import MOD_CONSTANTS, PLAIN, is_mult_independent
from .torsion import cyclotomic
from .upoly import UPoly, gcd_monic, radical

__all__ = [
    "BoundReport", "bounds", "KroneckerMap", "kronecker_forward", "kronecker_backward",
    "find_independent_specialization", "SpecializationBudgetError", "multivAR_check", "annihilator",
    "CosetRelation", "common_torsion_variety_check", "ContainmentReport",
]


def _as_mpoly(p, arity: int | None = None) -> MPoly:
    if isinstance(p, MPoly):
        return p
    if isinstance(p, UPoly):
        return MPoly.from_upoly(p, arity or 1)
    raise TypeError(f"expected a polynomial, got {type(p).__name__}")


def compose_outer(h: UPoly, F: MPoly) -> MPoly:
    """h(F) for univariate h."""
    out = h(F)
    return out if isinstance(out, MPoly) else MPoly.const(out, F.arity)


# Kronecker shift


@dataclass(frozen=True)
class KroneckerMap:
    arity: int
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("Kronecker parameter d must be at least 2")

    def _images(self, sign: int) -> list[MPoly]:
        x1 = MPoly.var(1, self.arity)
        ims = [x1]
        for i in range(2, self.arity + 1):
            ims.append(MPoly.var(i, self.arity) + sign * x1 ** (self.d ** (i - 1)))
        return ims

    def forward(self, F: MPoly) -> MPoly:
        return F.compose(self._images(1))

    def backward(self, F: MPoly) -> MPoly:
        return F.compose(self._images(-1))


def kronecker_forward(F: MPoly, d: int) -> MPoly:
    """F(X1, X2 + X1^d, ..., Xl + X1^(d^(l-1)))."""
    return KroneckerMap(F.arity, d).forward(F)


def kronecker_backward(F: MPoly, d: int) -> MPoly:
    return KroneckerMap(F.arity, d).backward(F)


def max_partial_degree(Fs: Sequence[MPoly]) -> int:
    return max((F.degree_in(i) or 0) for F in Fs for i in range(1, F.arity + 1))


# specialization search


class SpecializationBudgetError(RuntimeError):
    def __init__(self, tried: int):
        super().__init__(f"no independent specialization among {tried} candidates")
        self.tried = tried


def rationals_by_height() -> Iterator[Fraction]:
    """0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 3/2, -3/2, 1/3, -1/3, 2/3, -2/3, ...

    Height h = max(|p|, q); within a height, by denominator then numerator,
    each value followed by its negative.
    """
    yield Fraction(0)
    h = 1
    while True:
        pairs = sorted({(q, p) for q in range(1, h + 1) for p in range(1, h + 1)
                        if max(p, q) == h and gcd(p, q) == 1})
        for q, p in pairs:
            yield Fraction(p, q)
            yield Fraction(-p, q)
        h += 1


def candidate_tuples(k: int) -> Iterator[tuple[Fraction, ...]]:
    """Tuples of k rationals: diagonals by index sum, lexicographic within."""
    if k == 0:
        yield ()
        return
    seq: list[Fraction] = []
    gen = rationals_by_height()
    s = 0
    while True:
        while len(seq) <= s:
            seq.append(next(gen))
        for idx in _compositions(s, k):
            yield tuple(seq[i] for i in idx)
        s += 1


def _compositions(s: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        yield (s,)
        return
    for first in range(s + 1):
        for rest in _compositions(s - first, k - 1):
            yield (first,) + rest


@dataclass
class Specialization:
    alphas: tuple[Fraction, ...]
    specialized: list[UPoly]
    tried: int


def find_independent_specialization(Fs: Sequence[MPoly], budget: int = 1000,
                                    mode: str = MOD_CONSTANTS, precheck: bool = True) -> Specialization:
    """First alpha (in the fixed candidate order) keeping Fs independent."""
    Fs = [_as_mpoly(F) for F in Fs]
    if not Fs:
        raise ValueError("empty family")
    arity = Fs[0].arity
    if any(F.arity != arity for F in Fs):
        raise ValueError("all inputs must share one arity")
    if precheck:
        verdict = is_mult_independent(Fs, mode)
        if not verdict:
            raise HypothesisError("inputs are multiplicatively dependent", verdict)
    tried = 0
    for alphas in candidate_tuples(arity - 1):
        if tried >= budget:
            break
        tried += 1
        fs = [specialize(F, alphas) for F in Fs]
        if any(f.is_zero for f in fs):
            continue
        if is_mult_independent(fs, mode):
            return Specialization(alphas, fs, tried)
    raise SpecializationBudgetError(tried)


# gcd comparison


@dataclass
class MultivarCheck:
    gcd: MPoly
    gcd_degree: int
    bound: int
    d: int
    alphas: tuple[Fraction, ...]
    candidates_tried: int
    specialized: tuple[UPoly, UPoly]
    univariate_gcd: UPoly
    shifted_gcd_degree: int
    shifted_specialized_degree: int
    mode: str
    chain_ok: bool
    divides_ok: bool

    @property
    def ok(self) -> bool:
        return self.chain_ok and self.divides_ok

    def to_dict(self) -> dict:
        return {
            "gcd": print_canonical(self.gcd),
            "gcd_degree": self.gcd_degree,
            "bound": str(self.bound),
            "d": self.d,
            "alphas": [str(a) for a in self.alphas],
            "candidates_tried": self.candidates_tried,
            "specialized": [print_canonical(p) for p in self.specialized],
            "univariate_gcd": print_canonical(self.univariate_gcd),
            "univariate_gcd_degree": self.univariate_gcd.degree,
            "shifted_gcd_degree": self.shifted_gcd_degree,
            "shifted_specialized_degree": self.shifted_specialized_degree,
            "independence_mode": self.mode,
            "chain": f"{self.gcd_degree} <= {self.univariate_gcd.degree} <= {self.bound}",
            "chain_ok": self.chain_ok,
            "specialized_gcd_divides": self.divides_ok,
        }


def multivAR_check(h1: UPoly, h2: UPoly, F: MPoly, G: MPoly, n: int, m: int,
                   budget: int = 1000, bound_override: int | None = None) -> MultivarCheck:
    """Compare the direct gcd of h1(F^n), h2(G^m) with its specialized shadow.

    When h1 = h2 = T - 1 independence is only required without constants.
    """
    F, G = _as_mpoly(F), _as_mpoly(G)
    if F.arity != G.arity:
        raise ValueError("F and G must share one arity")
    if n < 1 or m < 1:
        raise ValueError("exponents must be positive")
    for name, p in (("h1", h1), ("h2", h2), ("F", F), ("G", G)):
        if p.is_constant():
            raise ValueError(f"{name} must be nonconstant")
    t1 = UPoly((-1, 1))
    mode = PLAIN if (h1 == t1 and h2 == t1) else MOD_CONSTANTS
    verdict = is_mult_independent([F, G], mode)
    if not verdict:
        raise HypothesisError("F and G are multiplicatively dependent", verdict)
    ell = F.arity
    D = max_partial_degree([F, G])
    d = D + 1
    direct = mgcd(compose_outer(h1, F ** n), compose_outer(h2, G ** m))
    km = KroneckerMap(ell, d)
    sp = find_independent_specialization([km.forward(F), km.forward(G)], budget, mode, precheck=False)
    f, g = sp.specialized
    uni = gcd_monic(h1(f ** n), h2(g ** m))
    shifted = km.forward(direct)
    shifted_sp = specialize(shifted, sp.alphas)
    bound = multivar(h1.degree, h2.degree, D, ell) if bound_override is None else bound_override
    chain_ok = direct.total_degree() <= uni.degree <= bound
    divides_ok = shifted_sp.divides(uni)
    return MultivarCheck(direct, direct.total_degree(), bound, d, sp.alphas, sp.tried, (f, g), uni,
                         shifted.total_degree(), shifted_sp.degree, mode, chain_ok, divides_ok)


# algebraic relations


@dataclass
class Annihilator:
    poly: MPoly
    deg_cap: int
    unknowns: int
    equations: int

    def to_dict(self) -> dict:
        return {"R": print_canonical(self.poly), "degree": self.poly.total_degree(),
                "deg_cap": self.deg_cap, "system": [self.equations, self.unknowns],
                "variable_note": "X_i in R stands for the i-th input polynomial"}


def monomials_upto(k: int, deg: int) -> list[tuple[int, ...]]:
    """Exponent vectors in k variables of total degree <= deg, increasing graded-lex."""
    out = [e for e in itertools.product(range(deg + 1), repeat=k) if sum(e) <= deg]
    return sorted(out, key=grlex_key)


def annihilator_system_size(ell: int, deg_cap: int, D: int) -> tuple[int, int]:
    """(equations, unknowns) of the linear system for the given sizes."""
    return comb(ell + deg_cap * D, ell), comb(ell + 1 + deg_cap, ell + 1)


def annihilator(Fs: Sequence[MPoly], deg_cap: int) -> Annihilator:
    """Nonzero R with R(F_1, ..., F_{l+1}) = 0 and deg R <= deg_cap.

    Among all such R the one returned has the smallest possible graded-lex
    leading monomial, scaled to leading coefficient 1.
    """
    Fs = [_as_mpoly(F) for F in Fs]
    ell = Fs[0].arity
    if any(F.arity != ell for F in Fs):
        raise ValueError("all inputs must share one arity")
    if len(Fs) != ell + 1:
        raise ValueError(f"need {ell + 1} polynomials in {ell} variables, got {len(Fs)}")
    if deg_cap < 1:
        raise ValueError("deg_cap must be positive")
    k = len(Fs)
    monos = monomials_upto(k, deg_cap)
    powers = [[MPoly.const(1, ell)] for _ in Fs]
    for i, F in enumerate(Fs):
        for _ in range(deg_cap):
            powers[i].append(powers[i][-1] * F)
    images = []
    for e in monos:
        acc = MPoly.const(1, ell)
        for i, x in enumerate(e):
            if x:
                acc = acc * powers[i][x]
        images.append(acc)
    rows_keys = sorted({t for im in images for t in im.terms}, key=grlex_key)
    index = {t: r for r, t in enumerate(rows_keys)}
    rows = [[Fraction(0)] * len(monos) for _ in rows_keys]
    for j, im in enumerate(images):
        for t, c in im.items():
            rows[index[t]][j] = c
    kernel = integer_nullspace(rows, len(monos))
    if not kernel:
        raise ArithmeticError(f"no relation of degree <= {deg_cap}")
    vec = kernel[0]
    R = MPoly({e: c for e, c in zip(monos, vec) if c}, k).normalized()
    return Annihilator(R, deg_cap, len(monos), len(rows_keys))


# monomial relations on common torsion zeros


@dataclass(frozen=True)
class CosetRelation:
    b: tuple[int, ...]
    poly: MPoly

    @classmethod
    def of(cls, Fs: Sequence[MPoly], b: Sequence[int]) -> "CosetRelation":
        one = MPoly.const(1, Fs[0].arity)
        pos, neg = one, one
        for F, e in zip(Fs, b):
            if e > 0:
                pos = pos * F ** e
            elif e < 0:
                neg = neg * F ** (-e)
        return cls(tuple(b), pos - neg)


def relation_box(k: int, b_cap: int) -> list[tuple[int, ...]]:
    """Nonzero vectors in [-b_cap, b_cap]^k up to sign, ordered by 1-norm then lex."""
    out = []
    for b in itertools.product(range(-b_cap, b_cap + 1), repeat=k):
        first = next((x for x in b if x), 0)
        if first > 0:
            out.append(b)
    return sorted(out, key=lambda v: (sum(abs(x) for x in v), [-x for x in v]))


@dataclass
class TorsionPiece:
    orders: tuple[int, ...]
    point_count: int
    covering: list[tuple[int, ...]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"orders": list(self.orders), "point_count": self.point_count,
                "covering_relations": [list(b) for b in self.covering]}


@dataclass
class ContainmentReport:
    ell: int
    n_cap: int
    b_cap: int
    pieces: list[TorsionPiece]
    covering_relations: list[tuple[int, ...]]
    cover: list[tuple[int, ...]]
    uncovered: list[tuple[int, ...]]
    degenerate: list[dict]
    N_bound: int
    exact: bool

    @property
    def within_bound(self) -> bool:
        return not self.uncovered and len(self.cover) <= self.N_bound

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "n_cap": self.n_cap,
            "b_cap": self.b_cap,
            "pieces": [p.to_dict() for p in self.pieces],
            "covering_relations": [list(b) for b in self.covering_relations],
            "cover": [list(b) for b in self.cover],
            "uncovered_pieces": [list(o) for o in self.uncovered],
            "degenerate_components": self.degenerate,
            "N_bound": str(self.N_bound),
            "within_bound": self.within_bound,
            "point_counts": "exact" if self.exact else "elimination with two-shear agreement",
        }


def _greedy_cover(pieces: list[TorsionPiece]) -> list[tuple[int, ...]]:
    todo = {p.orders for p in pieces if p.point_count}
    chosen = []
    candidates = sorted({b for p in pieces for b in p.covering},
                        key=lambda v: (sum(abs(x) for x in v), [-x for x in v]))
    while todo:
        best, hit = None, set()
        for b in candidates:
            h = {p.orders for p in pieces if p.orders in todo and b in p.covering}
            if len(h) > len(hit):
                best, hit = b, h
        if best is None:
            break
        chosen.append(best)
        todo -= hit
    return chosen


def _reduce_mod(b: Sequence[int], orders: Sequence[int]) -> tuple[int, ...]:
    return tuple(x % d for x, d in zip(b, orders))


def common_torsion_variety_check(Fs: Sequence, n_cap: int, b_cap: int) -> ContainmentReport:
    """Cover the common zeros of F_i^n_i - 1 (all n_i <= n_cap) by relations
    prod F_i^b_i = 1 with |b_i| <= b_cap."""
    if n_cap < 1 or b_cap < 1:
        raise ValueError("n_cap and b_cap must be positive")
    if all(isinstance(F, UPoly) for F in Fs):
        Fs = [MPoly.from_upoly(F, 1) for F in Fs]
    Fs = [_as_mpoly(F) for F in Fs]
    ell = Fs[0].arity
    if any(F.arity != ell for F in Fs) or len(Fs) != ell + 1:
        raise ValueError(f"need {ell + 1} polynomials in {ell} variables")
    if ell > 2:
        raise ValueError("only one or two variables are supported")
    if any(F.is_constant() for F in Fs):
        raise HypothesisError("inputs must be nonconstant")
    verdict = is_mult_independent(Fs, PLAIN)
    if not verdict:
        raise HypothesisError("inputs are multiplicatively dependent", verdict)
    D = max(F.total_degree() for F in Fs)
    N = common_zeros_count_bound(ell, D)
    box = relation_box(ell + 1, b_cap)
    if ell == 1:
        pieces, degenerate, exact = _pieces_univariate(Fs, n_cap, box), [], True
    else:
        pieces, degenerate = _pieces_plane(Fs, n_cap, box)
        exact = False
    live = [p for p in pieces if p.point_count]
    covering = [b for b in box if all(b in p.covering for p in live)]
    cover = covering[:1] if covering else _greedy_cover(live)
    uncovered = [p.orders for p in live if not any(b in p.covering for b in cover)]
    return ContainmentReport(ell, n_cap, b_cap, live, covering, cover, uncovered, degenerate, N, exact)


def _pieces_univariate(Fs, n_cap, box) -> list[TorsionPiece]:
    fs = [F.to_upoly(1) for F in Fs]
    cyc = [[cyclotomic(a)(f) for a in range(1, n_cap + 1)] for f in fs]
    pieces = []
    for a in range(1, n_cap + 1):
        for b in range(1, n_cap + 1):
            P = gcd_monic(cyc[0][a - 1], cyc[1][b - 1])
            if P.is_constant():
                continue
            P = radical(P)
            piece = TorsionPiece((a, b), P.degree)
            cache: dict = {}
            for v in box:
                key = _reduce_mod(v, (a, b))
                if key not in cache:
                    rel = CosetRelation.of(Fs, key).poly.to_upoly(1)
                    cache[key] = P.divides(rel)
                if cache[key]:
                    piece.covering.append(v)
            pieces.append(piece)
    return pieces


# plane case: point counts by projection after a shear

SHEARS = (1, 2, 3, 5, 7, 11)


def _shear(P: MPoly, s: int) -> MPoly:
    x1, x2 = MPoly.var(1, 2), MPoly.var(2, 2)
    return P.compose([x1 - s * x2, x2])


def _projected_count(polys: Sequence[MPoly], s: int) -> int | None:
    """Number of distinct values of x1 + s*x2 over the common zeros, read off
    the gcd of pairwise resultants in X2; None when every pair shares a curve."""
    sh = [_shear(P, s) for P in polys]
    acc = None
    for P, Q in itertools.combinations(sh, 2):
        r = resultant_in(P, Q, 2)
        if r.is_zero:
            continue
        u = r.to_upoly(1)
        acc = u if acc is None else gcd_monic(acc, u)
    if acc is None:
        return None
    return 0 if acc.is_constant() else radical(acc).degree


def _agreed_count(polys: Sequence[MPoly]) -> int | None:
    prev = None
    for s in SHEARS:
        c = _projected_count(polys, s)
        if c is None:
            return None
        if c == prev:
            return c
        prev = c
    return None


def _pieces_plane(Fs, n_cap, box):
    cyc = [[cyclotomic(a)(F) for a in range(1, n_cap + 1)] for F in Fs]
    pieces, degenerate = [], []
    for orders in itertools.product(range(1, n_cap + 1), repeat=3):
        polys = [cyc[i][o - 1] for i, o in enumerate(orders)]
        common = mgcd(mgcd(polys[0], polys[1]), polys[2])
        if not common.is_constant():
            degenerate.append({"orders": list(orders), "component": print_canonical(common)})
            continue
        count = _agreed_count(polys)
        if count is None:
            degenerate.append({"orders": list(orders), "component": "unresolved projection"})
            continue
        if count == 0:
            continue
        piece = TorsionPiece(orders, count)
        cache: dict = {}
        for v in box:
            key = _reduce_mod(v, orders)
            if key not in cache:
                rel = CosetRelation.of(Fs, key).poly
                cache[key] = rel.is_zero or _agreed_count(polys + [rel]) == count
            if cache[key]:
                piece.covering.append(v)
        pieces.append(piece)
    return pieces, degenerate
