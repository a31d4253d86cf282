"""Multiplicative independence of polynomial families, with certificates.

Inputs are reduced to a coprime (gcd-free) basis; a family is dependent
modulo constants exactly when its integer exponent matrix over that basis has
a nontrivial left kernel.  Plain dependence additionally requires the
leftover rational constants to multiply to 1, which is decided by adding their
prime-exponent and sign columns to the same lattice problem.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .linalg import integer_nullspace
from .mpoly import MPoly, mgcd
from .upoly import UPoly, gcd_monic

Poly = Union[UPoly, MPoly]

PLAIN = "plain"
MOD_CONSTANTS = "mod_constants"
TRIAL_DIVISION_LIMIT = 10**6


class UnitFactorizationError(ValueError):
    pass


def poly_gcd(a: Poly, b: Poly) -> Poly:
    if isinstance(a, UPoly) and isinstance(b, UPoly):
        return gcd_monic(a, b)
    if isinstance(a, MPoly) and isinstance(b, MPoly):
        return mgcd(a, b)
    raise TypeError("cannot mix univariate and multivariate inputs")


def _one_like(p: Poly) -> Poly:
    return UPoly.const(1) if isinstance(p, UPoly) else MPoly.const(1, p.arity)


@dataclass(frozen=True)
class GcdFreeBasis:
    basis: tuple
    exponents: tuple[tuple[int, ...], ...]
    units: tuple[Fraction, ...]

    def reassemble(self, i: int) -> Poly:
        acc = _one_like(self.basis[0]) if self.basis else None
        if acc is None:
            return UPoly.const(self.units[i])
        for b, e in zip(self.basis, self.exponents[i]):
            acc = acc * b ** e
        return acc * self.units[i]


def _refine(elems: list) -> list:
    """Split until pairwise coprime; every input stays a product of outputs."""
    elems = [e.normalized() for e in elems if not e.is_constant()]
    changed = True
    while changed:
        changed = False
        uniq = []
        for e in elems:
            if e not in uniq:
                uniq.append(e)
        elems = uniq
        for i in range(len(elems)):
            for j in range(i + 1, len(elems)):
                g = poly_gcd(elems[i], elems[j])
                if g.is_constant():
                    continue
                a, b = elems[i], elems[j]
                pieces = [a.exact_quotient(g), g, b.exact_quotient(g)]
                rest = [e for k, e in enumerate(elems) if k not in (i, j)]
                elems = rest + [p.normalized() for p in pieces if not p.is_constant()]
                changed = True
                break
            if changed:
                break
    return elems


def _sort_key(p: Poly):
    from .expr import print_canonical

    return (p.degree, print_canonical(p))


def gcd_free_basis(polys: Sequence[Poly]) -> GcdFreeBasis:
    """Coprime basis with integer exponents and leftover constants."""
    if not polys:
        return GcdFreeBasis((), (), ())
    for p in polys:
        if p.is_zero:
            raise ValueError("zero polynomial has no multiplicative decomposition")
    basis = sorted(_refine(list(polys)), key=_sort_key)
    rows = []
    units = []
    for p in polys:
        row = []
        rest = p
        for b in basis:
            k = 0
            while True:
                q, r = rest.divrem(b)
                if r:
                    break
                rest = q
                k += 1
            row.append(k)
        if not rest.is_constant():
            raise ArithmeticError("coprime basis does not cover input")  # defensive
        rows.append(tuple(row))
        units.append(rest.constant_value())
    return GcdFreeBasis(tuple(basis), tuple(rows), tuple(units))


# rational units


def factor_rational(q: Fraction) -> tuple[int, dict[int, int]]:
    """Sign and prime exponents of a nonzero rational by trial division."""
    if not q:
        raise ValueError("cannot factor zero")
    sign = -1 if q < 0 else 1
    exps: dict[int, int] = {}
    for n, s in ((abs(q.numerator), 1), (q.denominator, -1)):
        p = 2
        while p * p <= n and p <= TRIAL_DIVISION_LIMIT:
            while n % p == 0:
                exps[p] = exps.get(p, 0) + s
                n //= p
            p += 1 if p == 2 else 2
        if n > 1:
            if n > TRIAL_DIVISION_LIMIT ** 2:
                raise UnitFactorizationError(f"cofactor {n} is beyond trial division range")
            exps[n] = exps.get(n, 0) + s
    return sign, {p: e for p, e in exps.items() if e}


@dataclass(frozen=True)
class DependenceCertificate:
    relation: tuple[int, ...]
    constant: Fraction
    mode: str = MOD_CONSTANTS

    def __bool__(self) -> bool:
        return False

    def check(self, polys: Sequence[Poly]) -> bool:
        """Exact re-multiplication: prod F_i^nu_i == constant."""
        if not polys:
            return False
        num = _one_like(polys[0])
        den = _one_like(polys[0])
        for p, v in zip(polys, self.relation):
            if v > 0:
                num = num * p ** v
            elif v < 0:
                den = den * p ** (-v)
        q, r = num.divrem(den)
        return r.is_zero and q == self.constant


@dataclass(frozen=True)
class Independent:
    basis: GcdFreeBasis = field(repr=False)

    def __bool__(self) -> bool:
        return True


def _pick_even(vectors: list[list[int]], signs: list[int]) -> list[int]:
    def parity(v):
        return sum(x for x, s in zip(v, signs) if s < 0) % 2

    for v in vectors:
        if parity(v) == 0:
            return v
    if len(vectors) >= 2:
        return [x + y for x, y in zip(vectors[0], vectors[1])]
    return [2 * x for x in vectors[0]]


def _normalize_sign(v: list[int]) -> tuple[int, ...]:
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def is_mult_independent(polys: Sequence[Poly], mode: str = MOD_CONSTANTS) -> Independent | DependenceCertificate:
    """Return :class:`Independent` (truthy) or a dependence certificate (falsy)."""
    if mode not in (PLAIN, MOD_CONSTANTS):
        raise ValueError(f"unknown mode {mode!r}")
    polys = list(polys)
    gfb = gcd_free_basis(polys)
    s = len(polys)
    r = len(gfb.basis)
    # columns: basis exponents; a relation nu satisfies sum_i nu_i * row_i = 0
    cols = [[gfb.exponents[i][j] for i in range(s)] for j in range(r)]
    signs = []
    if mode == PLAIN:
        factored = [factor_rational(u) for u in gfb.units]
        primes = sorted({p for _, f in factored for p in f})
        for p in primes:
            cols.append([f.get(p, 0) for _, f in factored])
        signs = [sg for sg, _ in factored]
    kernel = integer_nullspace(cols, s) if cols else [[int(i == j) for i in range(s)] for j in range(s)]
    if not kernel:
        return Independent(gfb)
    if mode == PLAIN:
        nu = _normalize_sign(_pick_even(kernel, signs))
        const = Fraction(1)
    else:
        nu = _normalize_sign(kernel[0])
        const = Fraction(1)
        for u, v in zip(gfb.units, nu):
            const *= u ** v
    return DependenceCertificate(nu, const, mode)


def normalize_at_origin(F: Poly) -> Poly:
    """F / F*(0), where F*(0) is F(0) unless that vanishes, in which case 1."""
    if isinstance(F, UPoly):
        c = F[0]
    else:
        c = F.terms.get((0,) * F.arity, Fraction(0))
    return F if not c else F * (1 / c)
