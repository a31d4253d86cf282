"""Cyclotomic polynomials and root-of-unity points on plane curves.

Zero tests at roots of unity are done in prime fields F_p with p = 1 mod k,
where a primitive k-th root of unity exists exactly.  Fix an abstract
primitive L-th root z; each admissible prime p together with a chosen element
w of order L in F_p is the reduction of z modulo one prime ideal above p, so
index pairs are coherent across primes and a true zero vanishes under all of
them.  ``certify=True`` re-checks every reported point in Q(z) itself.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, lcm

from sympy import isprime, primefactors, totient

from .mpoly import MPoly
from .upoly import UPoly, gcd_monic, radical

log = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> UPoly:
    """Phi_d, by dividing T^d - 1 by Phi_e for the proper divisors e of d."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    p = UPoly.monomial(d) - 1
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_quotient(cyclotomic(e))
    return p


def euler_phi(d: int) -> int:
    return int(totient(d))


@dataclass(frozen=True)
class CyclotomicIndex:
    d: int
    phi_d: int
    poly: UPoly

    @classmethod
    def of(cls, d: int) -> "CyclotomicIndex":
        return cls(d, euler_phi(d), cyclotomic(d))


def is_cyclotomic_product(p: UPoly) -> bool:
    """True iff every root of p is a root of unity."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    p = p.monic()
    if p.is_constant():
        raise ValueError("constant polynomial")
    n = p.degree
    # phi(d) >= sqrt(d/2), so only d <= 2 n^2 can contribute
    for d in range(1, 2 * n * n + 1):
        if euler_phi(d) > p.degree:
            continue
        c = cyclotomic(d)
        while True:
            q, r = p.divrem(c)
            if r:
                break
            p = q
        if p.is_constant():
            return True
    return False


def torsion_window(B: int) -> UPoly:
    """Product of Phi_d for d <= B: the monic polynomial whose roots are the
    roots of unity of order at most B."""
    if B < 1:
        raise ValueError("window must be at least 1")
    acc = UPoly.const(1)
    for d in range(1, B + 1):
        acc = acc * cyclotomic(d)
    return acc


def common_torsion_zeros(f: UPoly, g: UPoly, B: int) -> UPoly:
    """Monic squarefree polynomial vanishing exactly at the t with f(t) and
    g(t) both roots of unity of order <= B."""
    if f.is_constant() or g.is_constant():
        raise ValueError("f and g must be nonconstant")
    if B < 1:
        raise ValueError("window must be at least 1")
    # split the window by order: pieces for distinct (a, b) are coprime, so
    # small pairwise gcds replace one gcd of two large polynomials
    fa = [cyclotomic(a)(f) for a in range(1, B + 1)]
    gb = [cyclotomic(b)(g) for b in range(1, B + 1)]
    acc = UPoly.const(1)
    for p in fa:
        for q in gb:
            d = gcd_monic(p, q)
            if not d.is_constant():
                acc = acc * radical(d)
    return acc


# exceptional factors


def _norm_binomial(i: int, j: int, k: int, kind: str) -> MPoly:
    """Product over primitive k-th roots rho of the binomial.

    kind "sub": X^i - rho*Y^j -> Y^{j phi} Phi_k(X^i / Y^j)
    kind "mono": X^i*Y^j - rho -> Phi_k(X^i Y^j)
    """
    phi = cyclotomic(k)
    n = phi.degree
    terms = {}
    for e, c in enumerate(phi.coeffs):
        if not c:
            continue
        if kind == "sub":
            terms[(i * e, j * (n - e))] = c
        else:
            terms[(i * e, j * e)] = c
    return MPoly(terms, 2)


@dataclass(frozen=True)
class ExceptionalFactorFlag:
    factor: MPoly
    form: str  # "X^i - rho*Y^j" or "X^i*Y^j - rho"
    i: int
    j: int
    rho_order: int

    def __bool__(self) -> bool:
        return False


def find_exceptional_factor(H: MPoly) -> ExceptionalFactorFlag | None:
    """Look for a factor X^i - rho Y^j or X^i Y^j - rho, rho a root of unity.

    H has rational coefficients, so it is divisible by such a binomial with
    rho of order k iff it is divisible by the product of its Galois
    conjugates (these are pairwise coprime), which is a rational norm form.
    """
    if H.arity != 2:
        raise ValueError("curve must have arity 2")
    deg = H.total_degree()
    if deg is None or deg == 0:
        return None
    for k in range(1, 2 * deg * deg + 1):
        phik = euler_phi(k)
        if phik > deg:
            continue
        for i in range(deg + 1):
            for j in range(deg + 1):
                if i == 0 and j == 0:
                    continue
                if phik * (i + j) <= deg:
                    form = _norm_binomial(i, j, k, "mono")
                    if form.divides(H):
                        return ExceptionalFactorFlag(form, "X^i*Y^j - rho", i, j, k)
                if i and j and phik * max(i, j) <= deg:
                    form = _norm_binomial(i, j, k, "sub")
                    if form.divides(H):
                        return ExceptionalFactorFlag(form, "X^i - rho*Y^j", i, j, k)
    return None


# prime-field scanning


@dataclass(frozen=True)
class TorsionScanConfig:
    max_order: int
    prime_count: int = 3
    prime_floor: int = 10**4
    prime_search_limit: int = 10**5  # multiples of L tried per order pair
    certify: bool = False

    def __post_init__(self):
        if self.max_order < 1 or self.prime_count < 1:
            raise ValueError("max_order and prime_count must be positive")


def default_scan_bound(H: MPoly) -> int:
    d = H.total_degree() or 0
    return 6 * (d + 1) ** 2


@dataclass(frozen=True)
class TorsionPoint:
    order_x: int
    order_y: int
    index_x: int
    index_y: int


@dataclass
class TorsionPointSet:
    curve: MPoly
    points: list[TorsionPoint]
    scan_bound: int
    primes_used: list[int]
    skipped_pairs: list[tuple[int, int]] = field(default_factory=list)
    certified: bool = False

    @property
    def count(self) -> int:
        return len(self.points)

    def beukers_smyth_bound(self) -> int:
        return 11 * self.curve.total_degree() ** 2


def admissible_primes(L: int, count: int, floor: int, limit: int) -> list[int]:
    """The first ``count`` primes p > floor with p = 1 mod L."""
    out = []
    k = max(1, floor // L)
    tried = 0
    while len(out) < count and tried < limit:
        p = k * L + 1
        if p > floor and isprime(p):
            out.append(p)
        k += 1
        tried += 1
    return out


def element_of_order(L: int, p: int) -> int:
    """Deterministic element of exact multiplicative order L in F_p."""
    qs = primefactors(L)
    for x in range(2, p):
        w = pow(x, (p - 1) // L, p)
        if all(pow(w, L // q, p) != 1 for q in qs):
            return w
    raise ArithmeticError(f"no element of order {L} mod {p}")


def _units(n: int) -> list[int]:
    return [i for i in range(n) if gcd(i, n) == 1]


def _exact_zero(H: MPoly, a: int, i: int, b: int, j: int) -> bool:
    """H(zeta_a^i, zeta_b^j) == 0 in Q(zeta_L), L = lcm(a, b)."""
    L = lcm(a, b)
    phi = cyclotomic(L)
    ex = (i * (L // a)) % L
    ey = (j * (L // b)) % L
    acc = [0] * L
    for (u, v), c in H.items():
        acc[(u * ex + v * ey) % L] += c
    return (UPoly(acc) % phi).is_zero


def count_torsion_points(H: MPoly, cfg: TorsionScanConfig | None = None) -> TorsionPointSet | ExceptionalFactorFlag:
    """Points of H = 0 whose coordinates are roots of unity of order <= B."""
    if H.is_zero:
        raise ValueError("zero curve")
    if H.arity != 2:
        raise ValueError("curve must have arity 2")
    if cfg is None:
        cfg = TorsionScanConfig(max_order=default_scan_bound(H))
    flag = find_exceptional_factor(H)
    if flag is not None:
        return flag
    B = cfg.max_order
    points: list[TorsionPoint] = []
    primes_used: set[int] = set()
    skipped = []
    for a in range(1, B + 1):
        for b in range(1, B + 1):
            L = lcm(a, b)
            primes = admissible_primes(L, cfg.prime_count, cfg.prime_floor, cfg.prime_search_limit)
            if len(primes) < cfg.prime_count:
                msg = f"only {len(primes)} admissible primes for orders ({a}, {b}); pair skipped"
                warnings.warn(msg)
                skipped.append((a, b))
                continue
            candidates = [(i, j) for i in _units(a) for j in _units(b)]
            for p in primes:
                w = element_of_order(L, p)
                zx = pow(w, L // a, p)
                zy = pow(w, L // b, p)
                candidates = [(i, j) for i, j in candidates
                              if H.eval_mod((pow(zx, i, p), pow(zy, j, p)), p) == 0]
                if not candidates:
                    break
            if candidates:
                primes_used.update(primes)
            for i, j in candidates:
                if cfg.certify and not _exact_zero(H, a, i, b, j):
                    log.warning("candidate (%d,%d,%d,%d) failed exact check", a, i, b, j)
                    continue
                points.append(TorsionPoint(a, b, i, j))
    return TorsionPointSet(H, points, B, sorted(primes_used), skipped, cfg.certify)


def recheck_point(H: MPoly, pt: TorsionPoint, primes: list[int]) -> bool:
    """Zero test of a reported point under additional admissible primes."""
    L = lcm(pt.order_x, pt.order_y)
    for p in primes:
        if (p - 1) % L:
            raise ValueError(f"{p} is not 1 mod {L}")
        w = element_of_order(L, p)
        x = pow(w, (L // pt.order_x) * pt.index_x, p)
        y = pow(w, (L // pt.order_y) * pt.index_y, p)
        if H.eval_mod((x, y), p):
            return False
    return True
