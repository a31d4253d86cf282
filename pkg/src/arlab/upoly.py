"""Dense univariate polynomials over Q.

Coefficients are :class:`fractions.Fraction` values stored low degree first.
The zero polynomial has an empty coefficient tuple and its degree is ``None``;
code that needs a degree of zero must handle that case explicitly.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

Rat = Fraction


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class UPoly:
    """Immutable polynomial in T with rational coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip([as_rat(c) for c in coeffs]))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "UPoly":
        # coeffs already Fractions and stripped
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    def __reduce__(self):
        return (UPoly, (self.coeffs,))

    # constructors

    @classmethod
    def const(cls, c) -> "UPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "UPoly":
        return cls([0] * k + [c])

    @classmethod
    def T(cls) -> "UPoly":
        return cls((0, 1))

    # basic queries

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if len(self.coeffs) > 1:
            raise ValueError("polynomial is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(("UPoly", self.coeffs)))
        return self._hash

    def __repr__(self) -> str:
        from .expr import print_canonical

        return f"UPoly({print_canonical(self)!r})"

    def __str__(self) -> str:
        from .expr import print_canonical

        return print_canonical(self)

    # arithmetic

    @staticmethod
    def _coerce(x) -> "UPoly":
        if isinstance(x, UPoly):
            return x
        return UPoly.const(as_rat(x))

    def __add__(self, other) -> "UPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly._raw(_strip(out))

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "UPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UPoly":
        if isinstance(other, (int, Fraction)):
            c = as_rat(other)
            if not c:
                return UPoly._raw(())
            return UPoly._raw(tuple(x * c for x in self.coeffs))
        if not isinstance(other, UPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return UPoly._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = UPoly._raw((Fraction(1),))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divrem(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        b = other.coeffs
        db = len(b) - 1
        r = list(self.coeffs)
        if len(r) - 1 < db:
            return UPoly._raw(()), self
        inv = 1 / b[-1]
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if not c:
                continue
            c = c * inv
            q[k - db] = c
            for j in range(db + 1):
                r[k - db + j] -= c * b[j]
        return UPoly._raw(_strip(q)), UPoly._raw(_strip(r[:db]))

    def __divmod__(self, other):
        return self.divrem(other)

    def __floordiv__(self, other) -> "UPoly":
        return self.divrem(other)[0]

    def __mod__(self, other) -> "UPoly":
        return self.divrem(other)[1]

    def exact_quotient(self, other: "UPoly") -> "UPoly":
        q, r = self.divrem(other)
        if r:
            raise ValueError("division is not exact")
        return q

    def divides(self, other: "UPoly") -> bool:
        """True if ``self`` divides ``other``."""
        if self.is_zero:
            return other.is_zero
        return other.divrem(self)[1].is_zero

    def monic(self) -> "UPoly":
        if self.is_zero:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        inv = 1 / lc
        return UPoly._raw(tuple(c * inv for c in self.coeffs))

    normalized = monic

    def derivative(self) -> "UPoly":
        return UPoly._raw(_strip([k * c for k, c in enumerate(self.coeffs)][1:]))

    def __call__(self, x):
        """Evaluate at a scalar, or compose when ``x`` is a polynomial."""
        if isinstance(x, UPoly):
            return compose(self, x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mod(self, x: int, p: int) -> int:
        """Evaluate at ``x`` in the prime field F_p."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c.numerator * pow(c.denominator, -1, p)) % p
        return acc


def compose(h: UPoly, f: UPoly) -> UPoly:
    """h(f(T)) by Horner's rule."""
    acc = UPoly._raw(())
    for c in reversed(h.coeffs):
        acc = acc * f + c
    return acc


def gcd_monic(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd; gcd(0, 0) is 0."""
    a = a.monic()
    b = b.monic()
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        a, b = b, (a % b).monic()
    return a


def lcm_monic(a: UPoly, b: UPoly) -> UPoly:
    if a.is_zero or b.is_zero:
        return UPoly()
    g = gcd_monic(a, b)
    return (a.exact_quotient(g) * b).monic()


def xgcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Return (g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = a, b
    s0, s1 = UPoly.const(1), UPoly()
    t0, t1 = UPoly(), UPoly.const(1)
    while not r1.is_zero:
        q, r = r0.divrem(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    inv = 1 / r0.leading_coefficient
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_decompose(a: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm.  Returns [(part, multiplicity), ...] with nonconstant
    pairwise coprime squarefree parts whose product of powers is monic(a),
    highest multiplicity first."""
    if a.is_zero:
        raise ValueError("squarefree decomposition of the zero polynomial")
    a = a.monic()
    if a.is_constant():
        return []
    da = a.derivative()
    c = gcd_monic(a, da)
    w = a.exact_quotient(c)
    y = da.exact_quotient(c)
    z = y - w.derivative()
    out = []
    i = 1
    while not w.is_constant():
        g = gcd_monic(w, z)
        w = w.exact_quotient(g)
        y = z.exact_quotient(g)
        z = y - w.derivative()
        if not g.is_constant():
            out.append((g, i))
        i += 1
    return out[::-1]


def radical(a: UPoly) -> UPoly:
    """Monic product of the distinct irreducible factors of ``a``."""
    if a.is_zero:
        raise ValueError("radical of the zero polynomial")
    a = a.monic()
    if a.is_constant():
        return UPoly.const(1)
    return a.exact_quotient(gcd_monic(a, a.derivative())).monic()


def is_squarefree(a: UPoly) -> bool:
    return gcd_monic(a, a.derivative()).is_constant()


def product(polys: Sequence[UPoly]) -> UPoly:
    acc = UPoly.const(1)
    for p in polys:
        acc = acc * p
    return acc


def resultant(f: UPoly, g: UPoly):
    """Implicit equation of the curve t -> (f(t), g(t)).

    Returns the MPoly ``Res_T(f(T) - X1, g(T) - X2)`` of arity 2, computed as
    the Sylvester determinant (rows of ``f - X1`` on top) by fraction-free
    elimination.  Its X1-degree is deg g and its X2-degree is deg f.
    """
    from .mpoly import MPoly

    if f.is_constant() or g.is_constant():
        raise ValueError("implicitization needs nonconstant f and g")
    x1 = MPoly.var(1, 2)
    x2 = MPoly.var(2, 2)
    a = [MPoly.const(c, 2) for c in f.coeffs]
    a[0] = a[0] - x1
    b = [MPoly.const(c, 2) for c in g.coeffs]
    b[0] = b[0] - x2
    return sylvester_resultant(a, b, MPoly.const(0, 2), MPoly.const(1, 2))


def sylvester_matrix(a: Sequence, b: Sequence, zero) -> list[list]:
    """Sylvester matrix of two coefficient lists (low degree first)."""
    m = len(a) - 1
    n = len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return rows


def sylvester_resultant(a: Sequence, b: Sequence, zero, one):
    """Resultant of two polynomials given by coefficient lists over an
    integral domain whose elements support exact ``exact_quotient``."""
    from .linalg import bareiss_det

    if len(a) < 2 and len(b) < 2:
        return one
    return bareiss_det(sylvester_matrix(a, b, zero), zero=zero, one=one)
