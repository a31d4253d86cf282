"""Sparse multivariate polynomials over Q in variables X1..X_arity.

Terms are kept in a dict from exponent tuples to nonzero Fractions.  All
orderings use graded-lex: total degree first, then lexicographic with X1
most significant.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .upoly import UPoly, as_rat

MGCD_MAX_ARITY = 3


def grlex_key(e: tuple) -> tuple:
    return (sum(e), e)


class ArityError(ValueError):
    pass


class MPoly:
    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), arity: int = 1):
        if arity < 1:
            raise ArityError("arity must be at least 1")
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != arity:
                raise ArityError(f"exponent {e} does not have length {arity}")
            if any(x < 0 for x in e):
                raise ValueError("exponents must be nonnegative")
            c = as_rat(c)
            if c:
                d[e] = d.get(e, 0) + c
                if not d[e]:
                    del d[e]
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "_terms", d)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, d: dict, arity: int) -> "MPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "arity", arity)
        object.__setattr__(p, "_terms", d)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    def __reduce__(self):
        return (MPoly, (dict(self._terms), self.arity))

    # constructors

    @classmethod
    def const(cls, c, arity: int) -> "MPoly":
        c = as_rat(c)
        return cls._raw({(0,) * arity: c} if c else {}, arity)

    @classmethod
    def zero(cls, arity: int) -> "MPoly":
        return cls._raw({}, arity)

    @classmethod
    def var(cls, i: int, arity: int) -> "MPoly":
        if not 1 <= i <= arity:
            raise ArityError(f"X{i} is outside arity {arity}")
        e = [0] * arity
        e[i - 1] = 1
        return cls._raw({tuple(e): Fraction(1)}, arity)

    @classmethod
    def from_upoly(cls, p: UPoly, arity: int = 1, var: int = 1) -> "MPoly":
        d = {}
        for k, c in enumerate(p.coeffs):
            if c:
                e = [0] * arity
                e[var - 1] = k
                d[tuple(e)] = c
        return cls._raw(d, arity)

    # queries

    @property
    def terms(self) -> Mapping:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def term_count(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int | None:
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    @property
    def degree(self) -> int | None:
        return self.total_degree()

    def degree_in(self, i: int) -> int | None:
        if not self._terms:
            return None
        return max(e[i - 1] for e in self._terms)

    def variables(self) -> list[int]:
        used = set()
        for e in self._terms:
            for i, x in enumerate(e):
                if x:
                    used.add(i + 1)
        return sorted(used)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.arity in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.arity, Fraction(0))

    def leading_term(self) -> tuple[tuple, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    @property
    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1] if self._terms else Fraction(0)

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.arity == other.arity and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.arity, frozenset(self._terms.items()))))
        return self._hash

    def __repr__(self) -> str:
        from .expr import print_canonical

        return f"MPoly({print_canonical(self)!r}, arity={self.arity})"

    def __str__(self) -> str:
        from .expr import print_canonical

        return print_canonical(self)

    # arithmetic

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.arity != self.arity:
                raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other, self.arity)
        raise TypeError(f"cannot combine MPoly with {type(other).__name__}")

    def __add__(self, other) -> "MPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        d = dict(self._terms)
        for e, c in other._terms.items():
            v = d.get(e, 0) + c
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return MPoly._raw(d, self.arity)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({e: -c for e, c in self._terms.items()}, self.arity)

    def __sub__(self, other) -> "MPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            c = as_rat(other)
            if not c:
                return MPoly.zero(self.arity)
            return MPoly._raw({e: v * c for e, v in self._terms.items()}, self.arity)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        d: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return MPoly._raw({e: c for e, c in d.items() if c}, self.arity)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.const(1, self.arity)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divrem(self, other: "MPoly") -> tuple["MPoly", "MPoly"]:
        """Multivariate division by a single divisor in graded-lex order."""
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = other.leading_term()
        rest = [(e, c) for e, c in other._terms.items() if e != le]
        p = dict(self._terms)
        q: dict = {}
        r: dict = {}
        while p:
            e = max(p, key=grlex_key)
            c = p.pop(e)
            if all(x >= y for x, y in zip(e, le)):
                shift = tuple(x - y for x, y in zip(e, le))
                f = c / lc
                q[shift] = q.get(shift, 0) + f
                for e2, c2 in rest:
                    t = tuple(x + y for x, y in zip(e2, shift))
                    v = p.get(t, 0) - f * c2
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
            else:
                r[e] = c
        return (MPoly._raw({e: c for e, c in q.items() if c}, self.arity),
                MPoly._raw(r, self.arity))

    def exact_quotient(self, other: "MPoly") -> "MPoly":
        q, r = self.divrem(other)
        if r:
            raise ValueError("division is not exact")
        return q

    def divides(self, other: "MPoly") -> bool:
        if self.is_zero:
            return other.is_zero
        return other.divrem(self)[1].is_zero

    def normalized(self) -> "MPoly":
        """Scale so the graded-lex leading coefficient is 1."""
        if not self._terms:
            return self
        lc = self.leading_coefficient
        if lc == 1:
            return self
        return self * (1 / lc)

    monic = normalized

    # substitution

    def compose(self, images: Sequence["MPoly"]) -> "MPoly":
        """Substitute X_i -> images[i-1]; all images must share one arity."""
        if len(images) != self.arity:
            raise ArityError(f"need {self.arity} images, got {len(images)}")
        target = images[0].arity
        if any(im.arity != target for im in images):
            raise ArityError("images have different arities")
        powers: list[dict[int, MPoly]] = [{0: MPoly.const(1, target), 1: im} for im in images]

        def pw(i: int, k: int) -> MPoly:
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        acc = MPoly.zero(target)
        for e, c in self._terms.items():
            term = MPoly.const(c, target)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            acc = acc + term
        return acc

    def substitute(self, i: int, image: "MPoly") -> "MPoly":
        """Replace X_i by ``image`` (same arity)."""
        image = self._coerce(image)
        images = [MPoly.var(j, self.arity) for j in range(1, self.arity + 1)]
        images[i - 1] = image
        return self.compose(images)

    def __call__(self, *point):
        if len(point) != self.arity:
            raise ArityError(f"need {self.arity} values, got {len(point)}")
        acc = 0
        for e, c in self._terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x ** k
            acc = acc + t
        return acc

    def eval_mod(self, point: Sequence[int], p: int) -> int:
        acc = 0
        for e, c in self._terms.items():
            t = c.numerator * pow(c.denominator, -1, p)
            for x, k in zip(point, e):
                if k:
                    t = t * pow(x, k, p)
            acc = (acc + t) % p
        return acc

    def to_upoly(self, var: int = 1) -> UPoly:
        """View as a univariate polynomial in X_var; other variables must be absent."""
        coeffs: dict[int, Fraction] = {}
        for e, c in self._terms.items():
            if any(x for j, x in enumerate(e) if j != var - 1):
                raise ValueError(f"polynomial involves variables other than X{var}")
            coeffs[e[var - 1]] = c
        if not coeffs:
            return UPoly()
        return UPoly([coeffs.get(k, 0) for k in range(max(coeffs) + 1)])

    # recursive view in one main variable

    def coeffs_in(self, var: int) -> dict[int, "MPoly"]:
        """Coefficients w.r.t. X_var, each an MPoly of the same arity free of X_var."""
        out: dict[int, dict] = {}
        for e, c in self._terms.items():
            k = e[var - 1]
            e2 = e[: var - 1] + (0,) + e[var:]
            out.setdefault(k, {})[e2] = c
        return {k: MPoly._raw(d, self.arity) for k, d in out.items()}

    @classmethod
    def from_coeffs_in(cls, var: int, coeffs: Mapping[int, "MPoly"], arity: int) -> "MPoly":
        d: dict = {}
        for k, p in coeffs.items():
            for e, c in p._terms.items():
                e2 = e[: var - 1] + (e[var - 1] + k,) + e[var:]
                d[e2] = d.get(e2, 0) + c
        return cls._raw({e: c for e, c in d.items() if c}, arity)


def specialize(F: MPoly, alphas: Sequence) -> UPoly:
    """F(T, alpha_2, ..., alpha_arity) as a univariate polynomial."""
    if len(alphas) != F.arity - 1:
        raise ArityError(f"need {F.arity - 1} specialization values, got {len(alphas)}")
    alphas = [as_rat(a) for a in alphas]
    coeffs: dict[int, Fraction] = {}
    for e, c in F.items():
        v = c
        for a, k in zip(alphas, e[1:]):
            if k:
                v *= a ** k
        if v:
            coeffs[e[0]] = coeffs.get(e[0], 0) + v
    if not coeffs:
        return UPoly()
    return UPoly([coeffs.get(k, 0) for k in range(max(coeffs) + 1)])


# gcd


def _prem(a: MPoly, b: MPoly, var: int) -> MPoly:
    """Pseudo-remainder of a by b with respect to X_var."""
    db = b.degree_in(var)
    cb = b.coeffs_in(var)
    lcb = cb[db]
    r = a
    while not r.is_zero and r.degree_in(var) >= db:
        dr = r.degree_in(var)
        cr = r.coeffs_in(var)
        shift = MPoly.var(var, a.arity) ** (dr - db)
        r = r * lcb - cr[dr] * shift * b
    return r


def _content(p: MPoly, var: int, rest: tuple) -> MPoly:
    g = MPoly.zero(p.arity)
    for c in p.coeffs_in(var).values():
        g = _gcd(g, c, rest)
        if g.is_constant() and not g.is_zero:
            return MPoly.const(1, p.arity)
    return g


def _gcd(a: MPoly, b: MPoly, variables: tuple) -> MPoly:
    if a.is_zero:
        return b.normalized()
    if b.is_zero:
        return a.normalized()
    active = [v for v in variables if (a.degree_in(v) or 0) > 0 or (b.degree_in(v) or 0) > 0]
    if not active:
        return MPoly.const(1, a.arity)
    x, rest = active[0], tuple(active[1:])
    ca = _content(a, x, rest)
    cb = _content(b, x, rest)
    c = _gcd(ca, cb, rest)
    pa = a.exact_quotient(ca)
    pb = b.exact_quotient(cb)
    if pa.degree_in(x) < pb.degree_in(x):
        pa, pb = pb, pa
    while not pb.is_zero and pb.degree_in(x) > 0:
        r = _prem(pa, pb, x)
        pa = pb
        pb = r if r.is_zero else r.exact_quotient(_content(r, x, rest))
    if not pb.is_zero:
        # nonzero remainder free of x: primitive parts are coprime in x
        g = MPoly.const(1, a.arity)
    else:
        g = pa.exact_quotient(_content(pa, x, rest))
    return (c * g).normalized()


def mgcd(a: MPoly, b: MPoly) -> MPoly:
    """Normalized gcd via recursive primitive PRS in the main variable."""
    if a.arity != b.arity:
        raise ArityError(f"arity mismatch: {a.arity} vs {b.arity}")
    if a.arity > MGCD_MAX_ARITY:
        raise ArityError(f"mgcd: desk-scale limit is arity {MGCD_MAX_ARITY}, got {a.arity}")
    if a.is_zero and b.is_zero:
        raise ValueError("mgcd of two zero polynomials")
    return _gcd(a, b, tuple(range(1, a.arity + 1)))


def resultant_in(a: MPoly, b: MPoly, var: int) -> MPoly:
    """Res_{X_var}(a, b) by a fraction-free Sylvester determinant."""
    from .upoly import sylvester_resultant

    if a.arity != b.arity:
        raise ArityError("arity mismatch")
    if a.is_zero or b.is_zero:
        return MPoly.zero(a.arity)
    ca, cb = a.coeffs_in(var), b.coeffs_in(var)
    zero = MPoly.zero(a.arity)
    la = [ca.get(k, zero) for k in range(a.degree_in(var) + 1)]
    lb = [cb.get(k, zero) for k in range(b.degree_in(var) + 1)]
    return sylvester_resultant(la, lb, zero, MPoly.const(1, a.arity))
