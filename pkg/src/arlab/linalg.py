"""Fraction-free exact linear algebra over integral domains."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("Bareiss step is not exact")
        return q
    if isinstance(a, Fraction) or isinstance(b, Fraction):
        return a / b
    return a.exact_quotient(b)


def _is_zero(x) -> bool:
    return not x


def bareiss_det(matrix: Sequence[Sequence], zero=0, one=1):
    """Determinant by Bareiss elimination.

    Entries may be ints, Fractions or polynomials with ``exact_quotient``.
    Row swaps flip the sign; the result is exact.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = m[i][j] * pivot - mik * m[k][j]
                m[i][j] = _exact_div(num, prev)
            m[i][k] = zero
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def _primitive(vec: list[int]) -> list[int]:
    g = 0
    for v in vec:
        g = gcd(g, v)
    if g > 1:
        vec = [v // g for v in vec]
    for v in vec:
        if v:
            if v < 0:
                vec = [-x for x in vec]
            break
    return vec


def integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def echelon(rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix.

    Returns the nonzero echelon rows and their pivot columns.  Rows are kept
    primitive so entries stay small.
    """
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                if piv is None or abs(m[i][c]) < abs(m[piv][c]):
                    piv = i
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x * p - f * y for x, y in zip(m[i], m[r])]
                g = 0
                for x in m[i]:
                    g = gcd(g, x)
                if g > 1:
                    m[i] = [x // g for x in m[i]]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def integer_nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[int]]:
    """Basis of the rational right nullspace of ``rows``, each vector scaled to
    a primitive integer vector with positive first nonzero entry.

    Vectors are returned in order of their free column; the vector for free
    column j is supported on pivot columns < j and j itself.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, pivots = echelon(integer_rows(rows), ncols)
    pivset = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivset:
            continue
        vec = [Fraction(0)] * ncols
        vec[j] = Fraction(1)
        for row, pc in zip(red, pivots):
            if pc < j and row[j]:
                vec[pc] = Fraction(-row[j], row[pc])
        den = 1
        for x in vec:
            den = lcm(den, x.denominator)
        basis.append(_primitive([int(x * den) for x in vec]))
    return basis


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return len(echelon(integer_rows(rows), ncols)[1])
