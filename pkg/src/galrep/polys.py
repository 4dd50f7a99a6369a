"""Dense univariate polynomials over Q as ascending coefficient lists.

Everything here is exact.  Resultants go through the Sylvester matrix with
Bareiss fraction-free elimination over the integers (denominators are
cleared first and accounted for), which keeps intermediate entries at minor
size instead of exploding.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Poly = list[Fraction]


def trim(c: Sequence[Fraction]) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(c: Sequence[Fraction]) -> int:
    """Degree of a trimmed polynomial; -1 for the zero polynomial."""
    return len(trim(c)) - 1


def add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return trim(out)


def scale(a: Sequence[Fraction], c: Fraction) -> Poly:
    return trim([x * c for x in a])


def evaluate(a: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(a)):
        acc = acc * x + c
    return acc


def derivative(a: Sequence[Fraction]) -> Poly:
    return trim([i * c for i, c in enumerate(a)][1:])


def shift(a: Sequence[Fraction], h: Fraction) -> Poly:
    """Taylor shift: coefficients of a(x + h)."""
    out = [Fraction(c) for c in a]
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += h * out[j + 1]
    return trim(out)


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _clear_denominators(a: Sequence[Fraction]) -> tuple[list[int], int]:
    lcm = 1
    for c in a:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [int(c * lcm) for c in a], lcm


def resultant(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """Res(a, b) via the Sylvester determinant (exact)."""
    a, b = trim(a), trim(b)
    da, db = len(a) - 1, len(b) - 1
    if da < 0 or db < 0:
        return Fraction(0)
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    ia, la = _clear_denominators(a)
    ib, lb = _clear_denominators(b)
    n = da + db
    rows: list[list[int]] = []
    for k in range(db):  # rows of x^k * a
        row = [0] * n
        for i, c in enumerate(ia):
            row[n - 1 - (k + i)] = c
        rows.append(row)
    for k in range(da):  # rows of x^k * b
        row = [0] * n
        for i, c in enumerate(ib):
            row[n - 1 - (k + i)] = c
        rows.append(row)
    det = _bareiss_det(rows)
    return Fraction(det, la**db * lb**da)


def discriminant(a: Sequence[Fraction]) -> Fraction:
    """Discriminant of a nonconstant polynomial, zero iff a has a repeated root."""
    a = trim(a)
    d = len(a) - 1
    res = resultant(a, derivative(a))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res / a[-1]


def interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """Unique polynomial of degree < len(points) through the given points.

    Newton's divided differences; the abscissae must be distinct.
    """
    xs = [Fraction(x) for x, _ in points]
    coeff = [Fraction(y) for _, y in points]
    n = len(points)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coeff[i] = (coeff[i] - coeff[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form into the monomial basis
    poly: Poly = []
    for i in range(n - 1, -1, -1):
        poly = add(mul(poly, [-xs[i], Fraction(1)]), [coeff[i]])
    return poly
