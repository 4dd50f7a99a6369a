"""Small exact number-theory helpers used across the package.

Rational numbers are ``fractions.Fraction`` throughout (always in lowest
terms with positive denominator, arithmetic exact); this module adds the
p-adic valuation and the handful of mod-p utilities everything else needs.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UsageError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_odd_prime(n: int) -> bool:
    return n != 2 and is_prime(n)


def vp(x: Fraction | int, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise UsageError("valuation_of_zero", "v_p(0) is undefined")
    v = 0
    num = x.numerator
    while num % p == 0:
        num //= p
        v += 1
    den = x.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def multiplicative_order(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise UsageError("order_of_zero", "0 has no multiplicative order")
    k, x = 1, a
    while x != 1:
        x = x * a % p
        k += 1
    return k


def smallest_primitive_root(p: int) -> int:
    for b in range(2, p):
        if multiplicative_order(b, p) == p - 1:
            return b
    raise UsageError("no_primitive_root", f"{p} has no primitive root")


def legendre_symbol(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    s = pow(a, (p - 1) // 2, p)
    return 1 if s == 1 else -1
