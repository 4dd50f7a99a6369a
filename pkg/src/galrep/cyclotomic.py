"""Exact arithmetic in the cyclotomic fields Q(zeta_m).

A value is a vector of rationals over the power basis
{zeta_m^i : 0 <= i < deg Phi_m}, canonically reduced modulo the m-th
cyclotomic polynomial Phi_m.  The representation is canonical, so two values
are equal exactly when their coefficient vectors agree.  Addition,
subtraction and multiplication are closed and exact; division is
deliberately not provided (conjugate-multiplication covers every norm-style
computation the package needs).

Operations never mix conductors: callers lift both operands to a common
conductor (usually the lcm) with :meth:`Cyclotomic.lift` first.

Phi_m is obtained by exact division of x^m - 1 by the Phi_d for proper
divisors d; together with a precomputed table of x^e mod Phi_m this keeps
multiplication a sparse convolution followed by one table-driven reduction.

All values are immutable and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import mpmath

from .errors import UsageError

_ZERO = Fraction(0)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, ascending degree."""
    if m < 1:
        raise UsageError("bad_conductor", f"conductor must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _exact_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    # den is monic; division of integer polynomials known to be exact
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    out = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for i in range(dd + 1):
                num[k + i] -= c * den[i]
    if any(num):
        raise UsageError("inexact_division", "polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """x^e mod Phi_m for e = 0..m-1, each as an integer vector of length deg Phi_m."""
    phi = cyclotomic_polynomial(m)
    d = len(phi) - 1
    rows: list[tuple[int, ...]] = []
    for e in range(d):
        rows.append(tuple(1 if i == e else 0 for i in range(d)))
    if d < m:
        cur = [-c for c in phi[:d]]  # x^d mod Phi_m
        rows.append(tuple(cur))
        for _ in range(d + 1, m):
            lead = cur[d - 1]
            cur = [0] + cur[: d - 1]
            if lead:
                head = rows[d]
                cur = [cur[i] + lead * head[i] for i in range(d)]
            rows.append(tuple(cur))
    return tuple(rows)


def _reduce_terms(m: int, terms: Mapping[int, Fraction]) -> tuple[Fraction, ...]:
    table = _power_table(m)
    d = len(table[0])
    acc = [_ZERO] * d
    for e, c in terms.items():
        if not c:
            continue
        e %= m
        if e < d:
            acc[e] += c
        else:
            for i, r in enumerate(table[e]):
                if r:
                    acc[i] += c * r
    return tuple(acc)


@dataclass(frozen=True)
class Cyclotomic:
    """An element of Q(zeta_m) in the reduced power basis."""

    m: int
    coeffs: tuple[Fraction, ...]

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_terms(cls, m: int, terms: Mapping[int, Fraction | int]) -> "Cyclotomic":
        """Sum of c * zeta_m^e over the (exponent -> coefficient) mapping."""
        return cls(m, _reduce_terms(m, {e: Fraction(c) for e, c in terms.items()}))

    @classmethod
    def root_of_unity(cls, m: int, exponent: int) -> "Cyclotomic":
        return cls.from_terms(m, {exponent: 1})

    @classmethod
    def rational(cls, m: int, value: Fraction | int) -> "Cyclotomic":
        return cls.from_terms(m, {0: Fraction(value)})

    @classmethod
    def zero(cls, m: int) -> "Cyclotomic":
        return cls.from_terms(m, {})

    @classmethod
    def one(cls, m: int) -> "Cyclotomic":
        return cls.rational(m, 1)

    # -- ring operations ---------------------------------------------------

    def _check_conductor(self, other: "Cyclotomic") -> None:
        if self.m != other.m:
            raise UsageError(
                "conductor_mismatch",
                f"operands have conductors {self.m} and {other.m}; lift to a common conductor first",
            )

    def __add__(self, other: "Cyclotomic") -> "Cyclotomic":
        self._check_conductor(other)
        return Cyclotomic(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Cyclotomic") -> "Cyclotomic":
        self._check_conductor(other)
        return Cyclotomic(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.m, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Cyclotomic(self.m, tuple(a * c for a in self.coeffs))
        self._check_conductor(other)
        terms: dict[int, Fraction] = {}
        nz_other = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in nz_other:
                e = i + j
                prod = a * b
                if e in terms:
                    terms[e] += prod
                else:
                    terms[e] = prod
        return Cyclotomic(self.m, _reduce_terms(self.m, terms))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Cyclotomic":
        if n < 0:
            raise UsageError("negative_power", "cyclotomic inverses are not provided")
        result = Cyclotomic.one(self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Image under zeta_m -> zeta_m^(-1) (complex conjugation)."""
        terms = {(-e) % self.m: c for e, c in enumerate(self.coeffs) if c}
        return Cyclotomic(self.m, _reduce_terms(self.m, terms))

    def lift(self, conductor: int) -> "Cyclotomic":
        """Rewrite in Q(zeta_M) for a multiple M of the own conductor."""
        if conductor % self.m:
            raise UsageError(
                "conductor_mismatch",
                f"cannot lift conductor {self.m} into non-multiple {conductor}",
            )
        scale = conductor // self.m
        terms = {e * scale: c for e, c in enumerate(self.coeffs) if c}
        return Cyclotomic.from_terms(conductor, terms)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise UsageError("not_rational", "value is not a rational number")
        return self.coeffs[0]

    def embed(self, precision: int = 20) -> complex:
        """Numeric image under zeta_m -> exp(2*pi*i/m).

        For display and sign disambiguation only; equality decisions always
        use the exact coefficient vectors.
        """
        with mpmath.workdps(precision):
            total = mpmath.mpc(0)
            for e, c in enumerate(self.coeffs):
                if c:
                    ratio = mpmath.mpf(c.numerator) / c.denominator
                    total += ratio * mpmath.expjpi(mpmath.mpf(2 * e) / self.m)
            return complex(total)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Cyclotomic":
        coeffs = {e: Fraction(s) for e, s in enumerate(data["coeffs"])}
        return cls.from_terms(int(data["m"]), coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                sign = "-" if c < 0 else ("+" if parts else "")
                power = f"z{self.m}" if e == 1 else f"z{self.m}^{e}"
                parts.append(f"{sign}{mag}{power}")
        return "".join(parts)


def common_conductor(values: Iterable[Cyclotomic]) -> int:
    m = 1
    for v in values:
        m = math.lcm(m, v.m)
    return m
