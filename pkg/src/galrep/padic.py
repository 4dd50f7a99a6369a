"""Exact p-adic analysis of the input polynomial.

Inputs are monic degree-p polynomials over an unramified p-adic base field
K (so the valuation of a rational number is the plain p-adic one).  This
module computes the discriminant, the Newton polygon, a totally-ramified
irreducibility certificate, the all-root-differences-share-one-valuation
check (equivalently: the roots form a single cluster, so the curve
y^2 = f(x) has potentially good reduction), the combined hypothesis report
for a maximal inertia image, and the conductor exponent in the monogenic
case.

Irreducibility is certificate-based: a one-segment Newton polygon with
slope denominator exactly p (for f itself or an integer shift of it) proves
f irreducible over every unramified extension of Q_p with K(root)/K totally
ramified of degree p.  Anything else is reported as "undetermined", never
as reducible; classification refuses to proceed on an undetermined
certificate.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import polys
from .arith import is_odd_prime, vp
from .errors import InputError, UsageError

CERTIFIED = "certified_totally_ramified"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class InputPolynomial:
    """A monic degree-p polynomial with p-integral rational coefficients."""

    p: int
    coeffs: tuple[Fraction, ...]  # ascending, coeffs[p] == 1

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise InputError("p_not_odd_prime", f"p must be an odd prime, got {self.p}")
        if len(self.coeffs) != self.p + 1 or self.coeffs[-1] == 0:
            raise InputError(
                "degree_mismatch",
                f"polynomial must have degree exactly p = {self.p}",
            )
        if self.coeffs[-1] != 1:
            raise InputError("not_monic", "leading coefficient must be 1")
        for i, c in enumerate(self.coeffs):
            if c and vp(c, self.p) < 0:
                raise InputError(
                    "non_integral_coefficient",
                    f"coefficient of x^{i} has negative {self.p}-adic valuation",
                )

    @classmethod
    def from_coefficients(cls, p: int, coeffs: Sequence[Fraction | int | str]) -> "InputPolynomial":
        try:
            parsed = tuple(Fraction(c) for c in coeffs)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError("poly_parse", f"bad coefficient list: {exc}") from exc
        return cls(p, parsed)

    @classmethod
    def from_string(cls, p: int, text: str) -> "InputPolynomial":
        terms = parse_polynomial_string(text)
        coeffs = [Fraction(0)] * (max(terms, default=0) + 1)
        for k, c in terms.items():
            coeffs[k] = Fraction(c)
        if len(coeffs) != p + 1:
            raise InputError("degree_mismatch", f"'{text}' does not have degree {p}")
        return cls(p, tuple(coeffs))

    def as_poly(self) -> polys.Poly:
        return list(self.coeffs)

    def __str__(self) -> str:
        parts = []
        for k in range(self.p, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            parts.append(f"{sign}{body}")
        return "".join(parts) or "0"


_TERM_RE = re.compile(
    r"""(?P<sign>[+-]?)\s*
        (?:
            (?P<coeff>\d+)\s*(?:\*\s*(?P<xc>x)(?:\^(?P<expc>\d+))?)?
          | (?P<x>x)(?:\^(?P<exp>\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_polynomial_string(text: str) -> dict[int, int]:
    """Parse a sum of integer-coefficient terms c*x^k into {k: c}.

    Accepted term shapes: "x^5", "x", "3*x^2", "3x" is rejected (the grammar
    requires the explicit "*"), plain integers, each with an optional sign.
    """
    s = text.strip()
    if not s:
        raise InputError("poly_parse", "empty polynomial string")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        match = _TERM_RE.match(s, pos)
        if not match or match.end() == pos:
            raise InputError("poly_parse", f"cannot parse '{text}' at position {pos}")
        sign = match.group("sign")
        if not first and not sign:
            raise InputError("poly_parse", f"missing sign before position {pos} in '{text}'")
        sgn = -1 if sign == "-" else 1
        if match.group("x") is not None:
            k = int(match.group("exp") or 1)
            c = sgn
        else:
            c = sgn * int(match.group("coeff"))
            if match.group("xc"):
                k = int(match.group("expc") or 1)
            else:
                k = 0
        terms[k] = terms.get(k, 0) + c
        pos = match.end()
        first = False
    return {k: c for k, c in terms.items() if c}


@dataclass(frozen=True)
class BaseField:
    """Unramified extension of Q_p of degree n; its valuation restricts to v_p."""

    p: int
    n: int

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise InputError("p_not_odd_prime", f"p must be an odd prime, got {self.p}")
        if self.n < 1:
            raise InputError("bad_inertia_degree", f"inertia degree must be >= 1, got {self.n}")


@dataclass(frozen=True)
class Segment:
    root_valuation: Fraction
    multiplicity: int


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of (i, v_p(a_i)), as (root valuation, multiplicity) segments.

    Segments are listed in hull order, i.e. with strictly decreasing root
    valuations; the multiplicities sum to the degree of the polynomial.
    """

    segments: tuple[Segment, ...]

    def is_single_segment(self) -> bool:
        return len(self.segments) == 1

    def root_valuations(self) -> list[Fraction]:
        out: list[Fraction] = []
        for seg in self.segments:
            out.extend([seg.root_valuation] * seg.multiplicity)
        return out

    def to_json_dict(self) -> list[dict]:
        return [
            {"root_valuation": str(seg.root_valuation), "multiplicity": seg.multiplicity}
            for seg in self.segments
        ]


def newton_polygon_of(coeffs: Sequence[Fraction], p: int) -> NewtonPolygon:
    """Newton polygon of an arbitrary polynomial (constant term nonzero)."""
    coeffs = polys.trim(coeffs)
    if not coeffs or len(coeffs) == 1:
        raise UsageError("constant_polynomial", "Newton polygon needs degree >= 1")
    if coeffs[0] == 0:
        raise InputError("reducible_x_divides", "x divides the polynomial, so it is reducible")
    points = [(i, vp(c, p)) for i, c in enumerate(coeffs) if c]
    hull: list[tuple[int, int]] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point when it is on or above the new chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segments = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        segments.append(Segment(Fraction(y1 - y2, x2 - x1), x2 - x1))
    return NewtonPolygon(tuple(segments))


def newton_polygon(f: InputPolynomial) -> NewtonPolygon:
    return newton_polygon_of(f.as_poly(), f.p)


def poly_discriminant(f: InputPolynomial) -> Fraction:
    """Exact discriminant; zero iff f has a repeated root."""
    return polys.discriminant(f.as_poly())


def irreducibility_certificate(f: InputPolynomial, K: BaseField) -> str:
    """Certify that f is irreducible over K with K(root)/K totally ramified.

    The certificate holds when the Newton polygon of some integer shift
    f(x + c), 0 <= c < p, is one segment whose slope has denominator exactly
    p: each root then generates a degree-p totally ramified extension, over
    every unramified base (shifting by an integer changes neither the field
    a root generates nor irreducibility).  Returns "undetermined" otherwise;
    reducibility is never claimed.
    """
    _require_same_p(f, K)
    fc = f.as_poly()
    for c in range(f.p):
        shifted = polys.shift(fc, Fraction(c)) if c else fc
        if shifted[0] == 0:
            continue  # c is a root, no certificate from this shift
        polygon = newton_polygon_of(shifted, f.p)
        if polygon.is_single_segment() and polygon.segments[0].root_valuation.denominator == f.p:
            return CERTIFIED
    return UNDETERMINED


def difference_polynomial(f: InputPolynomial) -> polys.Poly:
    """Monic polynomial whose roots are the p(p-1) differences of roots of f.

    Built as Res_y(f(y), f(x+y)) / x^p, reconstructed exactly by evaluating
    the resultant at p(p-1)+1 nonzero integers and interpolating.
    """
    p = f.p
    fc = f.as_poly()
    deg = p * p - p
    points = []
    for k in range(1, deg + 2):
        c = Fraction(k)
        shifted = polys.shift(fc, c)
        value = polys.resultant(fc, shifted) / c**p
        points.append((c, value))
    d_poly = polys.interpolate(points)
    if polys.degree(d_poly) != deg or d_poly[-1] != 1:
        raise UsageError("difference_poly_degenerate", "difference polynomial is not monic of full degree")
    # constant term must be +/- disc(f); cheap guard against interpolation bugs
    disc = poly_discriminant(f)
    sign = -1 if (p * (p - 1) // 2) % 2 else 1
    if d_poly[0] != sign * disc:
        raise UsageError("difference_poly_degenerate", "difference polynomial fails the discriminant identity")
    return d_poly


@dataclass(frozen=True)
class SingleClusterResult:
    status: str  # "yes" | "no" | "not_computed"
    w: Fraction | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.w is not None:
            out["w"] = str(self.w)
        return out


def difference_root_valuations(f: InputPolynomial) -> SingleClusterResult:
    """Decide whether all pairwise root differences share one valuation.

    A "yes" with common valuation w means the roots form a single cluster,
    i.e. the associated curve has potentially good reduction; the Newton
    polygon of the difference polynomial decides this exactly.
    """
    if poly_discriminant(f) == 0:
        raise InputError("not_squarefree", "polynomial has a repeated root")
    d_poly = difference_polynomial(f)
    polygon = newton_polygon_of(d_poly, f.p)
    if polygon.is_single_segment():
        return SingleClusterResult("yes", polygon.segments[0].root_valuation)
    return SingleClusterResult("no")


@dataclass(frozen=True)
class AssumptionReport:
    """Outcome of all hypothesis checks for a maximal inertia image."""

    disc_valuation: Fraction | None  # None when disc = 0
    squarefree: bool
    irreducibility: str
    gcd_condition: bool  # gcd(v(disc), p-1) = 1
    disc_valuation_odd: bool
    single_cluster: SingleClusterResult
    maximal_inertia: bool

    def failed_conditions(self) -> list[str]:
        failures = []
        if not self.squarefree:
            failures.append("squarefree")
        if self.irreducibility != CERTIFIED:
            failures.append("irreducibility")
        if not self.gcd_condition:
            failures.append("gcd_condition")
        if self.single_cluster.status == "no":
            failures.append("single_cluster")
        return failures

    def to_json_dict(self) -> dict:
        return {
            "disc_valuation": None if self.disc_valuation is None else str(self.disc_valuation),
            "squarefree": self.squarefree,
            "irreducibility": self.irreducibility,
            "gcd_condition": self.gcd_condition,
            "disc_valuation_odd": self.disc_valuation_odd,
            "single_cluster": self.single_cluster.to_json_dict(),
            "maximal_inertia": self.maximal_inertia,
        }


def _require_same_p(f: InputPolynomial, K: BaseField) -> None:
    if f.p != K.p:
        raise InputError("p_mismatch", f"polynomial p = {f.p} but base field p = {K.p}")


def validate_assumptions(f: InputPolynomial, K: BaseField) -> AssumptionReport:
    """Check every hypothesis needed for the maximal inertia image.

    maximal_inertia is true exactly when irreducibility is certified, the
    discriminant valuation is coprime to p-1, f is squarefree and the
    single-cluster check did not come back negative.
    """
    _require_same_p(f, K)
    p = f.p
    disc = poly_discriminant(f)
    squarefree = disc != 0
    if squarefree:
        disc_valuation: Fraction | None = Fraction(vp(disc, p))
        v = int(disc_valuation)
        gcd_condition = math.gcd(v, p - 1) == 1
        disc_valuation_odd = v % 2 == 1
        single_cluster = difference_root_valuations(f)
        irreducibility = irreducibility_certificate(f, K)
    else:
        disc_valuation = None
        gcd_condition = False
        disc_valuation_odd = False
        single_cluster = SingleClusterResult("not_computed")
        irreducibility = UNDETERMINED
    maximal = (
        squarefree
        and irreducibility == CERTIFIED
        and gcd_condition
        and single_cluster.status != "no"
    )
    return AssumptionReport(
        disc_valuation=disc_valuation,
        squarefree=squarefree,
        irreducibility=irreducibility,
        gcd_condition=gcd_condition,
        disc_valuation_odd=disc_valuation_odd,
        single_cluster=single_cluster,
        maximal_inertia=maximal,
    )


def _is_eisenstein(coeffs: Sequence[Fraction], p: int) -> bool:
    if any(c and vp(c, p) < 1 for c in coeffs[:-1]):
        return False
    c0 = coeffs[0]
    return c0 != 0 and vp(c0, p) == 1


def conductor_exponent(
    f: InputPolynomial, K: BaseField, assumptions: AssumptionReport | None = None
) -> int | None:
    """Conductor exponent N = v(disc f), in the monogenic case.

    Requires a passing assumption report.  When f becomes Eisenstein after
    some integer shift x -> x + c with 0 <= c < p, a root generates the full
    ring of integers of the (totally ramified, degree p) extension, and the
    extension discriminant equals disc f up to a unit.  Otherwise returns
    None: the formula would need the extension discriminant itself, which is
    not computed here.
    """
    if assumptions is None:
        assumptions = validate_assumptions(f, K)
    if not assumptions.maximal_inertia:
        raise UsageError(
            "assumptions_not_validated",
            "conductor_exponent requires a validated maximal-inertia report",
        )
    p = f.p
    fc = f.as_poly()
    for c in range(p):
        if _is_eisenstein(polys.shift(fc, Fraction(c)), p):
            disc = poly_discriminant(f)
            return vp(disc, p)
    return None
