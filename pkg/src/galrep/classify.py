"""End-to-end classification of the Galois representation.

``classify`` validates the maximal-inertia hypotheses, builds the relevant
character tables, and assembles the full answer: the unramified character
(its Frobenius value, an exact cyclotomic), the finite-group factor psi,
the Frobenius eigenvalue multiset, the conductor exponent, and, for odd
residue degree with budgets permitting, a verification block comparing the
representation-theoretic trace prediction against the twisted point count.

Reports are plain data and serialize deterministically: identical inputs
produce byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .config import Budgets, default_budgets
from .counting import count_twisted_fixed
from .cyclotomic import Cyclotomic
from .errors import BudgetExceeded, GalrepError, InternalCheckError
from .groups import FULL, INERTIA, CharacterRow, CharacterTable, build_group, character_table, gauss_sum, identify_psi
from .padic import AssumptionReport, BaseField, InputPolynomial, conductor_exponent, validate_assumptions

SCHEMA_VERSION = 1


class ClassificationRefused(GalrepError):
    """The hypotheses could not all be certified; no answer is guessed."""

    def __init__(self, failures: list[str], assumptions: AssumptionReport):
        super().__init__(f"hypotheses not certified: {', '.join(failures)}")
        self.failures = failures
        self.assumptions = assumptions

    def to_json_dict(self) -> dict:
        return {
            "refused": {
                "failures": self.failures,
                "assumptions": self.assumptions.to_json_dict(),
            }
        }


@dataclass(frozen=True)
class Verification:
    status: str  # "ok" | "mismatch" | "skipped"
    trace_counted: int | None = None
    trace_predicted: int | None = None
    match: bool | None = None
    reason: str | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.status == "skipped":
            out["reason"] = self.reason
        else:
            out["trace_counted"] = self.trace_counted
            out["trace_predicted"] = self.trace_predicted
            out["match"] = self.match
        return out


@dataclass(frozen=True)
class GroupSummary:
    order: int
    b: int
    class_count: int

    def to_json_dict(self) -> dict:
        return {"order": self.order, "b": self.b, "class_count": self.class_count}


@dataclass(frozen=True)
class Eigenvalue:
    value: Cyclotomic
    multiplicity: int

    def to_json_dict(self) -> dict:
        return {"value": self.value.to_json(), "multiplicity": self.multiplicity}


@dataclass(frozen=True)
class ClassificationReport:
    p: int
    n: int
    f: InputPolynomial
    assumptions: AssumptionReport
    inertia_group: GroupSummary
    full_group: GroupSummary | None  # odd n only
    chi_frobenius: Cyclotomic  # value of the unramified character at Frobenius
    psi: CharacterRow
    psi_classes: tuple  # conjugacy classes the psi values are indexed by
    eigenvalues: tuple[Eigenvalue, ...]
    conductor: int | None
    verification: Verification

    def to_json_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "input": {
                "p": self.p,
                "n": self.n,
                "f": [str(c) for c in self.f.coeffs],
            },
            "assumptions": self.assumptions.to_json_dict(),
            "groups": {
                "inertia": self.inertia_group.to_json_dict(),
                "full": self.full_group.to_json_dict() if self.full_group else None,
            },
            "chi": {
                "description": "unramified character, trivial on inertia",
                "frobenius_value": self.chi_frobenius.to_json(),
            },
            "psi": {
                "label": self.psi.label,
                "dimension": self.psi.dimension,
                "faithful": self.psi.faithful,
                "construction": self.psi.construction_json(),
                "classes": [{"rep": list(c.rep), "size": c.size} for c in self.psi_classes],
                "values": [v.to_json() for v in self.psi.values],
            },
            "eigenvalues": [e.to_json_dict() for e in self.eigenvalues],
            "conductor": {"status": "computed", "exponent": self.conductor}
            if self.conductor is not None
            else {"status": "not_computed"},
            "verification": self.verification.to_json_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def _signed_p(p: int) -> int:
    """(-1)^((p-1)/2) * p: the discriminant-like twist of p."""
    return -p if (p - 1) // 2 % 2 else p


def verify_consistency(p: int, n: int, budgets: Budgets | None = None,
                       psi: CharacterRow | None = None) -> Verification:
    """Compare tr psi(s*f) * chi(Frob) against the counted twisted trace.

    Both sides are exact integers; any mismatch is reported, never hidden
    (it would mean one of the two independent routes is wrong).
    """
    budgets = budgets or default_budgets()
    if psi is None:
        psi = identify_psi(p, "odd", budgets.group_p_bound)
    table = character_table(build_group(p, FULL, budgets.group_p_bound))
    trace_psi = psi.values[table.sigma_phi_class()]
    chi_frob = gauss_sum(p) ** n
    predicted_cyclo = trace_psi * chi_frob
    if not predicted_cyclo.is_rational():
        raise InternalCheckError("predicted trace of a Frobenius-coset element is not rational")
    predicted_fraction = predicted_cyclo.as_rational()
    if predicted_fraction.denominator != 1:
        raise InternalCheckError("predicted trace is not a rational integer")
    predicted = int(predicted_fraction)
    counted = count_twisted_fixed(p, n, budgets).trace_sigma_frob
    status = "ok" if counted == predicted else "mismatch"
    return Verification(status=status, trace_counted=counted, trace_predicted=predicted,
                        match=counted == predicted)


def classify(f: InputPolynomial, K: BaseField, budgets: Budgets | None = None) -> ClassificationReport:
    """Full classification for a certified input; refuses otherwise.

    Raises :class:`ClassificationRefused` (carrying the assumption report)
    when any hypothesis fails or stays undetermined.
    """
    budgets = budgets or default_budgets()
    assumptions = validate_assumptions(f, K)
    if not assumptions.maximal_inertia:
        raise ClassificationRefused(assumptions.failed_conditions(), assumptions)
    p, n = f.p, K.n
    parity = "even" if n % 2 == 0 else "odd"
    g = (p - 1) // 2

    inertia_table = character_table(build_group(p, INERTIA, budgets.group_p_bound))
    inertia_summary = GroupSummary(inertia_table.group.order, inertia_table.group.b,
                                   len(inertia_table.classes))
    full_summary = None
    psi_table: CharacterTable = inertia_table
    if parity == "odd":
        full_table = character_table(build_group(p, FULL, budgets.group_p_bound))
        full_summary = GroupSummary(full_table.group.order, full_table.group.b,
                                    len(full_table.classes))
        psi_table = full_table
    psi = identify_psi(p, parity, budgets.group_p_bound)

    chi_frob = gauss_sum(p) ** n
    if parity == "even":
        lam = Fraction(_signed_p(p)) ** (n // 2)
        eigenvalues = (Eigenvalue(Cyclotomic.rational(p, lam), 2 * g),)
    else:
        eigenvalues = (Eigenvalue(chi_frob, g), Eigenvalue(-chi_frob, g))

    conductor = conductor_exponent(f, K, assumptions)

    if parity == "odd":
        try:
            verification = verify_consistency(p, n, budgets, psi)
        except BudgetExceeded as exc:
            verification = Verification(status="skipped", reason=str(exc))
    else:
        verification = Verification(status="skipped",
                                    reason="even residue degree: no Frobenius-coset trace to count")

    return ClassificationReport(
        p=p,
        n=n,
        f=f,
        assumptions=assumptions,
        inertia_group=inertia_summary,
        full_group=full_summary,
        chi_frobenius=chi_frob,
        psi=psi,
        psi_classes=psi_table.classes,
        eigenvalues=eigenvalues,
        conductor=conductor,
        verification=verification,
    )
