"""galrep: exact classification of Galois representations for hyperelliptic
curves y^2 = f(x) (f monic of odd prime degree p) with maximal wild inertia
image over unramified p-adic base fields.

The public surface mirrors the pipeline: validate the hypotheses
(:mod:`galrep.padic`), build the finite groups and their exact character
tables (:mod:`galrep.groups`), count points on the reduced model curve
(:mod:`galrep.counting`), and assemble the classification
(:mod:`galrep.classify`).
"""

from .classify import ClassificationReport, ClassificationRefused, classify, verify_consistency
from .config import Budgets, default_budgets
from .counting import CountResult, TwistedCountResult, count_curve, count_twisted_fixed, naive_twisted_oracle
from .cyclotomic import Cyclotomic, cyclotomic_polynomial
from .errors import BudgetExceeded, GalrepError, InputError, InternalCheckError, UsageError
from .gf import FieldElement, FieldSpec, build_field, frobenius_fixed_subfield, frobenius_root_solve, quadratic_character
from .groups import (
    CharacterRow,
    CharacterTable,
    GroupSpec,
    build_group,
    character_table,
    conjugacy_classes,
    faithful_kernel,
    gauss_sum,
    identify_psi,
    induced_character,
)
from .padic import (
    AssumptionReport,
    BaseField,
    InputPolynomial,
    NewtonPolygon,
    conductor_exponent,
    difference_root_valuations,
    irreducibility_certificate,
    newton_polygon,
    poly_discriminant,
    validate_assumptions,
)

__version__ = "0.1.0"

__all__ = [
    "AssumptionReport",
    "BaseField",
    "BudgetExceeded",
    "Budgets",
    "CharacterRow",
    "CharacterTable",
    "ClassificationRefused",
    "ClassificationReport",
    "CountResult",
    "Cyclotomic",
    "FieldElement",
    "FieldSpec",
    "GalrepError",
    "GroupSpec",
    "InputError",
    "InputPolynomial",
    "InternalCheckError",
    "NewtonPolygon",
    "TwistedCountResult",
    "UsageError",
    "build_field",
    "build_group",
    "character_table",
    "classify",
    "conductor_exponent",
    "conjugacy_classes",
    "count_curve",
    "count_twisted_fixed",
    "cyclotomic_polynomial",
    "default_budgets",
    "difference_root_valuations",
    "faithful_kernel",
    "frobenius_fixed_subfield",
    "frobenius_root_solve",
    "gauss_sum",
    "identify_psi",
    "induced_character",
    "irreducibility_certificate",
    "naive_twisted_oracle",
    "newton_polygon",
    "poly_discriminant",
    "quadratic_character",
    "validate_assumptions",
    "verify_consistency",
]
