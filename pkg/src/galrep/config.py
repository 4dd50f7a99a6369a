"""Runtime limits for the enumeration-heavy parts of the package.

Budgets are configuration, not constants: every counting entry point takes a
``Budgets`` value (or uses ``default_budgets()``, which honours the
``GALREP_ENUM_BUDGET`` environment variable for the plain enumeration caps).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Budgets:
    # largest field size scanned exhaustively by the curve counter
    curve_enum: int = 10**7
    # largest subfield size q = p^n enumerated by the coset method
    coset_q: int = 10**6
    # largest ambient degree n*p handled by the Frobenius-root solver
    solver_np: int = 21
    # largest field size p^(n*p) scanned by the naive twisted oracle
    naive_enum: int = 10**6
    # largest prime for which groups and character tables are built
    group_p_bound: int = 13


def default_budgets() -> Budgets:
    budgets = Budgets()
    env = os.environ.get("GALREP_ENUM_BUDGET")
    if env:
        cap = int(env)
        budgets = replace(budgets, curve_enum=cap, naive_enum=cap)
    return budgets
