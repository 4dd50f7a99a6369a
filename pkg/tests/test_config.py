"""Budget configuration, including the environment-variable default."""

from galrep.config import Budgets, default_budgets


def test_defaults():
    budgets = default_budgets()
    assert budgets.curve_enum == 10**7
    assert budgets.coset_q == 10**6
    assert budgets.solver_np == 21
    assert budgets.naive_enum == 10**6
    assert budgets.group_p_bound == 13


def test_env_override(monkeypatch):
    monkeypatch.setenv("GALREP_ENUM_BUDGET", "1234")
    budgets = default_budgets()
    assert budgets.curve_enum == 1234
    assert budgets.naive_enum == 1234
    # the non-enumeration budgets stay put
    assert budgets.coset_q == 10**6


def test_budgets_are_immutable():
    import dataclasses

    assert dataclasses.fields(Budgets)
    try:
        Budgets().curve_enum = 5
        raised = False
    except dataclasses.FrozenInstanceError:
        raised = True
    assert raised
