"""Finite field arithmetic, quadratic characters, and the Frobenius-root
solver with its materialized subfield."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galrep.errors import BudgetExceeded, InputError, UsageError
from galrep.gf import (
    build_field,
    frobenius_fixed_subfield,
    frobenius_root_solve,
    quadratic_character,
)


class TestBuildField:
    def test_prime_field_modulus_is_x(self):
        assert build_field(5, 1).modulus == (0, 1)

    def test_deterministic_cubic(self):
        field = build_field(3, 3)
        assert field.modulus == (1, 0, 2, 1)  # x^3 + 2x^2 + 1, lex-least irreducible
        assert build_field(3, 3).modulus == field.modulus

    def test_degree_nine(self):
        field = build_field(3, 9)
        assert field.size == 19683
        assert len(field.modulus) == 10 and field.modulus[-1] == 1

    def test_rejects_bad_input(self):
        with pytest.raises(InputError):
            build_field(4, 2)
        with pytest.raises(InputError):
            build_field(5, 0)

    @pytest.mark.parametrize("p,m", [(3, 3), (3, 9), (5, 2), (7, 2)])
    def test_fermat_identity_sampled(self, p, m):
        field = build_field(p, m)
        rng = random.Random(0)
        for _ in range(25):
            a = field.element_from_index(rng.randrange(field.size))
            assert field.pow_t(a, field.size) == a


class TestFieldAxioms:
    @settings(max_examples=60, deadline=None)
    @given(ia=st.integers(0, 242), ib=st.integers(0, 242), ic=st.integers(0, 242))
    def test_ring_laws_f243(self, ia, ib, ic):
        field = build_field(3, 5)
        a, b, c = (field.element_from_index(i) for i in (ia, ib, ic))
        assert field.mul_t(a, b) == field.mul_t(b, a)
        assert field.mul_t(field.mul_t(a, b), c) == field.mul_t(a, field.mul_t(b, c))
        assert field.mul_t(a, field.add_t(b, c)) == field.add_t(field.mul_t(a, b), field.mul_t(a, c))

    @settings(max_examples=40, deadline=None)
    @given(ia=st.integers(1, 242))
    def test_inverses_f243(self, ia):
        field = build_field(3, 5)
        a = field.element_from_index(ia)
        assert field.mul_t(a, field.inv_t(a)) == field.one_t()

    def test_wrapped_elements(self):
        field = build_field(5, 2)
        a = field.element([2, 3])
        b = field.element([4, 1])
        assert (a + b).coeffs == (1, 4)
        assert (a - a).coeffs == field.zero_t()
        assert (a * a.inverse()).coeffs == field.one_t()
        assert (a ** field.size).coeffs == a.coeffs


class TestQuadraticCharacter:
    def test_prime_field_values(self):
        field = build_field(5, 1)
        assert quadratic_character(field.one()) == 1
        assert quadratic_character(field.zero()) == 0
        assert quadratic_character(field.element([2])) == -1
        squares = {field.mul_t(a, a) for a in field.elements_t()}
        for a in field.elements_t():
            expected = 0 if not any(a) else (1 if a in squares else -1)
            assert quadratic_character(field.element(a)) == expected

    def test_extension_field_counts(self):
        field = build_field(3, 2)
        values = [quadratic_character(field.element(a)) for a in field.elements_t()]
        assert values.count(0) == 1
        assert values.count(1) == (field.size - 1) // 2
        assert values.count(-1) == (field.size - 1) // 2

    def test_subfield_character(self):
        field, _ = frobenius_root_solve(3, 1)
        sub = frobenius_fixed_subfield(field, 1)
        nonzero = [c for c in sub if not c.is_zero()]
        signs = sorted(quadratic_character(c, order=3) for c in nonzero)
        assert signs == [-1, 1]

    def test_rejects_elements_outside_subfield(self):
        field, x0 = frobenius_root_solve(3, 1)
        with pytest.raises(UsageError):
            quadratic_character(x0, order=3)


class TestFrobeniusRootSolve:
    @pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (7, 1), (3, 3), (5, 3)])
    def test_postcondition(self, p, n):
        field, x0 = frobenius_root_solve(p, n)
        q = p**n
        assert field.m == n * p
        assert x0 ** q == x0 - field.one()

    def test_root_of_artin_schreier_polynomial(self):
        field, x0 = frobenius_root_solve(5, 1)
        assert (x0**5 - x0 + field.one()).is_zero()

    @pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (3, 3)])
    def test_full_solution_coset(self, p, n):
        field, x0 = frobenius_root_solve(p, n)
        q = p**n
        sub = frobenius_fixed_subfield(field, n)
        assert len(sub) == q
        rng = random.Random(1)
        sample = sub if len(sub) <= 20 else rng.sample(sub, 20)
        for c in sample:
            x = x0 + c
            assert x ** q == x - field.one()

    @pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (3, 3)])
    def test_subfield_is_fixed_pointwise(self, p, n):
        field, _ = frobenius_root_solve(p, n)
        q = p**n
        sub = frobenius_fixed_subfield(field, n)
        assert all(c ** q == c for c in sub)
        assert len({c.coeffs for c in sub}) == q

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            frobenius_root_solve(5, 5)  # ambient degree 25 > default budget 21

    def test_subfield_needs_divisible_degree(self):
        field = build_field(3, 3)
        with pytest.raises(UsageError):
            frobenius_fixed_subfield(field, 2)
