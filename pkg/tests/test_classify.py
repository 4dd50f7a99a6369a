"""End-to-end classification: golden reports for the model curve, refusal
behaviour, eigenvalue invariants, the trace consistency gate, determinism."""

from fractions import Fraction

import pytest

from galrep.classify import ClassificationRefused, classify, verify_consistency
from galrep.cyclotomic import Cyclotomic
from galrep.errors import InputError
from galrep.groups import FULL, build_group, character_table, gauss_sum
from galrep.padic import BaseField, InputPolynomial


def model_input(p):
    return InputPolynomial.from_string(p, f"x^{p}-{p}")


def signed_p(p):
    return -p if (p - 1) // 2 % 2 else p


@pytest.fixture(scope="module")
def odd_report():
    return classify(model_input(5), BaseField(5, 1))


@pytest.fixture(scope="module")
def even_report():
    return classify(model_input(5), BaseField(5, 2))


class TestGoldenOddCase:
    @pytest.fixture()
    def report(self, odd_report):
        return odd_report

    def test_assumptions(self, report):
        assert report.assumptions.maximal_inertia
        assert report.assumptions.disc_valuation == 9

    def test_groups(self, report):
        assert (report.inertia_group.order, report.inertia_group.class_count) == (40, 10)
        assert (report.full_group.order, report.full_group.class_count) == (80, 14)

    def test_psi(self, report):
        assert report.psi.label == "wild--"
        assert report.psi.dimension == 4 and report.psi.faithful
        assert report.psi.construction_json() == {"kind": "induced", "nu": -1, "phi": -1}
        table = character_table(build_group(5, FULL))
        assert report.psi.values[table.sigma_phi_class()] == -gauss_sum(5)

    def test_chi(self, report):
        assert report.chi_frobenius == gauss_sum(5)

    def test_eigenvalues(self, report):
        g5 = gauss_sum(5)
        assert [(e.value, e.multiplicity) for e in report.eigenvalues] == [(g5, 2), (-g5, 2)]

    def test_conductor(self, report):
        assert report.conductor == 9

    def test_verification(self, report):
        v = report.verification
        assert v.status == "ok" and v.match
        assert v.trace_counted == -5 and v.trace_predicted == -5

    def test_golden_json_fields(self, report):
        data = report.to_json_dict()
        assert data["schema"] == 1
        assert data["input"] == {"p": 5, "n": 1, "f": ["-5", "0", "0", "0", "0", "1"]}
        assert data["conductor"] == {"status": "computed", "exponent": 9}
        assert data["psi"]["label"] == "wild--"
        assert data["chi"]["frobenius_value"] == gauss_sum(5).to_json()
        assert data["verification"]["match"] is True


class TestGoldenEvenCase:
    @pytest.fixture()
    def report(self, even_report):
        return even_report

    def test_psi_is_the_unique_faithful_inertia_row(self, report):
        assert report.psi.label == "wild-"
        assert report.psi.dimension == 4 and report.psi.faithful

    def test_chi_is_scalar_five(self, report):
        assert report.chi_frobenius == Cyclotomic.rational(5, 5)

    def test_single_eigenvalue(self, report):
        assert [(e.value, e.multiplicity) for e in report.eigenvalues] == [
            (Cyclotomic.rational(5, 5), 4)
        ]

    def test_no_full_group_and_skipped_verification(self, report):
        assert report.full_group is None
        assert report.verification.status == "skipped"

    def test_conductor(self, report):
        assert report.conductor == 9


class TestRefusalAndErrors:
    def test_undetermined_is_refused(self):
        with pytest.raises(ClassificationRefused) as err:
            classify(InputPolynomial.from_string(5, "x^5+x+1"), BaseField(5, 1))
        assert "irreducibility" in err.value.failures
        assert err.value.to_json_dict()["refused"]["failures"] == err.value.failures

    def test_all_failures_listed(self):
        f = InputPolynomial.from_coefficients(5, [1, 1, -2, -2, 1, 1])  # repeated roots
        with pytest.raises(ClassificationRefused) as err:
            classify(f, BaseField(5, 1))
        assert set(err.value.failures) >= {"squarefree", "irreducibility", "gcd_condition"}

    def test_input_errors_propagate(self):
        with pytest.raises(InputError) as err:
            classify(model_input(5), BaseField(3, 2))
        assert err.value.code == "p_mismatch"


class TestInvariants:
    @pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (5, 2), (7, 1), (3, 4)])
    def test_chi_squared_identity(self, p, n):
        report = classify(model_input(p), BaseField(p, n))
        lhs = report.chi_frobenius * report.chi_frobenius
        assert lhs == Cyclotomic.rational(p, Fraction(signed_p(p)) ** n)

    @pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (5, 2), (7, 1), (3, 4), (3, 3)])
    def test_eigenvalue_square_multiset(self, p, n):
        report = classify(model_input(p), BaseField(p, n))
        g = (p - 1) // 2
        squares = []
        for e in report.eigenvalues:
            squares.extend([e.value * e.value] * e.multiplicity)
        assert squares == [Cyclotomic.rational(p, Fraction(signed_p(p)) ** n)] * (2 * g)

    @pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (5, 2), (7, 1), (3, 4)])
    def test_determinant_is_residue_field_size_to_g(self, p, n):
        report = classify(model_input(p), BaseField(p, n))
        g = (p - 1) // 2
        det = Cyclotomic.one(p)
        for e in report.eigenvalues:
            det = det * e.value ** e.multiplicity
        assert det == Cyclotomic.rational(p, Fraction(p) ** (n * g))

    @pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (7, 1)])
    def test_predicted_traces_are_rational_integers(self, p, n):
        v = verify_consistency(p, n)
        assert isinstance(v.trace_predicted, int)

    @pytest.mark.parametrize("p,n", [(5, 1), (7, 1), (3, 3)])
    def test_report_values_stay_in_bounded_conductor(self, p, n):
        report = classify(model_input(p), BaseField(p, n))
        bound = 2 * p * (p - 1)
        values = [report.chi_frobenius, *report.psi.values]
        values += [e.value for e in report.eigenvalues]
        assert all(bound % v.m == 0 for v in values)

    def test_verification_skipped_when_solver_budget_blocks(self):
        # n = 5 needs ambient degree 25, above the default solver budget
        report = classify(model_input(5), BaseField(5, 5))
        assert report.verification.status == "skipped"
        assert "budget" in report.verification.reason
        assert report.psi.label == "wild--"  # classification itself still completes


class TestConsistencyGate:
    @pytest.mark.parametrize(
        "p,n,predicted",
        [(5, 1, -5), (3, 1, 3), (7, 1, 7), (3, 3, -9), (5, 3, -25)],
    )
    def test_match(self, p, n, predicted):
        v = verify_consistency(p, n)
        assert v.status == "ok" and v.match
        assert v.trace_predicted == predicted == v.trace_counted


class TestDeterminism:
    def test_byte_identical_reports(self):
        a = classify(model_input(5), BaseField(5, 1)).to_json()
        b = classify(model_input(5), BaseField(5, 1)).to_json()
        assert a == b
        assert a.encode() == b.encode()

    def test_json_round_trip(self):
        import json

        data = json.loads(classify(model_input(5), BaseField(5, 1)).to_json())
        assert Cyclotomic.from_json(data["chi"]["frobenius_value"]) == gauss_sum(5)
