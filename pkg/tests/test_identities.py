import json
from fractions import Fraction

import pytest

from boltzgas.identities import (
    SIMPLEX_RATIOS,
    TruncatedSeries,
    check_differential_identity,
    check_joint_normalization,
    check_power_of_sum,
    check_simplex_sum_ii,
    measure_sum_of_powers_residual,
    reports_to_json,
    run_standard_battery,
    sum_of_powers_residual_slope,
)


class TestTruncatedSeries:
    def test_exponential_product(self):
        a = TruncatedSeries.exponential(1, 10)
        b = TruncatedSeries.exponential(2, 10)
        assert (a * b).coefficients == TruncatedSeries.exponential(3, 10).coefficients

    def test_expm1_relation(self):
        expm1 = TruncatedSeries.expm1(8)
        exp = TruncatedSeries.exponential(1, 8)
        one = TruncatedSeries.constant(1, 8)
        assert (expm1 + one).coefficients == exp.coefficients

    def test_derivative_of_expm1_is_exp(self):
        assert (
            TruncatedSeries.expm1(9).derivative().coefficients
            == TruncatedSeries.exponential(1, 8).coefficients
        )

    def test_power(self):
        square = TruncatedSeries.expm1(6) ** 2
        # (e^y - 1)^2 = e^(2y) - 2 e^y + 1
        direct = (
            TruncatedSeries.exponential(2, 6)
            - TruncatedSeries.exponential(1, 6).scale(2)
            + TruncatedSeries.constant(1, 6)
        )
        assert square.coefficients == direct.coefficients


class TestPowerOfSum:
    @pytest.mark.parametrize("n, m, j", [(2, 3, 1), (4, 4, 1), (1, 5, 2), (3, 6, 0)])
    def test_exact_equal(self, n, m, j):
        assert check_power_of_sum(n, m, j).verdict == "exact-equal"

    def test_small_grid(self):
        for n in range(1, 5):
            for m in range(0, 6):
                for j in range(m + 1):
                    assert check_power_of_sum(n, m, j).verdict == "exact-equal"


class TestDifferentialIdentity:
    def test_first_order(self):
        assert check_differential_identity(1, 1).verdict == "exact-equal"

    @pytest.mark.parametrize("q, m, order", [(2, 3, 10), (3, 5, 12), (6, 6, 16)])
    def test_exact_equal(self, q, m, order):
        assert check_differential_identity(q, m, series_order=order).verdict == "exact-equal"

    def test_rejects_small_order(self):
        with pytest.raises(ValueError):
            check_differential_identity(4, 4, series_order=8)


class TestSimplexSumII:
    def test_single_ratio(self):
        report = check_simplex_sum_ii(1, [Fraction(1, 2)], 3)
        assert report.verdict == "exact-equal"

    def test_two_ratios(self):
        report = check_simplex_sum_ii(2, [Fraction(1, 2), Fraction(1, 3)], 4)
        assert report.verdict == "exact-equal"

    @pytest.mark.parametrize("arity", [1, 2, 3, 4])
    @pytest.mark.parametrize("n_top", [3, 5, 8])
    def test_standard_points(self, arity, n_top):
        report = check_simplex_sum_ii(arity, SIMPLEX_RATIOS[:arity], n_top)
        assert report.verdict == "exact-equal"

    def test_degenerate_ratio_rejected(self):
        report = check_simplex_sum_ii(1, [Fraction(1)], 3)
        assert report.verdict == "domain-error"

    def test_degenerate_product_rejected(self):
        report = check_simplex_sum_ii(2, [Fraction(2), Fraction(1, 2)], 3)
        assert report.verdict == "domain-error"


class TestSumOfPowersResidual:
    def test_linear_case(self):
        report = measure_sum_of_powers_residual(1, 10)
        assert report.verdict == "residual"
        # sum_{l<10} l = 45; the k=2 coefficient leaves a spurious constant 1/12
        assert report.residual == Fraction(-1, 12)
        assert "0" in report.notes  # leading-order truncation is exact for n=1

    def test_quadratic_case(self):
        report = measure_sum_of_powers_residual(2, 10)
        assert report.residual == Fraction(1, 4)

    def test_trivial_case(self):
        report = measure_sum_of_powers_residual(1, 2)
        assert report.verdict == "residual"

    def test_never_asserts(self):
        for n in range(1, 5):
            for t in (2, 10, 30):
                assert measure_sum_of_powers_residual(n, t).verdict == "residual"

    def test_leading_truncation_growth_order(self):
        assert sum_of_powers_residual_slope(1) is None  # exact, no residuals
        for n in (2, 3, 4):
            slope = sum_of_powers_residual_slope(n)
            assert slope == pytest.approx(n - 1, abs=0.15)


class TestJointNormalization:
    @pytest.mark.parametrize(
        "n, m, levels",
        [(2, 2, (0, 1)), (1, 1, (0,)), (4, 5, (0, 2, 4)), (3, 4, (1, 3))],
    )
    def test_exact_equal(self, n, m, levels):
        assert check_joint_normalization(n, m, levels).verdict == "exact-equal"


class TestReports:
    def test_json_round_trip(self):
        reports = [
            check_power_of_sum(2, 2, 1),
            measure_sum_of_powers_residual(2, 10),
            check_simplex_sum_ii(1, [Fraction(1)], 3),
        ]
        payload = json.loads(reports_to_json(reports))
        assert [r["name"] for r in payload] == [
            "power-of-sum",
            "sum-of-powers",
            "simplex-sum-ii",
        ]
        assert payload[0]["verdict"] == "exact-equal"
        assert payload[1]["residual"] == "1/4"
        assert payload[2]["verdict"] == "domain-error"
        assert payload[2]["params"]["a"] == ["1/1"]

    def test_standard_battery_has_no_mismatches(self):
        reports = run_standard_battery()
        assert len(reports) > 300
        assert not [r for r in reports if r.verdict == "mismatch"]
        names = {r.name for r in reports}
        assert names == {
            "power-of-sum",
            "differential",
            "simplex-sum-ii",
            "sum-of-powers",
            "joint-normalization",
        }
