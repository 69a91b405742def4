"""Tests for pointer/extrapolation.py."""

from __future__ import annotations

import pytest

from hardy_analysis.pointer import check_schedule, fit_convergence_order, richardson_linear
from hardy_core.exceptions import CouplingScheduleError


@pytest.mark.unit
class TestCheckSchedule:
    """Coupling schedule validation."""

    def test_valid(self) -> None:
        """A strictly decreasing positive schedule passes through as floats."""
        assert check_schedule([0.2, 0.1, 0.05]) == (0.2, 0.1, 0.05)

    @pytest.mark.parametrize(
        "g_list",
        [
            [0.2, 0.1],
            [0.2, 0.0, -0.1],
            [0.2, float("nan"), 0.05],
            [0.2, float("inf"), 0.05],
            [0.05, 0.1, 0.2],
            [0.2, 0.1, 0.1],
        ],
        ids=["short", "non-positive", "nan", "inf", "increasing", "repeated"],
    )
    def test_invalid(self, g_list: list[float]) -> None:
        """Short, non-positive, non-finite and non-decreasing schedules are rejected."""
        with pytest.raises(CouplingScheduleError):
            check_schedule(g_list)


@pytest.mark.unit
class TestRichardsonLinear:
    """Two-point linear extrapolation to g = 0."""

    def test_cancels_linear_error(self) -> None:
        """f(g) = 3 + 2g extrapolates to exactly 3."""
        assert richardson_linear([0.1, 0.05], [3.2, 3.1]) == pytest.approx(3.0, abs=1e-14)

    def test_quadratic_residual(self) -> None:
        """f(g) = c g^2 leaves -c g1 g2."""
        assert richardson_linear([0.2, 0.1], [0.04, 0.01]) == pytest.approx(-0.02, abs=1e-15)

    def test_needs_two_distinct_points(self) -> None:
        """Equal couplings or wrong lengths raise CouplingScheduleError."""
        with pytest.raises(CouplingScheduleError):
            richardson_linear([0.1, 0.1], [1.0, 2.0])
        with pytest.raises(CouplingScheduleError):
            richardson_linear([0.1, 0.05, 0.01], [1.0, 2.0, 3.0])


@pytest.mark.unit
class TestFitConvergenceOrder:
    """Log-log slope of error against coupling."""

    @pytest.mark.parametrize("order", [1.0, 2.0, 3.0])
    def test_power_law(self, order: float) -> None:
        """Errors c g^n give slope n."""
        g_list = [0.2, 0.1, 0.05, 0.025]
        errors = [0.7 * g**order for g in g_list]
        assert fit_convergence_order(g_list, errors) == pytest.approx(order, abs=1e-10)

    def test_exact_errors_give_none(self) -> None:
        """Errors at the floating-point floor carry no order."""
        assert fit_convergence_order([0.2, 0.1, 0.05], [0.0, 1e-16, 3e-13]) is None

    def test_exact_points_skipped(self) -> None:
        """Exact points are dropped and the rest still fit."""
        order = fit_convergence_order([0.2, 0.1, 0.05], [0.04, 0.01, 0.0])
        assert order == pytest.approx(2.0, abs=1e-10)

    def test_length_mismatch(self) -> None:
        """One error per coupling."""
        with pytest.raises(ValueError, match="zip"):
            fit_convergence_order([0.2, 0.1], [0.1])
