"""Coupling schedules, Richardson extrapolation and convergence-order fits."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from hardy_core.constants import EXACT_ERROR_FLOOR, MIN_G_LIST_LENGTH
from hardy_core.exceptions import CouplingScheduleError


def check_schedule(g_list: Sequence[float]) -> tuple[float, ...]:
    """Validate a coupling schedule: finite, positive, strictly decreasing, long enough."""
    schedule = tuple(float(g) for g in g_list)
    if len(schedule) < MIN_G_LIST_LENGTH:
        msg = f"Need at least {MIN_G_LIST_LENGTH} couplings, got {len(schedule)}"
        raise CouplingScheduleError(msg)
    if not all(math.isfinite(g) and g > 0.0 for g in schedule):
        msg = f"Couplings must be finite and positive: {schedule}"
        raise CouplingScheduleError(msg)
    if any(later >= earlier for earlier, later in zip(schedule, schedule[1:], strict=False)):
        msg = f"Couplings must be strictly decreasing: {schedule}"
        raise CouplingScheduleError(msg)
    return schedule


def richardson_linear(g_pair: Sequence[float], values: Sequence[float]) -> float:
    """Cancel a leading error linear in g using the estimates at two couplings.

    f(0) ~ (g1 f(g2) - g2 f(g1)) / (g1 - g2)
    """
    if len(g_pair) != 2 or len(values) != 2:
        msg = "richardson_linear takes exactly two couplings and two values"
        raise CouplingScheduleError(msg)
    g1, g2 = g_pair
    f1, f2 = values
    if g1 == g2:
        msg = f"Richardson step needs distinct couplings, got {g1} twice"
        raise CouplingScheduleError(msg)
    return (g1 * f2 - g2 * f1) / (g1 - g2)


def fit_convergence_order(g_list: Sequence[float], errors: Sequence[float]) -> float | None:
    """Slope of log(error) against log(g).

    Errors at or below the exact-error floor carry no order information and
    are skipped; with fewer than two usable points the result is None.
    """
    pairs = [(g, err) for g, err in zip(g_list, errors, strict=True) if err > EXACT_ERROR_FLOOR]
    if len(pairs) < 2:
        return None
    log_g = np.log([g for g, _ in pairs])
    log_err = np.log([err for _, err in pairs])
    slope = np.polyfit(log_g, log_err, 1)[0]
    return float(slope)
