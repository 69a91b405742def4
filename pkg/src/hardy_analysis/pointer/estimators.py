"""Weak-limit estimators and the strong-measurement regime."""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence

import structlog

from hardy_analysis.pointer.extrapolation import (
    check_schedule,
    fit_convergence_order,
    richardson_linear,
)
from hardy_analysis.pointer.readout import readout
from hardy_analysis.pointer.state import GaussianBranchState, couple, prepare
from hardy_analysis.weakval import PrePostEnsemble, tensor_weak_value, weak_value
from hardy_core.constants import (
    BRANCH_WEIGHT_RTOL,
    IMAG_READOUT_COEFFICIENT,
    JOINT_CORRELATION_COEFFICIENT,
    STRONG_REGIME_MIN_RATIO,
    ZERO_NORM_ATOL,
)
from hardy_core.exceptions import (
    DimensionMismatchError,
    MeasurementRegimeError,
    OrthogonalPostSelectionError,
)
from hardy_core.models import (
    ComplexValue,
    CouplingPoint,
    JointEstimate,
    JointPoint,
    PointerConfig,
    PointerReadout,
    SingleEstimate,
    StrongOutcome,
    StrongReadout,
)
from hardy_core.qcore import SpectralOperator, embed, inner

logger = structlog.get_logger()


def pointer_estimate(result: PointerReadout, index: int, g: float, sigma: float) -> complex:
    """Weak-value estimate from one pointer: <x>/g + i <p> sigma^2 / (k g)."""
    real = result.mean_x[index] / g
    imag = result.mean_p[index] * sigma**2 / (g * IMAG_READOUT_COEFFICIENT)
    return complex(real, imag)


def _extrapolate(g_list: tuple[float, ...], values: Sequence[complex]) -> complex:
    pair = g_list[-2:]
    tail = values[-2:]
    real = richardson_linear(pair, [v.real for v in tail])
    imag = richardson_linear(pair, [v.imag for v in tail])
    return complex(real, imag)


def estimate_single(
    e: PrePostEnsemble,
    obs: SpectralOperator,
    sigma: float,
    g_list: Sequence[float],
    label: str = "",
) -> SingleEstimate:
    """Read <obs>_w off a single pointer at every g, then extrapolate to g -> 0.

    Couplings are evaluated in ``g_list`` order; the two smallest feed the
    Richardson step.
    """
    schedule = check_schedule(g_list)
    analytic = weak_value(e, obs, label).value
    base = prepare(e.pre)

    points: list[CouplingPoint] = []
    for g in schedule:
        cfg = PointerConfig(sigma=sigma, g=g, label=label)
        result = readout(couple(base, obs, cfg), e.post)
        estimate = pointer_estimate(result, 0, g, sigma)
        points.append(
            CouplingPoint(
                g=g,
                estimate=ComplexValue.of(estimate),
                error=abs(estimate - analytic),
                postselection_probability=result.postselection_probability,
            )
        )

    extrapolated = _extrapolate(schedule, [p.estimate.value for p in points])
    order = fit_convergence_order(schedule, [p.error for p in points])
    logger.info(
        "estimate_complete",
        observable=label,
        estimate=extrapolated.real,
        analytic=analytic.real,
        fitted_order=order,
    )
    return SingleEstimate(
        label=label,
        sigma=sigma,
        points=points,
        estimate=ComplexValue.of(extrapolated),
        analytic=ComplexValue.of(analytic),
        error=abs(extrapolated - analytic),
        fitted_order=order,
    )


def couple_pair(
    e: PrePostEnsemble,
    obs_a: SpectralOperator,
    obs_b: SpectralOperator,
    sigma: float,
    g: float,
    label: str = "",
) -> GaussianBranchState:
    """Photon 1 observable coupled first, then photon 2, each to its own pointer."""
    for name, obs in (("obs_a", obs_a), ("obs_b", obs_b)):
        if obs.dim != 2:
            msg = f"{name} must be a single-photon observable, got dim {obs.dim}"
            raise DimensionMismatchError(msg)
    state = couple(prepare(e.pre), embed(obs_a, 1), PointerConfig(sigma=sigma, g=g, label="A1"))
    state = couple(state, embed(obs_b, 2), PointerConfig(sigma=sigma, g=g, label="B2"))
    logger.debug("pair_coupled", label=label, g=g)
    return state


def estimate_joint(
    e: PrePostEnsemble,
    obs_a: SpectralOperator,
    obs_b: SpectralOperator,
    sigma: float,
    g_list: Sequence[float],
    label: str = "",
) -> JointEstimate:
    """Solve Re<A (x) B>_w from the post-selected pointer correlation <x1 x2>.

    In the weak limit <x1 x2> / g^2 -> k [Re<A B>_w + Re(<A>_w conj<B>_w)];
    the marginals come from the same two-pointer readout.
    """
    schedule = check_schedule(g_list)
    analytic = tensor_weak_value(e, obs_a, obs_b).value
    a_w = weak_value(e, embed(obs_a, 1)).value
    b_w = weak_value(e, embed(obs_b, 2)).value
    k = JOINT_CORRELATION_COEFFICIENT

    points: list[JointPoint] = []
    for g in schedule:
        result = readout(couple_pair(e, obs_a, obs_b, sigma, g, label), e.post)
        a = pointer_estimate(result, 0, g, sigma)
        b = pointer_estimate(result, 1, g, sigma)
        raw = result.corr_xx[0][1] / g**2
        extracted = raw / k - (a * b.conjugate()).real
        points.append(
            JointPoint(
                g=g,
                raw_ratio=raw,
                marginal_a=ComplexValue.of(a),
                marginal_b=ComplexValue.of(b),
                extracted=extracted,
                error=abs(extracted - analytic.real),
            )
        )

    pair = schedule[-2:]
    raw_ratio = richardson_linear(pair, [p.raw_ratio for p in points[-2:]])
    extracted = richardson_linear(pair, [p.extracted for p in points[-2:]])
    order = fit_convergence_order(schedule, [p.error for p in points])
    logger.info(
        "joint_estimate_complete",
        pair=label,
        extracted=extracted,
        analytic=analytic.real,
        fitted_order=order,
    )
    return JointEstimate(
        label=label,
        sigma=sigma,
        coefficient=k,
        points=points,
        raw_ratio=raw_ratio,
        extracted=extracted,
        analytic_joint=ComplexValue.of(analytic),
        analytic_raw_ratio=k * (analytic.real + (a_w * b_w.conjugate()).real),
        error=abs(extracted - analytic.real),
        fitted_order=order,
    )


def _branch_label(
    eigenvalues: Sequence[float], value_labels: Sequence[Mapping[float, str]] | None
) -> str:
    if value_labels is None:
        return ",".join(f"{v:g}" for v in eigenvalues)
    return "".join(
        names.get(v, f"{v:g}") for v, names in zip(eigenvalues, value_labels, strict=True)
    )


def strong_regime(
    e: PrePostEnsemble,
    observables: Sequence[SpectralOperator],
    sigma: float,
    g: float,
    value_labels: Sequence[Mapping[float, str]] | None = None,
    names: Sequence[str] | None = None,
) -> StrongReadout:
    """Couple every observable strongly (g / sigma >= threshold) and resolve branches.

    Branch pointers are then nearly orthogonal, so post-selected branch
    weights match projective-collapse statistics up to ``overlap_bound``.
    """
    if g / sigma < STRONG_REGIME_MIN_RATIO:
        msg = f"g/sigma = {g / sigma:g} is below the strong-regime threshold"
        raise MeasurementRegimeError(msg)
    if names is None:
        names = [f"obs{i + 1}" for i in range(len(observables))]
    labels = list(names)
    if len(labels) != len(observables):
        msg = f"{len(labels)} names for {len(observables)} observables"
        raise DimensionMismatchError(msg)

    state = prepare(e.pre)
    for obs, name in zip(observables, labels, strict=True):
        state = couple(state, obs, PointerConfig(sigma=sigma, g=g, label=name))

    weights = [abs(inner(e.post, b.system)) ** 2 for b in state.branches]
    total = sum(weights)
    if total <= ZERO_NORM_ATOL:
        msg = f"No collapse branch survives post-selection (probability {total:.3e})"
        raise OrthogonalPostSelectionError(msg)

    overlaps = state.overlap_matrix()
    bound = max(
        (float(overlaps[j, k]) for j, k in itertools.combinations(range(len(weights)), 2)),
        default=0.0,
    )
    outcomes = []
    for branch, weight in zip(state.branches, weights, strict=True):
        # Weights at rounding level relative to the total are not outcomes.
        if weight <= BRANCH_WEIGHT_RTOL * total:
            continue
        eigenvalues = [shift / g + 0.0 for shift in branch.shifts]
        outcomes.append(
            StrongOutcome(
                label=_branch_label(eigenvalues, value_labels),
                eigenvalues=eigenvalues,
                joint_probability=weight,
                conditional_probability=weight / total,
            )
        )
    logger.info("strong_readout_complete", branches=len(outcomes), overlap_bound=bound)
    return StrongReadout(
        sigma=sigma,
        g=g,
        order=labels,
        outcomes=outcomes,
        postselection_probability=total,
        overlap_bound=bound,
    )
