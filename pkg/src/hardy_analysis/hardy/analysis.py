"""Weak-value table, A12 critique and strong-collapse contrast for the Hardy ensemble."""

from __future__ import annotations

import structlog

from hardy_analysis.hardy.scenario import HardyScenario
from hardy_analysis.pointer import strong_regime
from hardy_analysis.weakval import (
    build_A12,
    decompose_A12,
    decomposition_residual,
    postselection_probability,
    single_photon_observable,
    tensor_weak_value,
    vector_weak_value,
    weak_value,
)
from hardy_core.constants import ATOL, DEFAULT_SIGMA, STRONG_CONTRAST_RATIO, ZERO_NORM_ATOL
from hardy_core.exceptions import OrthogonalPostSelectionError
from hardy_core.models import (
    A12Analysis,
    ComplexValue,
    StrongComparison,
    StrongContrast,
    WeakValueTable,
)
from hardy_core.qcore import embed, inner, two_photon

logger = structlog.get_logger()


def weak_value_table(s: HardyScenario) -> WeakValueTable:
    """Joint and single-photon arm weak values, rows/columns ordered (inner, outer)."""
    arms = s.arms
    joint_values = [
        [weak_value(s.ensemble, s.joint_projector(p1, p2), f"P_{p1}{p2}").value for p2 in arms]
        for p1 in arms
    ]
    marginal_values = {
        site: [weak_value(s.ensemble, s.single_projector(pol, site)).value for pol in arms]
        for site in (1, 2)
    }
    everything = [v for row in joint_values for v in row]
    everything += marginal_values[1] + marginal_values[2]
    total = sum(v.real for row in joint_values for v in row)
    table = WeakValueTable(
        labels=arms,
        joint=[[v.real + 0.0 for v in row] for row in joint_values],
        marginals_1=(marginal_values[1][0].real + 0.0, marginal_values[1][1].real + 0.0),
        marginals_2=(marginal_values[2][0].real + 0.0, marginal_values[2][1].real + 0.0),
        total=total,
        max_imag_residual=max(abs(v.imag) for v in everything),
    )
    logger.info("weak_table_built", convention=s.convention.value, joint=table.joint)
    return table


def a12_analysis(s: HardyScenario, gamma: float, epsilon: float) -> A12Analysis:
    """Measure A12 = (A2, A1) on the ensemble and contrast it with the joint weak value.

    The vector weak value only ever contains single-photon weak values, so it
    cannot reproduce the both-inner joint value.
    """
    e = s.ensemble
    vector_op = build_A12(gamma, epsilon, gamma_label=s.inner_label)
    singles = decompose_A12(vector_op)
    residual = decomposition_residual(vector_op, singles)

    a_single = single_photon_observable(gamma, epsilon, gamma_label=s.inner_label)
    a2 = weak_value(e, embed(a_single, 2), "A2").value
    a1 = weak_value(e, embed(a_single, 1), "A1").value
    vector_values = [w.value for w in vector_weak_value(e, vector_op)]
    joint_inner = weak_value(e, s.joint_projector(s.inner_label, s.inner_label)).value
    combined = tensor_weak_value(e, a_single, a_single).value

    discrepancy = max(abs(v - joint_inner) for v in vector_values)
    quoted = (epsilon, epsilon)
    quoted_matches = all(abs(v - q) <= ATOL for v, q in zip(vector_values, quoted, strict=True))
    logger.info(
        "a12_analyzed",
        gamma=gamma,
        epsilon=epsilon,
        residual=residual,
        discrepancy=discrepancy,
    )
    return A12Analysis(
        gamma=gamma,
        epsilon=epsilon,
        decomposition_residual=residual,
        vector_weak_value=[ComplexValue.of(v) for v in vector_values],
        a2_weak_value=ComplexValue.of(a2),
        a1_weak_value=ComplexValue.of(a1),
        joint_inner_weak_value=ComplexValue.of(joint_inner),
        tensor_weak_value=ComplexValue.of(combined),
        discrepancy=discrepancy,
        discrepancy_flag=discrepancy > ATOL,
        degenerate=abs(gamma - epsilon) <= ATOL,
        quoted_value=quoted,
        quoted_matches_computed=quoted_matches,
    )


def _collapse_weight(s: HardyScenario, label: str) -> float:
    outcome = two_photon(label)
    return abs(inner(outcome, s.pre)) ** 2 * abs(inner(s.post, outcome)) ** 2


def strong_comparison(s: HardyScenario) -> StrongComparison:
    """Collapse both photons in the arm basis, then post-select.

    Each outcome |p1 p2> occurs with probability |<p1 p2|pre>|^2 and then
    passes post-selection with probability |<post|p1 p2>|^2.
    """
    arms = s.arms
    joint = [[_collapse_weight(s, p1 + p2) for p2 in arms] for p1 in arms]
    total = sum(map(sum, joint))
    if total <= ZERO_NORM_ATOL:
        msg = "No collapse outcome survives the post-selection"
        raise OrthogonalPostSelectionError(msg)
    comparison = StrongComparison(
        labels=arms,
        strong_conditionals=[[p / total for p in row] for row in joint],
        weak_table=weak_value_table(s),
        postselection_prob_strong=min(total, 1.0),
        postselection_prob_weak=postselection_probability(s.ensemble),
    )
    logger.info("strong_comparison_built", postselection_prob_strong=total)
    return comparison


def strong_contrast(
    s: HardyScenario, sigma: float = DEFAULT_SIGMA, ratio: float = STRONG_CONTRAST_RATIO
) -> StrongContrast:
    """Strongly coupled inner-arm pointers on both photons versus projective collapse.

    With g = ratio * sigma the branch pointers are close to orthogonal, so the
    post-selected branch weights should reproduce ``strong_comparison``.
    """
    collapse = strong_comparison(s)
    inner_arm, outer_arm = s.arms
    names = {1.0: inner_arm, 0.0: outer_arm}
    readout = strong_regime(
        s.ensemble,
        [s.single_projector(inner_arm, 1), s.single_projector(inner_arm, 2)],
        sigma,
        ratio * sigma,
        value_labels=[names, names],
        names=[f"P_{inner_arm}1", f"P_{inner_arm}2"],
    )
    deviation = max(
        abs(readout.conditional(p1 + p2) - collapse.strong_conditionals[i][j])
        for i, p1 in enumerate(s.arms)
        for j, p2 in enumerate(s.arms)
    )
    logger.info("strong_contrast_built", max_deviation=deviation, overlap=readout.overlap_bound)
    return StrongContrast(collapse=collapse, pointer=readout, max_deviation=deviation)
