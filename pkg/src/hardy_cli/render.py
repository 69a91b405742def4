"""Text (rich) and TSV renderings of analysis results.

JSON output goes through ``Report.to_json``; everything here is for humans,
except the TSV table which is plain tab-separated text with "." decimals.
"""

from __future__ import annotations

import csv
import io

from rich.console import Group, RenderableType
from rich.table import Table
from rich.text import Text

from hardy_core.constants import ATOL
from hardy_core.models import (
    A12Analysis,
    ComplexValue,
    JointEstimate,
    PreparationOutcome,
    SchmidtSummary,
    SingleEstimate,
    StrongContrast,
    WeakValueTable,
    format_float,
)


def _num(value: float | None) -> str:
    if value is None:
        return "-"
    return f"{value + 0.0:.6g}"


def _snap(value: float) -> float:
    return 0.0 if abs(value) < ATOL else value


def _val(value: float) -> str:
    """A computed quantity with rounding residue shown as 0."""
    return _num(_snap(value))


def _cx(value: ComplexValue) -> str:
    re, im = _snap(value.re), _snap(value.im)
    if im == 0.0:
        return _num(re)
    sign = "-" if im < 0 else "+"
    return f"{_num(re)} {sign} {_num(abs(im))}i"


def _key_values(title: str, rows: list[tuple[str, str]]) -> Table:
    table = Table(title=title, show_header=False, title_justify="left")
    table.add_column("quantity")
    table.add_column("value", justify="right")
    for key, value in rows:
        table.add_row(key, value)
    return table


def weak_table_tsv(table: WeakValueTable) -> str:
    """Header row plus one row per photon-1 arm."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter="\t", lineterminator="\n")
    writer.writerow(["photon1/photon2", *table.labels])
    for label, row in zip(table.labels, table.joint, strict=True):
        writer.writerow([label, *(format_float(v) for v in row)])
    return buffer.getvalue()


def weak_table_view(table: WeakValueTable) -> RenderableType:
    joint = Table(title="Joint weak values (rows photon 1)", title_justify="left")
    joint.add_column("")
    for label in table.labels:
        joint.add_column(label, justify="right")
    for label, row in zip(table.labels, table.joint, strict=True):
        joint.add_row(label, *(_val(v) for v in row))

    singles = Table(title="Single-photon weak values", title_justify="left")
    singles.add_column("photon")
    for label in table.labels:
        singles.add_column(f"P_{label}", justify="right")
    singles.add_row("1", *(_val(v) for v in table.marginals_1))
    singles.add_row("2", *(_val(v) for v in table.marginals_2))
    footer = Text(f"sum of joint weak values: {_val(table.total)}")
    return Group(joint, singles, footer)


def _outcome_view(outcome: PreparationOutcome) -> Table:
    return _key_values(
        f"{outcome.procedure} preparation",
        [
            ("fidelity with target", _val(outcome.fidelity_with_target)),
            ("purity", _val(outcome.purity)),
            ("max off-diagonal |rho_ij|", _val(outcome.coherence_offdiag_max)),
        ],
    )


def _schmidt_view(schmidt: SchmidtSummary) -> Table:
    return _key_values(
        "Schmidt form a|HH> + b|VV>",
        [
            ("a", _val(schmidt.a)),
            ("b", _val(schmidt.b)),
            ("a^2", _val(schmidt.a_squared)),
            ("b^2", _val(schmidt.b_squared)),
        ],
    )


def prep_view(
    flawed: PreparationOutcome | None,
    correct: PreparationOutcome | None,
    schmidt: SchmidtSummary | None,
) -> RenderableType:
    parts: list[RenderableType] = []
    if flawed is not None:
        parts.append(_outcome_view(flawed))
    if correct is not None:
        parts.append(_outcome_view(correct))
    if schmidt is not None:
        parts.append(_schmidt_view(schmidt))
    return Group(*parts)


def single_estimate_view(estimate: SingleEstimate) -> RenderableType:
    table = Table(title=f"Pointer readout of {estimate.label}", title_justify="left")
    for column in ("g", "estimate", "|error|", "P(post)"):
        table.add_column(column, justify="right")
    for point in estimate.points:
        table.add_row(
            _num(point.g),
            _cx(point.estimate),
            _num(point.error),
            _val(point.postselection_probability),
        )
    summary = _key_values(
        "Weak limit",
        [
            ("extrapolated", _cx(estimate.estimate)),
            ("analytic", _cx(estimate.analytic)),
            ("|error|", _num(estimate.error)),
            ("fitted order", _num(estimate.fitted_order)),
        ],
    )
    return Group(table, summary)


def joint_estimate_view(estimate: JointEstimate) -> RenderableType:
    table = Table(title=f"Pointer correlation for {estimate.label}", title_justify="left")
    for column in ("g", "<x1 x2>/g^2", "extracted", "|error|"):
        table.add_column(column, justify="right")
    for point in estimate.points:
        table.add_row(
            _num(point.g), _val(point.raw_ratio), _val(point.extracted), _num(point.error)
        )
    summary = _key_values(
        "Weak limit",
        [
            ("raw ratio", _val(estimate.raw_ratio)),
            ("raw ratio (analytic)", _val(estimate.analytic_raw_ratio)),
            ("extracted Re joint weak value", _val(estimate.extracted)),
            ("analytic joint weak value", _cx(estimate.analytic_joint)),
            ("|error|", _num(estimate.error)),
            ("fitted order", _num(estimate.fitted_order)),
        ],
    )
    return Group(table, summary)


def strong_view(contrast: StrongContrast) -> RenderableType:
    collapse = contrast.collapse
    table = Table(title="Strong versus weak (same post-selection)", title_justify="left")
    table.add_column("pair")
    for column in ("P(pair|post) collapse", "P(pair|post) pointers", "weak value"):
        table.add_column(column, justify="right")
    for i, p1 in enumerate(collapse.labels):
        for j, p2 in enumerate(collapse.labels):
            table.add_row(
                p1 + p2,
                _val(collapse.strong_conditionals[i][j]),
                _val(contrast.pointer.conditional(p1 + p2)),
                _val(collapse.weak_table.joint[i][j]),
            )
    summary = _key_values(
        "Post-selection",
        [
            ("probability after collapse", _val(collapse.postselection_prob_strong)),
            ("probability undisturbed", _val(collapse.postselection_prob_weak)),
            ("pointer g / sigma", _num(contrast.pointer.g / contrast.pointer.sigma)),
            ("max pointer overlap", _num(contrast.pointer.overlap_bound)),
            ("max |pointer - collapse|", _num(contrast.max_deviation)),
        ],
    )
    return Group(table, summary)


def a12_view(analysis: A12Analysis) -> RenderableType:
    a2, a1 = analysis.vector_weak_value
    return _key_values(
        f"A12 with gamma={_num(analysis.gamma)}, epsilon={_num(analysis.epsilon)}",
        [
            ("<A12>_w", f"({_cx(a2)}, {_cx(a1)})"),
            ("joint inner-inner weak value", _cx(analysis.joint_inner_weak_value)),
            ("<A1 (x) A2>_w", _cx(analysis.tensor_weak_value)),
            ("max |component - joint|", _num(analysis.discrepancy)),
            ("decomposition residual", _num(analysis.decomposition_residual)),
            ("degenerate (gamma == epsilon)", str(analysis.degenerate).lower()),
            (
                "quoted (epsilon, epsilon) reproduced",
                str(analysis.quoted_matches_computed).lower(),
            ),
        ],
    )
