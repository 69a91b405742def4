"""The analytic weak-value formula and its sum/product-rule diagnostics."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from hardy_analysis.weakval.ensemble import PrePostEnsemble, VectorOperator, WeakValue
from hardy_core.constants import ATOL
from hardy_core.exceptions import DecompositionMismatchError, DimensionMismatchError
from hardy_core.qcore import Operator, SpectralOperator, apply, embed, inner, tensor


def _dense(A: Operator | SpectralOperator) -> Operator:
    return A.dense() if isinstance(A, SpectralOperator) else A


def weak_value(e: PrePostEnsemble, A: Operator | SpectralOperator, label: str = "") -> WeakValue:
    """<A>_w = <post|A|pre> / <post|pre>."""
    overlap = e.require_overlap()
    op = _dense(A)
    if op.dim != e.dim:
        msg = f"Operator dim {op.dim} does not match ensemble dim {e.dim}"
        raise DimensionMismatchError(msg)
    return WeakValue(inner(e.post, apply(op, e.pre)) / overlap, label)


def postselection_probability(e: PrePostEnsemble) -> float:
    """|<post|pre>|^2."""
    return min(abs(e.overlap) ** 2, 1.0)


def sum_rule_check(
    e: PrePostEnsemble,
    parts: Sequence[Operator | SpectralOperator],
    whole: Operator | SpectralOperator,
) -> float:
    """|sum of part weak values - whole weak value|.

    The parts must add up to the whole; otherwise the question is malformed
    and ``DecompositionMismatchError`` is raised.
    """
    if not parts:
        msg = "sum_rule_check needs at least one part"
        raise DecompositionMismatchError(msg)
    whole_op = _dense(whole)
    total = np.zeros_like(whole_op.entries)
    for part in parts:
        total = total + _dense(part).entries
    defect = float(np.max(np.abs(total - whole_op.entries)))
    if defect > ATOL:
        msg = f"Parts differ from the whole by {defect:.3e}"
        raise DecompositionMismatchError(msg)
    summed = sum((weak_value(e, part).value for part in parts), 0j)
    return abs(summed - weak_value(e, whole_op).value)


def _photon_operator(A: Operator | SpectralOperator, role: str) -> Operator:
    op = _dense(A)
    if op.dim != 2:
        msg = f"{role} must be a single-photon (2x2) operator, got dim {op.dim}"
        raise DimensionMismatchError(msg)
    return op


def tensor_weak_value(
    e: PrePostEnsemble, A: Operator | SpectralOperator, B: Operator | SpectralOperator
) -> WeakValue:
    """<A (x) B>_w with A on photon 1 and B on photon 2."""
    joint = tensor(_photon_operator(A, "A"), _photon_operator(B, "B"))
    return weak_value(e, joint, "A(x)B")


def product_rule_violation(
    e: PrePostEnsemble, A: Operator | SpectralOperator, B: Operator | SpectralOperator
) -> float:
    """|<A (x) B>_w - <A>_w <B>_w|; zero whenever weak values factorize."""
    a = weak_value(e, embed(_photon_operator(A, "A"), 1)).value
    b = weak_value(e, embed(_photon_operator(B, "B"), 2)).value
    return abs(tensor_weak_value(e, A, B).value - a * b)


def vector_weak_value(e: PrePostEnsemble, V: VectorOperator) -> list[WeakValue]:
    """Componentwise weak values in component order."""
    return [weak_value(e, c, label) for c, label in zip(V.components, V.labels, strict=True)]
