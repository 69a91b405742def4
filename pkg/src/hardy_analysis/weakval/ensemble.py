"""Pre/post-selected ensembles, weak values and vector operators."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import structlog

from hardy_core.constants import ORTHOGONAL_OVERLAP_ATOL
from hardy_core.exceptions import (
    DimensionMismatchError,
    InvalidSpectralDecompositionError,
    InvalidStateError,
    OrthogonalPostSelectionError,
)
from hardy_core.models import ComplexValue
from hardy_core.qcore import Ket, Operator, SpectralOperator, inner

logger = structlog.get_logger()


@dataclass(frozen=True, eq=False)
class PrePostEnsemble:
    """A (pre, post) state pair; both kets must be normalized.

    An orthogonal pair is constructible, but every weak-value request on it
    raises ``OrthogonalPostSelectionError``.
    """

    pre: Ket
    post: Ket
    overlap: complex = field(init=False)

    def __post_init__(self) -> None:
        if self.pre.dim != self.post.dim:
            msg = f"pre (dim {self.pre.dim}) and post (dim {self.post.dim}) differ"
            raise DimensionMismatchError(msg)
        for name, state in (("pre", self.pre), ("post", self.post)):
            if not state.is_normalized:
                msg = f"{name}-selected state must be normalized (norm {state.norm:.15f})"
                raise InvalidStateError(msg)
        object.__setattr__(self, "overlap", inner(self.post, self.pre))
        logger.debug("ensemble_built", dim=self.pre.dim, overlap_abs=abs(self.overlap))

    @classmethod
    def from_states(cls, pre: Ket, post: Ket) -> PrePostEnsemble:
        """Normalize both states, then build the ensemble."""
        return cls(pre.normalize(), post.normalize())

    @property
    def dim(self) -> int:
        return self.pre.dim

    def require_overlap(self) -> complex:
        """<post|pre>, or raise when the post-selection is orthogonal."""
        if abs(self.overlap) <= ORTHOGONAL_OVERLAP_ATOL:
            msg = f"|<post|pre>| = {abs(self.overlap):.3e}: weak values are undefined"
            raise OrthogonalPostSelectionError(msg)
        return self.overlap


@dataclass(frozen=True)
class WeakValue:
    """<post|A|pre> / <post|pre> for a named operator."""

    value: complex
    operator_label: str = ""

    def __post_init__(self) -> None:
        if not cmath.isfinite(self.value):
            msg = f"Weak value of {self.operator_label or 'operator'} is not finite"
            raise InvalidStateError(msg)
        object.__setattr__(self, "value", complex(self.value))

    @property
    def real(self) -> float:
        return self.value.real + 0.0

    @property
    def imag(self) -> float:
        return self.value.imag + 0.0

    def to_model(self) -> ComplexValue:
        return ComplexValue.of(self.value)


@dataclass(frozen=True, eq=False)
class VectorOperator:
    """Ordered tuple of observables measured componentwise."""

    components: tuple[SpectralOperator, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        components = tuple(self.components)
        if not components:
            msg = "A vector operator needs at least one component"
            raise InvalidSpectralDecompositionError(msg)
        dims = {c.dim for c in components}
        if len(dims) != 1:
            msg = f"Vector operator components have mixed dims {sorted(dims)}"
            raise DimensionMismatchError(msg)
        labels = tuple(self.labels) or tuple(f"component_{i + 1}" for i in range(len(components)))
        if len(labels) != len(components):
            msg = f"{len(labels)} labels for {len(components)} components"
            raise DimensionMismatchError(msg)
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.components[0].dim

    def dense(self) -> tuple[Operator, ...]:
        return tuple(c.dense() for c in self.components)
