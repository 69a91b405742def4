"""State-preparation outcome and Schmidt-form summary models."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from hardy_core.constants import ATOL
from hardy_core.models.weak import WeakValueTable
from hardy_core.qcore import DensityMatrix, complex_pairs


class PreparationOutcome(BaseModel):
    """Two-photon state produced by a preparation procedure."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    procedure: str = Field(description="'flawed' or 'correct'")
    state: DensityMatrix = Field(exclude=True, description="Prepared 4x4 density matrix")
    purity: float = Field(description="Tr rho^2")
    fidelity_with_target: float = Field(description="<target|rho|target>")
    coherence_offdiag_max: float = Field(description="Largest |off-diagonal| entry of rho")

    @model_validator(mode="after")
    def validate_ranges(self) -> PreparationOutcome:
        """Purity in [1/4, 1] and fidelity in [0, 1]."""
        if not 0.25 - ATOL <= self.purity <= 1.0 + ATOL:
            msg = f"purity {self.purity} outside [1/4, 1]"
            raise ValueError(msg)
        if not -ATOL <= self.fidelity_with_target <= 1.0 + ATOL:
            msg = f"fidelity {self.fidelity_with_target} outside [0, 1]"
            raise ValueError(msg)
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def density_matrix(self) -> Any:  # noqa: ANN401
        """Entries as nested [re, im] pairs."""
        return complex_pairs(self.state.entries)


class SchmidtSummary(BaseModel):
    """Serializable view of a Schmidt decomposition."""

    a: float = Field(description="Larger Schmidt coefficient")
    b: float = Field(description="Smaller Schmidt coefficient")
    a_squared: float = Field(description="Larger eigenvalue of the reduced state")
    b_squared: float = Field(description="Smaller eigenvalue of the reduced state")
    local_rotation_1: list[list[list[float]]] = Field(description="U1 as [re, im] pairs")
    local_rotation_2: list[list[list[float]]] = Field(description="U2 as [re, im] pairs")
    phase_convention: str = Field(description="How phases and ordering were fixed")


class PreparationComparison(BaseModel):
    """Flawed and Schmidt-form preparations side by side."""

    target: list[list[float]] = Field(description="Target ket amplitudes as [re, im] pairs")
    flawed: PreparationOutcome = Field(description="Which-path-recording preparation")
    correct: PreparationOutcome = Field(description="Schmidt-form preparation")
    schmidt: SchmidtSummary = Field(description="Decomposition used by the correct preparation")
    context_table: WeakValueTable | None = Field(
        default=None, description="Pure-target weak values, when the target is the Hardy state"
    )

    @computed_field  # type: ignore[prop-decorator]
    @property
    def flawed_suitable(self) -> bool:
        """Whether the flawed state could stand in for the pure target."""
        return self.flawed.fidelity_with_target >= 1.0 - ATOL
