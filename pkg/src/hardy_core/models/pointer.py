"""Pointer configuration, readout and estimator result models."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from hardy_core.constants import ATOL, DEFAULT_SIGMA
from hardy_core.models.weak import ComplexValue, StrongComparison


class PointerConfig(BaseModel):
    """Initial Gaussian pointer: position spread and coupling strength."""

    model_config = ConfigDict(frozen=True)

    sigma: float = Field(
        default=DEFAULT_SIGMA, gt=0.0, allow_inf_nan=False, description="Position spread"
    )
    g: float = Field(default=0.0, allow_inf_nan=False, description="Coupling strength")
    label: str = Field(default="", description="Name of the observable this pointer reads")

    @property
    def ratio(self) -> float:
        """Dimensionless coupling g / sigma."""
        return self.g / self.sigma


class PointerReadout(BaseModel):
    """Post-selected pointer moments, one entry per attached pointer."""

    labels: list[str] = Field(description="Pointer labels in coupling order")
    postselection_probability: float = Field(description="Probability of the post-selection")
    mean_x: list[float] = Field(description="Post-selected <x> per pointer")
    mean_p: list[float] = Field(description="Post-selected <p> per pointer")
    corr_xx: list[list[float]] = Field(description="Post-selected <x_i x_j>")

    @model_validator(mode="after")
    def validate_moments(self) -> PointerReadout:
        """Probability in [0, 1] and a square symmetric correlation matrix."""
        if not -ATOL <= self.postselection_probability <= 1.0 + ATOL:
            msg = f"postselection_probability {self.postselection_probability} outside [0, 1]"
            raise ValueError(msg)
        n = len(self.labels)
        if len(self.mean_x) != n or len(self.mean_p) != n:
            msg = f"expected {n} pointer means"
            raise ValueError(msg)
        if len(self.corr_xx) != n or any(len(row) != n for row in self.corr_xx):
            msg = f"corr_xx must be {n}x{n}"
            raise ValueError(msg)
        for i in range(n):
            for j in range(i + 1, n):
                if abs(self.corr_xx[i][j] - self.corr_xx[j][i]) > ATOL * max(
                    1.0, abs(self.corr_xx[i][j])
                ):
                    msg = f"corr_xx not symmetric at ({i}, {j})"
                    raise ValueError(msg)
        return self


class CouplingPoint(BaseModel):
    """Single-observable estimate at one coupling strength."""

    g: float = Field(description="Coupling strength")
    estimate: ComplexValue = Field(description="Weak-value estimate read from the pointer")
    error: float = Field(description="|estimate - analytic weak value|")
    postselection_probability: float = Field(description="Post-selection probability at this g")


class SingleEstimate(BaseModel):
    """Weak-limit estimate of a single-observable weak value."""

    label: str = Field(description="Observable label")
    sigma: float = Field(description="Pointer spread")
    points: list[CouplingPoint] = Field(description="Per-coupling estimates in g_list order")
    estimate: ComplexValue = Field(description="Richardson-extrapolated estimate")
    analytic: ComplexValue = Field(description="Exact weak value from the analytic formula")
    error: float = Field(description="|extrapolated estimate - analytic|")
    fitted_order: float | None = Field(
        description="Log-log slope of error vs g; None when exact at every g"
    )


class JointPoint(BaseModel):
    """Correlation readout at one coupling strength."""

    g: float = Field(description="Coupling strength applied to both pointers")
    raw_ratio: float = Field(description="<x1 x2> / g^2")
    marginal_a: ComplexValue = Field(description="Photon-1 estimate from the same readout")
    marginal_b: ComplexValue = Field(description="Photon-2 estimate from the same readout")
    extracted: float = Field(description="Re<A (x) B>_w solved from the correlation")
    error: float = Field(description="|extracted - analytic joint weak value|")


class JointEstimate(BaseModel):
    """Correlation-based estimate of a real joint weak value."""

    label: str = Field(description="Observable pair label")
    sigma: float = Field(description="Pointer spread")
    coefficient: float = Field(description="Correlation coefficient used to solve for the joint")
    points: list[JointPoint] = Field(description="Per-coupling readouts in g_list order")
    raw_ratio: float = Field(description="Extrapolated <x1 x2> / g^2")
    extracted: float = Field(description="Extrapolated Re<A (x) B>_w")
    analytic_joint: ComplexValue = Field(description="Exact <A (x) B>_w")
    analytic_raw_ratio: float = Field(description="Weak-limit value of the raw ratio")
    error: float = Field(description="|extracted - Re analytic joint|")
    fitted_order: float | None = Field(
        description="Log-log slope of error vs g; None when exact at every g"
    )


class StrongOutcome(BaseModel):
    """One collapse branch of a strong measurement."""

    label: str = Field(description="Branch label, e.g. 'HV'")
    eigenvalues: list[float] = Field(description="Eigenvalue read by each pointer")
    joint_probability: float = Field(description="P(branch and post-selection)")
    conditional_probability: float = Field(description="P(branch | post-selection)")


class StrongReadout(BaseModel):
    """Branch-resolved post-selected statistics in the strong regime."""

    sigma: float = Field(description="Pointer spread")
    g: float = Field(description="Coupling strength of every pointer")
    order: list[str] = Field(description="Observables in coupling order")
    outcomes: list[StrongOutcome] = Field(description="Branches with nonzero amplitude")
    postselection_probability: float = Field(description="Total post-selection probability")
    overlap_bound: float = Field(description="Largest pairwise branch overlap")

    @model_validator(mode="after")
    def validate_conditionals(self) -> StrongReadout:
        """Conditionals sum to one when anything survives post-selection."""
        total = sum(o.conditional_probability for o in self.outcomes)
        if self.postselection_probability > 0.0 and abs(total - 1.0) > ATOL:
            msg = f"conditional probabilities sum to {total}"
            raise ValueError(msg)
        return self

    def conditional(self, label: str) -> float:
        """Conditional probability of a branch label; 0 for absent branches."""
        for outcome in self.outcomes:
            if outcome.label == label:
                return outcome.conditional_probability
        return 0.0


class CoefficientFit(BaseModel):
    """Least-squares fit of a readout coefficient against the analytic oracle."""

    name: str = Field(description="Which coefficient was fitted")
    coefficient: float = Field(description="Fit over every coupling")
    per_coupling: list[tuple[float, float]] = Field(description="(g, fitted coefficient) pairs")
    spread: float = Field(description="max - min of the per-coupling fits")
    samples: int = Field(description="Ensembles used in each fit")


class StrongContrast(BaseModel):
    """Projective-collapse statistics next to the strong-pointer readout of the same ensemble."""

    collapse: StrongComparison = Field(description="Collapse-then-post-select computation")
    pointer: StrongReadout = Field(description="Branch statistics of strongly coupled pointers")
    max_deviation: float = Field(
        description="Largest |pointer conditional - collapse conditional| over arm pairs"
    )
