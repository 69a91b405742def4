"""Weak-value result models: complex values, the Hardy table and its strong contrast."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from hardy_core.constants import ATOL


class ComplexValue(BaseModel):
    """A complex number serialized as its real and imaginary parts."""

    model_config = ConfigDict(frozen=True)

    re: float = Field(description="Real part")
    im: float = Field(description="Imaginary part")

    @classmethod
    def of(cls, value: complex) -> ComplexValue:
        z = complex(value)
        return cls(re=z.real + 0.0, im=z.imag + 0.0)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


class WeakValueTable(BaseModel):
    """Joint and single-photon weak values for the two-photon arm projectors.

    Rows index photon 1 and columns photon 2, both ordered (inner, outer).
    """

    labels: tuple[str, str] = Field(description="Polarization labels of the (inner, outer) arms")
    joint: list[list[float]] = Field(description="2x2 joint weak values, rows photon 1")
    marginals_1: tuple[float, float] = Field(description="Photon 1 (inner, outer) weak values")
    marginals_2: tuple[float, float] = Field(description="Photon 2 (inner, outer) weak values")
    total: float = Field(description="Sum of the four joint weak values")
    max_imag_residual: float = Field(description="Largest |Im| over all entries")

    @model_validator(mode="after")
    def validate_consistency(self) -> WeakValueTable:
        """Marginals must equal row/column sums and the joints must sum to one."""
        if len(self.joint) != 2 or any(len(row) != 2 for row in self.joint):
            msg = "joint must be a 2x2 matrix"
            raise ValueError(msg)
        for k in range(2):
            row_sum = self.joint[k][0] + self.joint[k][1]
            col_sum = self.joint[0][k] + self.joint[1][k]
            if abs(row_sum - self.marginals_1[k]) > ATOL:
                msg = f"marginals_1[{k}]={self.marginals_1[k]} != row sum {row_sum}"
                raise ValueError(msg)
            if abs(col_sum - self.marginals_2[k]) > ATOL:
                msg = f"marginals_2[{k}]={self.marginals_2[k]} != column sum {col_sum}"
                raise ValueError(msg)
        if abs(sum(map(sum, self.joint)) - self.total) > ATOL or abs(self.total - 1.0) > ATOL:
            msg = f"total {self.total} inconsistent with joints or != 1"
            raise ValueError(msg)
        if self.max_imag_residual > ATOL:
            msg = f"imaginary residual {self.max_imag_residual:.3e} exceeds {ATOL}"
            raise ValueError(msg)
        return self

    def entry(self, photon1: str, photon2: str) -> float:
        """Joint weak value by polarization labels, e.g. entry('H', 'H')."""
        return self.joint[self.labels.index(photon1)][self.labels.index(photon2)]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def min_joint(self) -> float:
        return min(min(row) for row in self.joint)


class StrongComparison(BaseModel):
    """Projective-collapse conditionals side by side with the weak table."""

    labels: tuple[str, str] = Field(description="Polarization labels of the (inner, outer) arms")
    strong_conditionals: list[list[float]] = Field(
        description="P(photon1, photon2 | post) after collapsing both photons"
    )
    weak_table: WeakValueTable = Field(description="Weak values for the same ensemble")
    postselection_prob_strong: float = Field(
        ge=0.0, le=1.0, description="Post-selection probability after collapse"
    )
    postselection_prob_weak: float = Field(
        ge=0.0, le=1.0, description="Undisturbed post-selection probability |<post|pre>|^2"
    )

    @model_validator(mode="after")
    def validate_probabilities(self) -> StrongComparison:
        """Conditionals are probabilities summing to one."""
        flat = [p for row in self.strong_conditionals for p in row]
        if len(flat) != 4 or any(p < -ATOL or p > 1.0 + ATOL for p in flat):
            msg = f"strong_conditionals must be four probabilities, got {flat}"
            raise ValueError(msg)
        if abs(sum(flat) - 1.0) > ATOL:
            msg = f"strong_conditionals sum to {sum(flat)}, not 1"
            raise ValueError(msg)
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def negativity_witnessed(self) -> bool:
        """Weak table has a negative entry while every strong conditional is >= 0."""
        strong_nonnegative = all(p >= -ATOL for row in self.strong_conditionals for p in row)
        return strong_nonnegative and self.weak_table.min_joint < -ATOL


class A12Analysis(BaseModel):
    """Result of measuring the vector operator A12 = (A2, A1) on the Hardy ensemble."""

    gamma: float = Field(description="Eigenvalue on the inner-arm polarization")
    epsilon: float = Field(description="Eigenvalue on the outer-arm polarization")
    decomposition_residual: float = Field(
        description="Max entrywise |A12 component - extended single-photon operator|"
    )
    vector_weak_value: list[ComplexValue] = Field(description="Componentwise weak values")
    a2_weak_value: ComplexValue = Field(description="<A2>_w")
    a1_weak_value: ComplexValue = Field(description="<A1>_w")
    joint_inner_weak_value: ComplexValue = Field(
        description="Weak value of the both-inner projector"
    )
    tensor_weak_value: ComplexValue = Field(description="<A1 (x) A2>_w, the joint combination")
    discrepancy: float = Field(
        description="Largest |vector component - both-inner joint weak value|"
    )
    discrepancy_flag: bool = Field(description="Vector weak value contradicts the joint value")
    degenerate: bool = Field(description="gamma == epsilon: components are multiples of I")
    quoted_value: tuple[float, float] = Field(
        description="The (epsilon, epsilon) value claimed for the vector weak value"
    )
    quoted_matches_computed: bool = Field(
        description="Whether the quoted (epsilon, epsilon) equals the computed vector value"
    )


class Narrative(BaseModel):
    """Paradox statement with computed numbers substituted."""

    text: str = Field(description="Human-readable narrative")
    values: dict[str, float | str | list[float] | list[list[float]]] = Field(
        description="Numbers substituted into the text"
    )
