"""
Pydantic schemas for conditional-probability tables, verdicts and witnesses.
"""

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from bellsim.enums import Interpretation
from bellsim.transform.utils import FloatArray
from .constants import OUTCOME_PAIRS, ROW_SUM_TOLERANCE
from .enums import CertificateKind
from .exceptions import RowSumError


class CondProbTable(BaseModel):
    """p[r][c]: probability of outcome pair OUTCOME_PAIRS[c] given row r."""

    rows: tuple[str, str, str, str]
    p: tuple[
        tuple[float, float, float, float],
        tuple[float, float, float, float],
        tuple[float, float, float, float],
        tuple[float, float, float, float],
    ]

    @field_validator("p")
    @classmethod
    def check_entries(
        cls, value: tuple[tuple[float, ...], ...]
    ) -> tuple[tuple[float, ...], ...]:
        for row in value:
            for entry in row:
                if not 0.0 <= entry <= 1.0:
                    raise ValueError(f"Table entries must lie in [0, 1], got {entry!r}")
        return value

    @model_validator(mode="after")
    def check_rows_normalised(self) -> "CondProbTable":
        for index, row in enumerate(self.p):
            total = sum(row)
            if abs(total - 1.0) > ROW_SUM_TOLERANCE:
                raise RowSumError(index, total)
        return self

    @classmethod
    def from_matrix(cls, matrix: FloatArray, rows: tuple[str, str, str, str]) -> "CondProbTable":
        return cls.model_validate(
            {"rows": rows, "p": [[float(x) for x in row] for row in matrix]}
        )

    @property
    def matrix(self) -> FloatArray:
        return np.array(self.p, dtype=np.float64)

    @property
    def columns(self) -> tuple[str, ...]:
        return OUTCOME_PAIRS

    model_config = {"extra": "forbid", "frozen": True}


class LocalStrategy(BaseModel):
    """Deterministic local response: outcome of A for A=+1, A=-1 and of B for B=+1, B=-1."""

    a_plus: int
    a_minus: int
    b_plus: int
    b_minus: int

    @property
    def label(self) -> str:
        signs = (self.a_plus, self.a_minus, self.b_plus, self.b_minus)
        return "".join("+" if s > 0 else "-" for s in signs)

    model_config = {"extra": "forbid", "frozen": True}


class LocalMixture(BaseModel):
    """Convex weights over the 16 deterministic local strategies."""

    strategies: list[LocalStrategy]
    weights: list[float]

    model_config = {"extra": "forbid", "frozen": True}


class ModelPoint(BaseModel):
    """Point of a finite hidden-variable sample space: weight and outcome pair per row."""

    weight: float = Field(..., gt=0.0, le=1.0)
    outcomes: tuple[str, str, str, str]

    model_config = {"extra": "forbid", "frozen": True}


class HiddenVariableModel(BaseModel):
    points: list[ModelPoint]

    model_config = {"extra": "forbid", "frozen": True}


class ChshCertificate(BaseModel):
    """A combination of the four row correlations and its value.

    ``signs[k]`` multiplies the correlation of row k.
    """

    kind: CertificateKind = CertificateKind.CHSH
    index: int
    signs: tuple[int, int, int, int]
    value: float

    model_config = {"extra": "forbid", "frozen": True}


class SignalingCertificate(BaseModel):
    """A marginal that changes with the remote setting."""

    kind: CertificateKind = CertificateKind.SIGNALING
    party: str
    gap: float

    model_config = {"extra": "forbid", "frozen": True}


class FeasibilityVerdict(BaseModel):
    feasible: bool
    interpretation: Interpretation
    mixture: LocalMixture | None = None
    model: HiddenVariableModel | None = None
    certificate: ChshCertificate | SignalingCertificate | None = None

    model_config = {"extra": "forbid", "frozen": True}
