"""
Pydantic schemas for joint outcome distributions and correlation scans.
"""

from pydantic import BaseModel, Field, model_validator

from .constants import PROBABILITY_SUM_TOLERANCE
from .exceptions import InvalidDistributionError


class JointDistribution(BaseModel):
    """Probabilities of the four outcome pairs (s_A, s_B)."""

    p_pp: float = Field(..., ge=0.0, le=1.0, description="p(+1, +1)")
    p_pm: float = Field(..., ge=0.0, le=1.0, description="p(+1, -1)")
    p_mp: float = Field(..., ge=0.0, le=1.0, description="p(-1, +1)")
    p_mm: float = Field(..., ge=0.0, le=1.0, description="p(-1, -1)")

    @model_validator(mode="after")
    def check_normalised(self) -> "JointDistribution":
        total = self.p_pp + self.p_pm + self.p_mp + self.p_mm
        if abs(total - 1.0) > PROBABILITY_SUM_TOLERANCE:
            raise InvalidDistributionError(total)
        return self

    @property
    def correlation(self) -> float:
        """p(++) + p(--) - p(+-) - p(-+)."""
        return self.p_pp + self.p_mm - self.p_pm - self.p_mp

    model_config = {"extra": "forbid", "frozen": True}


class ScanRow(BaseModel):
    """One grid point of a correlation scan."""

    deltabar: float
    e_exact: float
    e_mc: float
    stderr: float
    n: int

    model_config = {"extra": "forbid", "frozen": True}
