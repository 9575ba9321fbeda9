"""
Pydantic schemas for angles, experiment settings and transformation curves.
"""

from typing import Annotated

from pydantic import AfterValidator, BaseModel, Field

from .utils import wrap_angle

# Real number of radians, wrapped to [-pi, pi) on ingestion
Angle = Annotated[float, AfterValidator(wrap_angle)]


class ExperimentSetting(BaseModel):
    """Relative detector orientation and source phase of one experiment."""

    delta: Angle = Field(..., description="Relative detector orientation (radians)")
    phi: Angle = Field(default=0.0, description="Source phase (radians)")

    @property
    def deltabar(self) -> float:
        """Effective parameter of the transformation law, wrap(delta - phi)."""
        return wrap_angle(self.delta - self.phi)

    @classmethod
    def from_deltabar(cls, deltabar: float) -> "ExperimentSetting":
        return cls(delta=deltabar, phi=0.0)

    model_config = {"extra": "forbid", "frozen": True}


class TransformPoint(BaseModel):
    """One sample of the transformation-law curve."""

    lambda_: float = Field(..., alias="lambda")
    l_value: float
    linear: float = Field(..., description="Euclidean law at the same point")

    model_config = {"extra": "forbid", "frozen": True, "populate_by_name": True}
