"""
Pydantic schemas for CHSH settings, estimates, profiles and setting chains.
"""

import math

from pydantic import BaseModel, Field

from bellsim.transform.schemas import Angle
from bellsim.transform.utils import wrap_angle


class ChshSettings(BaseModel):
    """Relative angles of a CHSH experiment.

    Detector A is used at 0 and at delta; detector B sits at delta1 and delta2
    relative to the unrotated A. The four pairs therefore have relative angles
    delta1, delta2, delta1 - delta and delta2 - delta.
    """

    delta1: Angle
    delta2: Angle
    delta: Angle
    phi: Angle = 0.0

    def deltabars(self) -> tuple[float, float, float, float]:
        """Transformation-law parameters of the four pairs, source phase included."""
        return (
            wrap_angle(self.delta1 - self.phi),
            wrap_angle(self.delta2 - self.phi),
            wrap_angle(self.delta1 - self.delta - self.phi),
            wrap_angle(self.delta2 - self.delta - self.phi),
        )

    model_config = {"extra": "forbid", "frozen": True}


class CycleParams(BaseModel):
    """Parameters of the four-map frame cycle."""

    d1: Angle = 0.0
    d2: Angle = 0.0
    dd: Angle = 0.0

    model_config = {"extra": "forbid", "frozen": True}


class ChshEstimate(BaseModel):
    """Monte Carlo estimate of a CHSH combination whose draws lie in [-4, 4]."""

    mean: float = Field(..., ge=-4.0, le=4.0)
    stderr: float = Field(..., ge=0.0)
    n: int = Field(..., ge=1)

    @classmethod
    def from_binary_sum(cls, total: int, n: int) -> "ChshEstimate":
        """Estimate from n draws valued +-2, using the exact variance 4 - mean^2."""
        mean = total / n
        return cls(mean=mean, stderr=math.sqrt(max(0.0, 4.0 - mean * mean) / n), n=n)

    model_config = {"extra": "forbid", "frozen": True}


class PhasePoint(BaseModel):
    lambda_: float = Field(..., alias="lambda")
    defect: float = Field(..., ge=0.0)

    model_config = {"extra": "forbid", "frozen": True, "populate_by_name": True}


class PhaseProfile(BaseModel):
    """Cycle defect over a grid of configurations, with its supremum."""

    points: list[PhasePoint]
    sup: float
    argsup: float

    model_config = {"extra": "forbid", "frozen": True}


class PerConfigMass(BaseModel):
    value: int
    weight: float

    model_config = {"extra": "forbid", "frozen": True}


class PerConfigDistribution(BaseModel):
    """rho-mass of each value of the per-configuration combination."""

    masses: list[PerConfigMass]

    @property
    def mean(self) -> float:
        return math.fsum(m.value * m.weight for m in self.masses)

    @property
    def total(self) -> float:
        return math.fsum(m.weight for m in self.masses)

    model_config = {"extra": "forbid", "frozen": True}


class SettingChain(BaseModel):
    """Transformation parameters of a reference setting and its derived settings.

    t0 is the reference, t1 the setting rotated by delta, t2 rotated again by
    delta_prime, and t3, t4 the rotated settings with the source phase
    cancelled.
    """

    t0: Angle
    t1: Angle
    t2: Angle
    t3: Angle
    t4: Angle

    model_config = {"extra": "forbid", "frozen": True}


class TsirelsonScan(BaseModel):
    grid_n: int
    max_abs: float
    argmax: ChshSettings

    model_config = {"extra": "forbid", "frozen": True}
