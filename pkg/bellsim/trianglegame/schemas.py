"""
Pydantic schemas for points and tangent vectors on the unit sphere, spherical
triangles and game reports.
"""

import math

import numpy as np
from pydantic import BaseModel, model_validator

from bellsim.models import CorrelationEstimate
from bellsim.transform.utils import FloatArray
from .constants import (
    COLLINEAR_MARGIN,
    COPLANAR_MARGIN,
    TANGENCY_TOLERANCE,
    UNIT_NORM_TOLERANCE,
)
from .exceptions import DegenerateTriangleError, NotTangentError, NotUnitVectorError


class UnitVec3(BaseModel):
    x: float
    y: float
    z: float

    @model_validator(mode="after")
    def check_unit(self) -> "UnitVec3":
        norm = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if not abs(norm - 1.0) <= UNIT_NORM_TOLERANCE:
            raise NotUnitVectorError(norm)
        return self

    @classmethod
    def from_array(cls, v: FloatArray) -> "UnitVec3":
        return cls(x=float(v[0]), y=float(v[1]), z=float(v[2]))

    @classmethod
    def normalized(cls, v: FloatArray) -> "UnitVec3":
        """Unit vector along v."""
        arr = np.asarray(v, dtype=np.float64)
        return cls.from_array(arr / np.linalg.norm(arr))

    @property
    def array(self) -> FloatArray:
        return np.array([self.x, self.y, self.z], dtype=np.float64)

    model_config = {"extra": "forbid", "frozen": True}


class TangentVector(BaseModel):
    """Unit direction attached to a point of the sphere."""

    base: UnitVec3
    dir: UnitVec3

    @model_validator(mode="after")
    def check_tangent(self) -> "TangentVector":
        dot = float(np.dot(self.base.array, self.dir.array))
        if abs(dot) > TANGENCY_TOLERANCE:
            raise NotTangentError(dot)
        return self

    model_config = {"extra": "forbid", "frozen": True}


class SphericalTriangle(BaseModel):
    """Vertices A, B, C, traversed in that order."""

    a: UnitVec3
    b: UnitVec3
    c: UnitVec3

    @model_validator(mode="after")
    def check_proper(self) -> "SphericalTriangle":
        a, b, c = self.vertices()
        for u, v in ((a, b), (b, c), (c, a)):
            if abs(float(np.dot(u, v))) >= 1.0 - COLLINEAR_MARGIN:
                raise DegenerateTriangleError("two vertices coincide or are antipodal")
        if abs(self.orientation()) <= COPLANAR_MARGIN:
            raise DegenerateTriangleError("vertices lie on one great circle")
        return self

    def vertices(self) -> tuple[FloatArray, FloatArray, FloatArray]:
        return self.a.array, self.b.array, self.c.array

    def orientation(self) -> float:
        """a . (b x c); positive when A -> B -> C runs counterclockwise seen from outside."""
        a, b, c = self.vertices()
        return float(np.dot(a, np.cross(b, c)))

    model_config = {"extra": "forbid", "frozen": True}


class GameReport(BaseModel):
    """Correlations of a triangle game and the slack of |E_AB + E_AC| <= 1 + E_BC."""

    e_ab: CorrelationEstimate
    e_ac: CorrelationEstimate
    e_bc: CorrelationEstimate
    slack: float
    slack_stderr: float
    identity_violations: int
    holonomy: float | None = None

    model_config = {"extra": "forbid", "frozen": True}
