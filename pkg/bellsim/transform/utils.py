"""
Circle arithmetic on the canonical interval [-pi, pi).
"""

import math

import numpy as np
import numpy.typing as npt

from bellsim.constants import TWO_PI
from .exceptions import NonFiniteAngleError

FloatArray = npt.NDArray[np.float64]
IntArray = npt.NDArray[np.int64]


def wrap_angle_array(x: npt.ArrayLike) -> FloatArray:
    """Wrap angles to [-pi, pi); values already in range are returned untouched."""
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        bad = arr[~np.isfinite(arr)].ravel()[0]
        raise NonFiniteAngleError(float(bad))
    in_range = (arr >= -math.pi) & (arr < math.pi)
    turns = np.floor((arr + math.pi) / TWO_PI)
    reduced = arr - turns * TWO_PI
    # the quotient may round across an integer
    reduced = np.where(reduced >= math.pi, reduced - TWO_PI, reduced)
    reduced = np.where(reduced < -math.pi, reduced + TWO_PI, reduced)
    return np.where(in_range, arr, reduced)


def wrap_angle(x: float) -> float:
    """Canonical representative of x on the circle, in [-pi, pi)."""
    return float(wrap_angle_array(x))


def circle_distance_array(a: npt.ArrayLike, b: npt.ArrayLike) -> FloatArray:
    """Shortest arc length between two angles."""
    diff = np.asarray(a, dtype=np.float64) - np.asarray(b, dtype=np.float64)
    return np.abs(wrap_angle_array(diff))


def circle_distance(a: float, b: float) -> float:
    return float(circle_distance_array(a, b))


def q_sign_array(x: npt.ArrayLike) -> IntArray:
    """Sign of the wrapped angle, with +1 at zero."""
    return np.where(wrap_angle_array(x) >= 0.0, 1, -1).astype(np.int64)


def q_sign(x: float) -> int:
    return int(q_sign_array(x))
