"""
Constants for the transform module.
"""

# arccos arguments may leave [-1, 1] by floating-point noise at the branch
# anchors; anything beyond this band is a bug, not noise.
ARCCOS_CLAMP_BAND = 1e-12

# Default number of points of the transformation-law curve
DEFAULT_CURVE_POINTS = 1024
