"""
Constants for the chsh module.
"""

import math

# Bound on |CHSH| for gauge-symmetric local models
CLASSICAL_BOUND = 2.0

# Quantum maximum of |CHSH|
TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)

# Values the per-configuration CHSH combination can take in the model
PER_CONFIG_VALUES = (-4, -2, 0, 2, 4)

# Geometric-phase profile
MIN_PROFILE_POINTS = 2
DEFAULT_PROFILE_POINTS = 4096

DEFAULT_TSIRELSON_GRID = 32
DEFAULT_QUADRATURE_POINTS = 1_000_000
