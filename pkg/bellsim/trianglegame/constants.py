"""
Constants for the trianglegame module.
"""

# Unit vectors must have norm 1 within this tolerance
UNIT_NORM_TOLERANCE = 1e-12

# A tangent vector's direction must be orthogonal to its base within this tolerance
TANGENCY_TOLERANCE = 1e-9

# Vertices closer than this to collinear (|dot| >= 1 - margin) form no triangle
COLLINEAR_MARGIN = 1e-9

# Vertices on one great circle (|det| <= margin) form no triangle
COPLANAR_MARGIN = 1e-15

# Below this sine the transport arc is treated as a point
TRANSPORT_EPSILON = 1e-15

# Winding correction threshold for the loop rotation angle
HOLONOMY_WINDING_EPSILON = 1e-9
