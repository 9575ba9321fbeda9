"""
Constants for the experiment module.
"""

# Joint probabilities must sum to one within this tolerance
PROBABILITY_SUM_TOLERANCE = 1e-12

# Default grid of the correlation scan
DEFAULT_SCAN_POINTS = 25
