"""
Constants for the distribution module.
"""

# The density |sin l| / 4 splits the circle into two halves of mass 1/2
MEDIAN_MASS = 0.5

# Stream key words are 64-bit unsigned integers
MAX_KEY_WORD = 2**64 - 1
