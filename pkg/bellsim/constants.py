"""
Constants shared across the bellsim modules.
"""

import math

TWO_PI = 2.0 * math.pi

# Monte Carlo work is split into fixed chunks; chunk k always maps to the
# same counter block of the stream, whatever the worker count.
CHUNK_SIZE = 65536

# Output formatting
OUTPUT_SIGNIFICANT_DIGITS = 12
