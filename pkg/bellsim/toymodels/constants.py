"""
Constants for the toymodels module.
"""

# Outcome pairs (a, b) labelling the columns of every table
OUTCOME_PAIRS = ("++", "+-", "-+", "--")

# Row labels: setting pairs (A, B) for two-input tables, values of D otherwise
TWO_INPUT_ROWS = ("A=+1,B=+1", "A=+1,B=-1", "A=-1,B=+1", "A=-1,B=-1")
SINGLE_INPUT_ROWS = ("D=1", "D=2", "D=3", "D=4")

# Rows must sum to one within this tolerance
ROW_SUM_TOLERANCE = 1e-12

# Boundary of the local polytope
FEASIBILITY_TOLERANCE = 1e-9

# Local bound of every CHSH-type combination
LOCAL_CHSH_BOUND = 2.0
