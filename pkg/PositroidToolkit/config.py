import os

# Randomness
DEFAULT_SEED = 2017
PARAMETER_RANGE = (1, 9)  # positive integers drawn for chart parameters and weights
DENOMINATOR_RANGE = (1, 4)

# Monte-Carlo sample counts used by the CLI
TRIANGULATION_SAMPLES = 1000
SIGN_PROBE_SAMPLES = 1000
RESIDUE_SAMPLES = 20
SIGN_SEARCH_POINTS = 2

# Bound(k,n) enumeration cache
BOUND_CACHE_SIZE = 128

# Sign vectors are searched exhaustively only up to this many free edges
SIGN_SEARCH_MAX_FREE_EDGES = 10

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")
