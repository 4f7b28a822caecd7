"""Constants for the polyharmonic integrability toolkit."""

import json
from fractions import Fraction
from pathlib import Path

_MANIFEST = json.loads((Path(__file__).parent / "manifest.json").read_text())

# Base package constants
NAME = _MANIFEST["name"]
DOMAIN = _MANIFEST["domain"]
VERSION = _MANIFEST["version"]
LOGGERS = _MANIFEST["loggers"]

# Configuration and options
CONF_SEED = "seed"
CONF_TOL = "tol"
CONF_P_MAX = "p_max"
CONF_FORMAT = "output_format"
CONF_TERM_CAP = "term_cap"
CONF_TRIALS = "trials"
ENV_TERM_CAP = "POLYHARM_TERM_CAP"
DEFAULT_SEED = 20240101
DEFAULT_TOL = 1e-10
DEFAULT_P_MAX = Fraction(3)
DEFAULT_FORMAT = "json"
DEFAULT_TRIALS = 50
OUTPUT_FORMATS = ("json", "csv", "svg")

# Series evaluation
DEFAULT_TERM_CAP = 10**6
MIN_TERM_CAP = 1000
SERIES_CHUNK = 4096
# r**2 above this switches the angular mean from the power series to hyp2f1
ANGULAR_SERIES_MAX_R2 = 0.9

# Cell geometry
ALPHA_MAX = Fraction(0)
MIN_CELL_P_MAX = Fraction(2)
ENTANGLEMENT_P = Fraction(1, 3)

# Quadrature
QUAD_LEVELS = (8, 16, 32)
RADIAL_GRADING_DEPTH = 40
TAIL_MIN_DISTANCE = 1e-100
ANGULAR_START_NODES = 16
ANGULAR_MAX_NODES = 2**16
ANGULAR_REL_TOL = 1e-13
ANGULAR_GRADING = 0.25

# Lagrange reconstruction
MIN_ANGULAR_NODES = 16
RECONSTRUCT_REL_TOL = 1e-12

# Divergence witnesses and slope fits
TRACE_K_START = 3
TRACE_K_END = 12
TRACE_K_CAP = 40
DEFAULT_GROWTH_FACTOR = 10.0
SLOPE_K_VALUES = tuple(range(6, 13))
CROSS_CHECK_TOL = 1e-6

# Random instances
RANDOM_MAX_TERMS = 12
RANDOM_MAX_EXPONENT = 8
RANDOM_MAX_COEFF = 100

# Exit codes
EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_BAD_ARGS = 2
EXIT_DOMAIN = 3
EXIT_PARSE = 4

STARTUP_MESSAGE = f"""
-------------------------------------------------------------------
{NAME} {VERSION}
Exact polyharmonic calculus on the unit disk and numerical checks
of weighted integrability. Rationals are passed as num/den strings.
-------------------------------------------------------------------
"""
