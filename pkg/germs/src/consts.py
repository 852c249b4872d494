# Germ Engine Constants

import math

# Truncation defaults
DEFAULT_ORDER = 10
MIN_ORDER = 2
DEFAULT_MAX_ORDER = 64

# Hilbert matrix diagnostics
DEFAULT_HILBERT_MAX_K = 14
RHO = 1 + math.sqrt(2)
HILBERT_K = 8 * math.pi ** 1.5 * 2 ** 0.75 / RHO ** 4
NORM_BRACKET = (0.5, 2.0)

# Power iteration
POWER_ITERATION_TOL = 1e-15
POWER_ITERATION_MAX_STEPS = 10000

# Growth reports
DEFAULT_GROWTH_WINDOW = 5
# root-test values growing at least this fast per degree count as super-geometric
SUPER_GEOMETRIC_SLOPE = 0.01

# Rendering
FLOAT_FORMAT = "%.17g"
LAMBDA_SYMBOL = "lam"

# Environment variables
ENV_MAX_ORDER = "GERM_MAX_ORDER"
ENV_HILBERT_MAX_K = "GERM_HILBERT_MAX_K"
ENV_GROWTH_WINDOW = "GERM_GROWTH_WINDOW"
ENV_WORKERS = "GERM_WORKERS"

# CLI exit codes
EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE_ERROR = 2
EXIT_INVALID_SPEC = 3
EXIT_OUT_OF_RANGE = 4
EXIT_VERIFY_FAILED = 5
EXIT_INVARIANT_BREACH = 6

EXIT_CODE_HELP = {
    EXIT_OK: 'success',
    EXIT_UNEXPECTED: 'unexpected error',
    EXIT_PARSE_ERROR: 'malformed spec or series literal (ParseError)',
    EXIT_INVALID_SPEC: 'spec violates Delta(0,0) = 0 != w(0,0) (InvalidSpec)',
    EXIT_OUT_OF_RANGE: 'order, k or index outside the configured range (OutOfRange)',
    EXIT_VERIFY_FAILED: 'at least one verify suite failed',
    EXIT_INVARIANT_BREACH: 'internal invariant breach (arithmetic bug)',
}

# Default verify sizes
VERIFY_SAMPLES = {
    'roundtrip': 50,
    'structure': 50,
    'first_integral': 20,
    'degree_bound': 20,
    'homological': 20,
    'diagnostics': 6,
}
