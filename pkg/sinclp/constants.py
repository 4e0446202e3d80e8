import math

# Ball's central interval [-6/sqrt(5), 6/sqrt(5)]
BALL_CUTOFF = 6.0 / math.sqrt(5.0)
# sqrt(5)/6, taken as the reciprocal so that tail_bound(p, BALL_CUTOFF)
# and the C(p) formula share the same floating point base
BALL_RATIO = 1.0 / BALL_CUTOFF

SQRT_3_OVER_PI = math.sqrt(3.0 / math.pi)
SQRT_PI_OVER_3 = math.sqrt(math.pi / 3.0)

# Right side of the equation defining p0
P0_TARGET = math.pi * (1.0 - SQRT_3_OVER_PI)
P0_BRACKET = (1.0, 3.0)
P0_XTOL = 1e-12

# Quadrature defaults
DEFAULT_ABS_TOL = 1e-12
DEFAULT_REL_TOL = 1e-12
DEFAULT_MAX_SUBDIVISIONS = 2000
DEFAULT_PANEL_ORDER = 15
# Largest number of lobes [k pi, (k+1) pi] one integral may use
MAX_LOBES = 100_000

# Slack used when comparing the improved bound with Ball's bound
BOUND_SLACK = 1e-15
