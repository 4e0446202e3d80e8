import heapq
import itertools
import logging
import math
import numpy as np

from sinclp.errors import ArgumentError, IntegrandEvaluationError
from sinclp.models import QuadratureConfig, QuadratureResult

logger = logging.getLogger(__name__)

# Kronrod nodes on [0, 1] (mirrored to [-1, 0]) for the 7/15-point pair.
# Nodes with odd index are the 7-point Gauss nodes.
_XGK15 = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    ]
)
_WGK15 = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG7 = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)


def _symmetric_rule(xk, wk, wg):
    """Expand a half-rule into full nodes and weights on [-1, 1]."""
    nodes = np.concatenate([-xk[:-1], xk[::-1]])
    kronrod = np.concatenate([wk[:-1], wk[::-1]])
    gauss_half = np.zeros_like(wk)
    gauss_half[1::2] = wg
    gauss = np.concatenate([gauss_half[:-1], gauss_half[::-1]])
    return nodes, kronrod, gauss


# panel_order -> (nodes, higher-order weights, embedded lower-order weights)
_RULES = {15: _symmetric_rule(_XGK15, _WGK15, _WG7)}


def _rule(panel_order: int):
    try:
        return _RULES[panel_order]
    except KeyError:
        raise ArgumentError(
            f"No embedded rule with {panel_order} points; "
            f"available: {sorted(_RULES)}"
        )


def _evaluate(f, t):
    values = np.broadcast_to(np.asarray(f(t), dtype=np.float64), t.shape)
    finite = np.isfinite(values)
    if not finite.all():
        raise IntegrandEvaluationError(float(t[np.argmin(finite)]))
    return values


def gauss_kronrod_panel(f, a: float, b: float, panel_order: int = 15):
    """
    Integrate f over a single panel with an embedded rule pair.

    Parameters
    ----------
    f : callable
        Integrand. Called once with a numpy array of nodes; a scalar
        return value is broadcast.
    a, b : float
        Panel endpoints
    panel_order : int = 15
        Number of nodes of the higher-order rule

    Returns
    -------
    tuple[float, float]
        Higher-order value and |higher - lower|
    """
    nodes, kronrod, gauss = _rule(panel_order)
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    values = _evaluate(f, center + half * nodes)
    high = half * np.dot(kronrod, values)
    low = half * np.dot(gauss, values)
    return float(high), float(abs(high - low))


def integrate_adaptive(
    f,
    a: float,
    b: float,
    cfg: QuadratureConfig | None = None,
    points=None,
) -> QuadratureResult:
    """
    Adaptive integration of a smooth integrand over [a, b].

    The panel with the largest error estimate is bisected until the summed
    estimate meets max(abs_tol, rel_tol * |value|) or the partition holds
    `max_subdivisions` panels.

    The initial partition is split at `points`. A peak much narrower than
    a panel is otherwise seen by the centre node only.

    Parameters
    ----------
    f : callable
        Integrand, vectorised over numpy arrays
    a, b : float
        Interval endpoints, a <= b
    cfg : QuadratureConfig | None
        Tolerances and budget; the defaults when None
    points : Iterable[float] | None
        Interior breakpoints of the initial partition; those outside
        (a, b) are ignored

    Returns
    -------
    QuadratureResult
        Value, summed error estimate, panel count, and convergence flag
    """
    cfg = cfg or QuadratureConfig()
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ArgumentError(f"Interval endpoints must be finite: [{a}, {b}]")
    if a > b:
        raise ArgumentError(f"Reversed interval: a = {a} > b = {b}")
    if a == b:
        return QuadratureResult(0.0, 0.0, 0, True)

    def tolerance(value):
        return max(cfg.abs_tol, cfg.rel_tol * abs(value))

    counter = itertools.count()
    knots = [a, *sorted({x for x in points or () if a < x < b}), b]
    # Max-heap on the error estimate; the counter breaks ties
    heap = []
    for left, right in itertools.pairwise(knots):
        value, error = gauss_kronrod_panel(f, left, right, cfg.panel_order)
        heap.append((-error, next(counter), left, right, value))
    heapq.heapify(heap)
    total_value = math.fsum(item[4] for item in heap)
    total_error = math.fsum(-item[0] for item in heap)

    while total_error > tolerance(total_value):
        if len(heap) >= cfg.max_subdivisions:
            break
        neg_error, _, left, right, old_value = heapq.heappop(heap)
        mid = 0.5 * (left + right)
        if not left < mid < right:
            # Panel is at floating point resolution
            heapq.heappush(
                heap, (neg_error, next(counter), left, right, old_value)
            )
            break
        v1, e1 = gauss_kronrod_panel(f, left, mid, cfg.panel_order)
        v2, e2 = gauss_kronrod_panel(f, mid, right, cfg.panel_order)
        heapq.heappush(heap, (-e1, next(counter), left, mid, v1))
        heapq.heappush(heap, (-e2, next(counter), mid, right, v2))
        total_value += v1 + v2 - old_value
        total_error += e1 + e2 + neg_error

    # Re-sum to remove the drift of the running totals
    total_value = math.fsum(item[4] for item in heap)
    total_error = math.fsum(-item[0] for item in heap)
    converged = total_error <= tolerance(total_value)
    if not converged:
        logger.warning(
            "Quadrature on [%r, %r] stopped at %d panels with error "
            "estimate %.3e",
            a,
            b,
            len(heap),
            total_error,
        )
    return QuadratureResult(total_value, total_error, len(heap), converged)
