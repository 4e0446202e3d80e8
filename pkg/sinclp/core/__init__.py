from .bounds import (
    asymptotic_ratio,
    asymptotic_sandwich,
    ball_bound,
    bound_report,
    c_of_p,
    c_of_p_tail_branch,
    evaluate_point,
    improved_bound,
    p0,
    p0_lhs,
    p0_residual,
    sandwich_check,
    solve_p0,
    verify_suite,
)
from .bspline_exact import (
    as_rational,
    autocorrelation_check,
    bspline,
    central,
    closed_form_eval,
    convolve_box,
    evaluate,
    exact_lp_integer,
    gaussian_profile_deviation,
    make_box,
    to_float,
    unser_scaled_central,
)
from .quadrature import gauss_kronrod_panel, integrate_adaptive
from .sinc_norm import (
    averaged_tail,
    central_integral,
    choose_cutoff,
    log_abs_sinc,
    sin_power_mean,
    sinc_lp_integral,
    sinc_pow_integrand,
    tail_bound,
)


__all__ = [
    "as_rational",
    "asymptotic_ratio",
    "asymptotic_sandwich",
    "autocorrelation_check",
    "averaged_tail",
    "ball_bound",
    "bound_report",
    "bspline",
    "c_of_p",
    "c_of_p_tail_branch",
    "central",
    "central_integral",
    "choose_cutoff",
    "closed_form_eval",
    "convolve_box",
    "evaluate",
    "evaluate_point",
    "exact_lp_integer",
    "gauss_kronrod_panel",
    "gaussian_profile_deviation",
    "improved_bound",
    "integrate_adaptive",
    "log_abs_sinc",
    "make_box",
    "p0",
    "p0_lhs",
    "p0_residual",
    "sandwich_check",
    "sin_power_mean",
    "sinc_lp_integral",
    "sinc_pow_integrand",
    "solve_p0",
    "tail_bound",
    "to_float",
    "unser_scaled_central",
    "verify_suite",
]  # noqa: F401
