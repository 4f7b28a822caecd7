"""Numerical kernel norms, certified series and annulus asymptotics."""

from .norms import (
    AnnulusScan,
    DivergenceTrace,
    KernelSpec,
    NormVerdict,
    annulus_norm,
    annulus_regime_exponent,
    annulus_scan,
    effective_exponent,
    fit_slope,
    kernel_eval,
    kernel_norm,
    kernel_truncated_trace,
    olofsson_uniform_potential,
)
from .series import (
    Divergent,
    SeriesResult,
    I_closed_form,
    I_divergence_reason,
    I_series,
    angular_mean,
    circle_average,
    default_term_cap,
    olofsson_constant,
)

__all__ = [
    "AnnulusScan",
    "DivergenceTrace",
    "Divergent",
    "I_closed_form",
    "I_divergence_reason",
    "I_series",
    "KernelSpec",
    "NormVerdict",
    "SeriesResult",
    "angular_mean",
    "annulus_norm",
    "annulus_regime_exponent",
    "annulus_scan",
    "circle_average",
    "default_term_cap",
    "effective_exponent",
    "fit_slope",
    "kernel_eval",
    "kernel_norm",
    "kernel_truncated_trace",
    "olofsson_constant",
    "olofsson_uniform_potential",
]
