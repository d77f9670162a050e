"""First-passage counting rates of a threshold accumulator driven by white noise and a constant signal."""

from ._core import (
    DEFAULT_SEED,
    DetectorParams,
    FPTEstimate,
    InvalidParameter,
    RichardsonEstimate,
    SeriesControl,
    SeriesValue,
    SurvivalFactors,
    TruncationError,
    axis_survival_image,
    axis_survival_spectral,
    dark_fraction,
    f3_series,
    g_tau,
    g_tau_large,
    g_tau_small,
    mean_fpt_1d,
    mean_fpt_3d,
    moment_integral,
    quantum_rate,
    rate_1d,
    rate_1d_asymptotic,
    rate_3d,
    sigma_const,
    simulate_fpt,
    simulate_fpt_richardson,
    survival_3d,
    zscore,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
