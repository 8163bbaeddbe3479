from .types import (
    DEFAULT_GAMMA, DEFAULT_GRID, LONG_TIME, Method, FilterConfig, LorentzianComponent, SpectrumResult,
    lorentzian_component, sum_components, sup_norm_deviation)
from .physical import ew_spectrum_quadrature, ew_spectrum_long_time, ew_spectrum_trapezoid, window_mean
from .closed_forms import (
    weight_factors, rwa_weight, ew_spectrum_closed_10, ew_spectrum_closed_01, ew_spectrum_rwa, ew_spectrum_rwa_exact,
    dsc_limit_spectrum)
from .analysis import (
    SINGLE_DOMINANT_RATIO, VRSResult, vrs_analysis, compute_spectrum, DispersionMap, dispersion_curves,
    polariton_dispersion_map)
__all__ = [
    "DEFAULT_GAMMA", "DEFAULT_GRID", "LONG_TIME", "Method", "FilterConfig", "LorentzianComponent", "SpectrumResult",
    "lorentzian_component", "sum_components", "sup_norm_deviation",
    "ew_spectrum_quadrature", "ew_spectrum_long_time", "ew_spectrum_trapezoid", "window_mean",
    "weight_factors", "rwa_weight", "ew_spectrum_closed_10", "ew_spectrum_closed_01", "ew_spectrum_rwa",
    "ew_spectrum_rwa_exact", "dsc_limit_spectrum",
    "SINGLE_DOMINANT_RATIO", "VRSResult", "vrs_analysis", "compute_spectrum", "DispersionMap", "dispersion_curves",
    "polariton_dispersion_map",
]
