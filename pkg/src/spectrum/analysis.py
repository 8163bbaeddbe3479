import logging
import numpy as np
from dataclasses import dataclass, field
from scipy.signal import find_peaks

from src.errors import GridTooCoarse, InvalidParameters
from src.model import ModelParams, DRule, DRuleKind, Phase, polariton_frequencies, rwa_frequencies
from src.dynamics import FockProduct
from src.spectrum.types import FilterConfig, Method, SpectrumResult
from src.spectrum.physical import ew_spectrum_quadrature, ew_spectrum_long_time
from src.spectrum.closed_forms import ew_spectrum_closed_10, ew_spectrum_closed_01, ew_spectrum_rwa, \
    dsc_limit_spectrum

SINGLE_DOMINANT_RATIO = 0.05


@dataclass(frozen=True)
class VRSResult:
    """
    Doublet of a Spectrum, Peaks ordered by Frequency
    :param tuple peak_positions: refined Peak Frequencies
    :param tuple peak_heights: refined Peak Heights
    :param float splitting: Distance of the two dominant Peaks, nan for a single Peak
    :param float asymmetry_ratio: height_right / height_left, nan for a single Peak
    """
    peak_positions: tuple[float, ...]
    peak_heights: tuple[float, ...]
    splitting: float
    asymmetry_ratio: float
    single_peak: bool
    single_dominant: bool

    def as_dict(self) -> dict:
        return {"peak_positions": list(self.peak_positions), "peak_heights": list(self.peak_heights),
                "splitting": self.splitting, "asymmetry_ratio": self.asymmetry_ratio,
                "single_peak": self.single_peak, "single_dominant": self.single_dominant}


def _refine(omega: np.ndarray, values: np.ndarray, index: int) -> tuple[float, float]:
    """
    Vertex of the Parabola through the three Samples around a Maximum
    """
    if index == 0 or index == values.size - 1:
        return float(omega[index]), float(values[index])
    y0, y1, y2 = values[index - 1:index + 2]
    curvature = y0 - 2 * y1 + y2
    if curvature >= 0:
        return float(omega[index]), float(y1)
    shift = 0.5 * (y0 - y2) / curvature
    step = 0.5 * (omega[index + 1] - omega[index - 1])
    return float(omega[index] + shift * step), float(y1 - 0.25 * (y0 - y2) * shift)


def vrs_analysis(spectrum: SpectrumResult, min_ratio: float = SINGLE_DOMINANT_RATIO) -> VRSResult:
    """
    Locate the Vacuum Rabi Doublet of a sampled Spectrum
    :param SpectrumResult spectrum: Spectrum on a Grid finer than gamma / 5
    :param float min_ratio: weaker / stronger Height below which the Doublet counts as single-dominant
    :return VRSResult:
    :raises GridTooCoarse: Grid Step >= gamma / 5
    """
    omega, values = np.asarray(spectrum.omega), np.asarray(spectrum.values)
    step = float(np.max(np.diff(omega))) if omega.size > 1 else np.inf
    if step >= spectrum.gamma / 5:
        raise GridTooCoarse(f"Spectrum: Grid step {step:.4g} must be below gamma / 5 = {spectrum.gamma / 5:.4g}.")

    indices, _ = find_peaks(values)
    if indices.size == 0:
        indices = np.array([int(np.argmax(values))])
    dominant = np.sort(indices[np.argsort(values[indices])[-2:]])
    refined = [_refine(omega, values, int(i)) for i in dominant]
    positions = tuple(position for position, _ in refined)
    heights = tuple(height for _, height in refined)

    if len(refined) == 1:
        logging.info(f"Spectrum: Single peak at omega = {positions[0]:.6g}.")
        return VRSResult(positions, heights, float("nan"), float("nan"), single_peak=True, single_dominant=True)

    ratio = heights[1] / heights[0]
    single_dominant = min(heights) / max(heights) < min_ratio
    if single_dominant:
        logging.warning(f"Spectrum: Doublet is single-dominant, height ratio right/left = {ratio:.4g}.")
    return VRSResult(positions, heights, positions[1] - positions[0], ratio, single_peak=False,
                     single_dominant=single_dominant)


def compute_spectrum(p: ModelParams, state: FockProduct, filter_config: FilterConfig,
                     method: Method = Method.Quadrature) -> SpectrumResult:
    """
    Spectrum by Method, the closed Form falls back to the complete long-time Sum for States without a printed Form
    """
    match method:
        case Method.Quadrature:
            return ew_spectrum_quadrature(p, state, filter_config)
        case Method.ClosedForm if state == FockProduct(1, 0):
            return ew_spectrum_closed_10(p, filter_config)
        case Method.ClosedForm if state == FockProduct(0, 1):
            return ew_spectrum_closed_01(p, filter_config)
        case Method.ClosedForm:
            return ew_spectrum_long_time(p, state, filter_config)
        case Method.RWA:
            return ew_spectrum_rwa(p, filter_config)
        case Method.DSCLimit:
            return dsc_limit_spectrum(p, filter_config)
    raise InvalidParameters(f"Spectrum: Unknown method {method}.")


@dataclass(frozen=True, eq=False)
class DispersionMap:
    """
    Spectra over an omega_b Sweep with Polariton Dispersion Overlays
    :param omega_b: Sweep Values
    :param omega: Frequency Grid
    :param values: Spectrum Rows, Shape (len(omega_b), len(omega))
    :param dict overlays: D-rule Label -> (omega_x, omega_y) Arrays, nan outside the normal Phase
    """
    omega_b: np.ndarray
    omega: np.ndarray
    values: np.ndarray
    overlays: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)

    def brightest_frequencies(self) -> np.ndarray:
        return self.omega[np.argmax(self.values, axis=1)]


def dispersion_curves(omega_b_values, g: float, d_rule: DRule, omega_c: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """
    Dispersions Delta E_00^10 = omega_x and Delta E_00^01 = omega_y of one D-rule over omega_b
    """
    omega_b_values = np.asarray(omega_b_values, dtype=float)
    omega_x, omega_y = np.full(omega_b_values.shape, np.nan), np.full(omega_b_values.shape, np.nan)
    for i, omega_b in enumerate(omega_b_values):
        p = d_rule.params(omega_c, float(omega_b), g)
        if d_rule.kind == DRuleKind.RWA:
            omega_x[i], omega_y[i] = rwa_frequencies(p)
            continue
        spectrum = polariton_frequencies(p)
        omega_x[i] = spectrum.omega_x
        if spectrum.phase != Phase.Unstable:
            omega_y[i] = spectrum.omega_y
    return omega_x, omega_y


def polariton_dispersion_map(omega_b_values, g: float, filter_config: FilterConfig, d_rule: DRule,
                             state: FockProduct = FockProduct(1, 0), overlay_rules: tuple[DRule, ...] = (),
                             omega_c: float = 1.0, method: Method = Method.Quadrature) -> DispersionMap:
    """
    Spectrum Rows per omega_b Value with the Dispersion Curves of the selected and the overlay D-rules
    :param omega_b_values: Sweep of the Matter Frequency
    :param float g: Coupling g1 = g2
    :param FilterConfig filter_config: Filter
    :param DRule d_rule: Rule for the Spectrum Rows
    :param FockProduct state: Initial State
    :param tuple overlay_rules: further Rules whose Dispersions are overlaid
    :return DispersionMap:
    """
    omega_b_values = np.asarray(omega_b_values, dtype=float)
    rows = np.empty((omega_b_values.size, filter_config.omega_grid.size))
    for i, omega_b in enumerate(omega_b_values):
        p = d_rule.params(omega_c, float(omega_b), g)
        rows[i] = compute_spectrum(p, state, filter_config, method).values
    overlays = {rule.label: dispersion_curves(omega_b_values, g, rule, omega_c)
                for rule in (d_rule, *overlay_rules)}
    logging.debug(f"Spectrum: Dispersion map with {omega_b_values.size} rows for {d_rule.label}.")
    return DispersionMap(omega_b=omega_b_values, omega=filter_config.omega_grid, values=rows, overlays=overlays,
                         metadata={"g": g, "state": state.label, "method": method.value, "d_rule": d_rule.label})
