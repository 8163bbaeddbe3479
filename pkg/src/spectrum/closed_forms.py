"""
Long-time Lorentzian Forms of the physical Spectrum
"""

import logging
import numpy as np

from src.errors import CriticalPhase, NotIsotropic, UnstablePhase
from src.model import ModelParams, Phase, polariton_frequencies, rwa_frequencies
from src.dynamics import mixing_angle
from src.spectrum.types import FilterConfig, Method, SpectrumResult, lorentzian_component, sum_components


def _normal_isotropic(p: ModelParams, name: str) -> tuple[float, float]:
    if not p.is_isotropic:
        raise NotIsotropic(f"Spectrum: {name} needs g1 = g2, got g1 = {p.g1}, g2 = {p.g2}.")
    spectrum = polariton_frequencies(p)
    if spectrum.phase == Phase.Critical:
        raise CriticalPhase(f"Spectrum: {name} is singular at omega_y = 0 ({p}).")
    if spectrum.phase == Phase.Unstable:
        raise UnstablePhase(f"Spectrum: {name} needs omega_y^2 > 0, got {spectrum.omega_y_sq:.6g}.")
    return spectrum.omega_x, spectrum.omega_y


def weight_factors(p: ModelParams) -> tuple[float, float, float]:
    """
    Branch Weights (h_x, h_y, h_xy)
    h_x = [1 + Omega / sqrt(4 lambda^2 + Omega^2)]^2 / 4, h_xy = 4 lambda^2 / (4 lambda^2 + Omega^2)
    """
    # Omega / sqrt(4 lambda^2 + Omega^2) = cos(2 phi), also defined at lambda = Omega = 0
    cos_2phi = np.cos(2 * mixing_angle(p))
    sin_2phi = np.sin(2 * mixing_angle(p))
    return float((1 + cos_2phi) ** 2 / 4), float((1 - cos_2phi) ** 2 / 4), float(sin_2phi ** 2)


def _result(filter_config: FilterConfig, components: tuple, method: Method, p: ModelParams, **metadata):
    gamma = filter_config.gamma
    return SpectrumResult(
        omega=filter_config.omega_grid, values=sum_components(filter_config.omega_grid, components, gamma),
        components=components, method=method, gamma=gamma, params=p, metadata=metadata)


def ew_spectrum_closed_10(p: ModelParams, filter_config: FilterConfig) -> SpectrumResult:
    """
    Long-time Spectrum of the initial State |1,0>, two Lorentzians (Gamma_x / 2) / (Gamma^2 + (omega - omega_x)^2)
    :param ModelParams p: Model Parameters with g1 = g2 in the normal Phase
    :param FilterConfig filter_config: Filter
    :raises CriticalPhase: Gamma_y diverges at omega_y = 0
    """
    omega_x, omega_y = _normal_isotropic(p, "Closed form (1,0)")
    gamma, wc = filter_config.gamma, p.omega_c
    h_x, h_y, _ = weight_factors(p)

    components = []
    for label, omega, h in (("x", omega_x, h_x), ("y", omega_y, h_y)):
        weight = gamma * h * ((wc + omega) ** 4 + 2 * (wc ** 2 - omega ** 2) ** 2) / (4 * wc ** 2 * omega ** 2)
        components.append(lorentzian_component(omega, weight, weight / 2, gamma, label))
    return _result(filter_config, tuple(components), Method.ClosedForm, p, state="(1,0)", form="printed")


def ew_spectrum_closed_01(p: ModelParams, filter_config: FilterConfig) -> SpectrumResult:
    """
    Long-time Spectrum of the initial State |0,1>, two Lorentzians Gamma'_x / (Gamma^2 + (omega - omega_x)^2)
    :raises CriticalPhase: Gamma'_y diverges at omega_y = 0
    """
    omega_x, omega_y = _normal_isotropic(p, "Closed form (0,1)")
    gamma, wc, wb = filter_config.gamma, p.omega_c, p.omega_b
    _, _, h_xy = weight_factors(p)

    components = []
    for label, omega in (("x", omega_x), ("y", omega_y)):
        weight = gamma * h_xy * (3 * wb ** 2 - 2 * wb * omega + 3 * omega ** 2) * (wc + omega) ** 2 \
            / (32 * wb * wc * omega ** 2)
        components.append(lorentzian_component(omega, weight, weight, gamma, label))
    return _result(filter_config, tuple(components), Method.ClosedForm, p, state="(0,1)", form="printed")


def rwa_weight(p: ModelParams, gamma: float) -> float:
    """
    Shared Line Weight 4 Gamma g^2 / ((omega_b - omega_c)^2 + 4 g^2), equal to Gamma on Resonance
    """
    denominator = (p.omega_b - p.omega_c) ** 2 + 4 * p.g1 ** 2
    if denominator == 0:
        return gamma
    return 4 * gamma * p.g1 ** 2 / denominator


def ew_spectrum_rwa(p: ModelParams, filter_config: FilterConfig) -> SpectrumResult:
    """
    Long-time Spectrum of |1,0> under the rotating-wave Approximation, both Lines share one Weight
    g2 and D are ignored.
    """
    gamma = filter_config.gamma
    omega_x, omega_y = rwa_frequencies(p)
    weight = rwa_weight(p, gamma)
    components = (lorentzian_component(omega_x, weight, weight / 2, gamma, "x"),
                  lorentzian_component(omega_y, weight, weight / 2, gamma, "y"))
    if p.g2 != 0 or p.D != 0:
        logging.debug(f"Spectrum: RWA spectrum ignores g2 = {p.g2} and D = {p.D}.")
    return _result(filter_config, components, Method.RWA, p, state="(1,0)", weights="printed")


def ew_spectrum_rwa_exact(p: ModelParams, filter_config: FilterConfig) -> SpectrumResult:
    """
    RWA Spectrum of |1,0> with the exact Mixing Weights cos^4 and sin^4 of the RWA Angle
    Coincides with ew_spectrum_rwa on Resonance.
    """
    gamma = filter_config.gamma
    omega_x, omega_y = rwa_frequencies(p)
    angle = 0.5 * np.arctan2(2 * p.g1, p.omega_c - p.omega_b)
    numerators = (2 * gamma * np.cos(angle) ** 4, 2 * gamma * np.sin(angle) ** 4)
    components = (lorentzian_component(omega_x, 2 * numerators[0], numerators[0], gamma, "x"),
                  lorentzian_component(omega_y, 2 * numerators[1], numerators[1], gamma, "y"))
    return _result(filter_config, components, Method.RWA, p, state="(1,0)", weights="exact")


def dsc_limit_spectrum(p: ModelParams, filter_config: FilterConfig) -> SpectrumResult:
    """
    Deep-strong Coupling Limit with D = g^2 / omega_b, a single Lorentzian at 2 g sqrt(omega_c / omega_b)
    """
    gamma, g = filter_config.gamma, p.g1
    if not np.isclose(p.D, g ** 2 / p.omega_b):
        logging.warning(f"Spectrum: DSC limit assumes D = g^2 / omega_b, got D = {p.D}.")
    center = 2 * g * np.sqrt(p.omega_c / p.omega_b)
    numerator = 3 * gamma * g ** 2 / (2 * p.omega_b * p.omega_c)
    components = (lorentzian_component(center, 2 * numerator, numerator, gamma, "x"),)
    return _result(filter_config, components, Method.DSCLimit, p, state="(1,0)")
