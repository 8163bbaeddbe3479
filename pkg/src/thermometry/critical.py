"""
QFI of the resonant Probe without diamagnetic Term, on both Sides of the superradiant Coupling
Above g_crit the lower Mode is continued to its trigonometric Form, whose csc Poles give periodic Divergences.
"""

import logging
import numpy as np
from dataclasses import dataclass, field
from scipy.optimize import brentq

from src.errors import InvalidParameters, NotIsotropic, PoleAt
from src.model import ModelParams
from src.thermometry.equilibrium import POLE_TOLERANCE, mode_qfi, temperature_uncertainty


def _require_resonant_d0(p: ModelParams):
    if not p.is_isotropic:
        raise NotIsotropic(f"Thermometry: Critical QFI needs g1 = g2, got g1 = {p.g1}, g2 = {p.g2}.")
    if p.D != 0 or not np.isclose(p.omega_c, p.omega_b):
        raise InvalidParameters(f"Thermometry: Critical QFI needs D = 0 and omega_c = omega_b, got {p}.")


def continued_argument(omega_c: float, g: float, T: float) -> float:
    """
    sqrt(2 g omega_c - omega_c^2) / (2 T), real above g_crit = omega_c / 2
    """
    return float(np.sqrt(max(2 * g * omega_c - omega_c ** 2, 0.0)) / (2 * T))


def qfi_critical_d0(p: ModelParams, T: float) -> float:
    """
    QFI with omega_x^2 = omega_c^2 + 2 g omega_c and omega_y^2 = omega_c^2 - 2 g omega_c
    Above g_crit the Thermal State is not normalizable and the Value is a formal Continuation.
    :param ModelParams p: Resonant Parameters with D = 0 and g1 = g2 = g, any g >= 0
    :param float T: Temperature
    :return float: QFI, real and positive between Poles
    :raises PoleAt: the continued csc Argument lies within the Tolerance of n pi
    """
    _require_resonant_d0(p)
    omega_c, g = p.omega_c, p.g1
    omega_x_sq = omega_c ** 2 + 2 * g * omega_c
    omega_y_sq = omega_c ** 2 - 2 * g * omega_c
    if abs(omega_y_sq) < 1e-14 * omega_c ** 2:
        omega_y_sq = 0.0

    if omega_y_sq < 0:
        argument = continued_argument(omega_c, g, T)
        if abs(np.sin(argument)) < POLE_TOLERANCE:
            order = int(round(argument / np.pi))
            raise PoleAt(f"Thermometry: g = {g:.10g} at T = {T:g} lies on pole n = {order}.", order)
        logging.debug(f"Thermometry: g = {g:g} > g_crit, QFI is a formal continuation.")
    return mode_qfi(omega_x_sq, T) + mode_qfi(omega_y_sq, T)


def pole_loci(omega_c: float, T: float, n_max: int) -> np.ndarray:
    """
    Couplings g_n = omega_c / 2 + 2 (T n pi)^2 / omega_c of the Poles n = 1 .. n_max
    """
    n = np.arange(1, n_max + 1)
    return omega_c / 2 + 2 * (T * n * np.pi) ** 2 / omega_c


def locate_poles(omega_c: float, T: float, g_min: float, g_max: float, samples: int = 2000) -> list[tuple[int, float]]:
    """
    Poles in [g_min, g_max] found by bracketing the Zeros of sin(continued Argument)
    :return: List of (n, g_n)
    """
    lower = max(g_min, omega_c / 2)
    if g_max <= lower:
        return []
    # the zero of the argument at g_crit is not a pole
    grid = np.linspace(lower, g_max, samples + 1)
    grid = grid[grid > omega_c / 2]

    def sine(g: float) -> float:
        return float(np.sin(continued_argument(omega_c, g, T)))

    values = np.array([sine(g) for g in grid])
    poles = []
    for i in range(grid.size - 1):
        if values[i] == 0:
            root = grid[i]
        elif values[i] * values[i + 1] < 0:
            root = brentq(sine, grid[i], grid[i + 1], xtol=1e-14, rtol=1e-14)
        else:
            continue
        poles.append((int(round(continued_argument(omega_c, root, T) / np.pi)), float(root)))
    if values.size and values[-1] == 0:
        poles.append((int(round(continued_argument(omega_c, grid[-1], T) / np.pi)), float(grid[-1])))
    return poles


@dataclass(frozen=True, eq=False)
class SNRCurve:
    """
    Signal-to-Noise Ratio T / Delta T over a Coupling Grid, nan on Poles
    """
    g_values: np.ndarray
    qfi: np.ndarray
    snr: np.ndarray
    delta_T: np.ndarray
    T: float
    measurements: int
    poles: list = field(default_factory=list)
    formal_continuation: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=bool))


def snr_curve(g_values, T: float, omega_c: float = 1.0, measurements: int = 1) -> SNRCurve:
    """
    T / Delta T = T sqrt(N F) of the resonant Probe with D = 0
    :param g_values: Couplings
    :param float T: Temperature
    :param float omega_c: Cavity Frequency, the Matter Frequency is set equal
    :param int measurements: Number N of independent Measurements
    :return SNRCurve:
    """
    g_values = np.asarray(g_values, dtype=float)
    qfi = np.full(g_values.shape, np.nan)
    delta_T = np.full(g_values.shape, np.nan)
    for i, g in enumerate(g_values):
        p = ModelParams.isotropic(omega_c, omega_c, float(g), 0.0)
        try:
            qfi[i] = qfi_critical_d0(p, T)
        except PoleAt as error:
            logging.info(f"Thermometry: {error}")
            continue
        delta_T[i] = temperature_uncertainty(qfi[i], measurements)

    continuation = g_values > omega_c / 2
    if np.any(continuation):
        logging.warning(f"Thermometry: {int(np.sum(continuation))} points above g_crit use the formal "
                        "trigonometric continuation.")
    poles = locate_poles(omega_c, T, float(np.min(g_values)), float(np.max(g_values))) if g_values.size else []
    return SNRCurve(g_values=g_values, qfi=qfi, snr=T / delta_T, delta_T=delta_T, T=T, measurements=measurements,
                    poles=poles, formal_continuation=continuation)


def dicke_equilibrium_critical_coupling(omega_c: float, omega_z: float, T: float) -> float:
    """
    Finite-temperature critical Coupling sqrt(omega_c omega_z coth(omega_z / (2 T))) / 2 of the Dicke Model
    """
    if not T > 0:
        raise InvalidParameters(f"Thermometry: Temperature must be positive, got T = {T}.")
    return float(np.sqrt(omega_c * omega_z / np.tanh(omega_z / (2 * T))) / 2)
