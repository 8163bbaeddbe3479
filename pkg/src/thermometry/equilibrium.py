"""
Thermal Equilibrium of the Hopfield Probe
The Polariton Modes are independent Oscillators, so Z, U, C and the QFI are Sums or Products over the two Modes.
Units: k_B = hbar = 1, Frequencies and Temperatures in Units of omega_c.
"""

import logging
import numpy as np
from enum import Enum
from dataclasses import dataclass, field

from src.errors import CriticalPhase, InvalidParameters, UnstablePhase
from src.model import ModelParams, Phase, DRule, polariton_frequencies

POLE_TOLERANCE = 1e-6


class Branch(Enum):
    """
    Analytic Form used for one Mode
    """
    Hyperbolic = "hyperbolic"
    Trigonometric = "trigonometric"
    PoleNearby = "pole_nearby"


@dataclass(frozen=True)
class ModeThermo:
    """
    Thermodynamics of one Oscillator of squared Frequency omega_sq
    """
    omega_sq: float
    Z: float
    U: float
    C: float
    qfi: float
    branch: Branch


@dataclass(frozen=True)
class ThermoPoint:
    """
    Equilibrium State of the Probe at Temperature T
    :param float T: Temperature
    :param float Z: Partition Function Z_x Z_y
    :param float U: Internal Energy
    :param float C: Heat Capacity in Units of k_B
    :param float qfi: Quantum Fisher Information of T
    :param float snr: T sqrt(qfi)
    :param tuple branch_flags: Branch of the x and the y Mode
    """
    T: float
    Z: float
    U: float
    C: float
    qfi: float
    snr: float
    branch_flags: tuple[Branch, Branch]
    metadata: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"T": self.T, "Z": self.Z, "U": self.U, "C": self.C, "qfi": self.qfi, "snr": self.snr,
                "branch_x": self.branch_flags[0].value, "branch_y": self.branch_flags[1].value, **self.metadata}


def _require_temperature(T: float):
    if not T > 0:
        raise InvalidParameters(f"Thermometry: Temperature must be positive, got T = {T}.")


def mode_thermo(omega_sq: float, T: float) -> ModeThermo:
    """
    One Mode, continued to omega_sq <= 0 where csch(x) of an imaginary Argument turns into -i csc
    Z and U are only defined on the hyperbolic Branch and are nan elsewhere.
    :param float omega_sq: squared Mode Frequency
    :param float T: Temperature
    :return ModeThermo:
    """
    _require_temperature(T)
    if omega_sq > 0:
        omega = np.sqrt(omega_sq)
        x = omega / (2 * T)
        # 1 / (2 sinh x) and (x / sinh x)^2 without overflow of sinh
        decay = np.exp(-2 * x)
        Z = np.exp(-x) / -np.expm1(-2 * x)
        C = (2 * x) ** 2 * decay / np.expm1(-2 * x) ** 2
        U = omega / 2 / np.tanh(x)
        return ModeThermo(omega_sq, float(Z), float(U), float(C), float(C / T ** 2), Branch.Hyperbolic)
    if omega_sq == 0:
        return ModeThermo(omega_sq, np.inf, float(T), 1.0, float(1 / T ** 2), Branch.Hyperbolic)

    y = np.sqrt(-omega_sq) / (2 * T)
    sin_y = np.sin(y)
    branch = Branch.PoleNearby if abs(sin_y) < POLE_TOLERANCE else Branch.Trigonometric
    C = np.inf if sin_y == 0 else (y / sin_y) ** 2
    return ModeThermo(omega_sq, np.nan, np.nan, float(C), float(C / T ** 2), branch)


def mode_qfi(omega_sq: float, T: float) -> float:
    """
    QFI Term (omega / (2 T^2))^2 csch^2(omega / (2 T)) of one Mode, evaluated as printed
    """
    _require_temperature(T)
    if omega_sq == 0:
        return 1 / T ** 2
    if omega_sq < 0:
        # csch^2(i y) = -csc^2(y)
        y = np.sqrt(-omega_sq) / (2 * T)
        return float(-omega_sq / (4 * T ** 4) / np.sin(y) ** 2)
    x = np.sqrt(omega_sq) / (2 * T)
    csch_sq = 4 * np.exp(-2 * x) / np.expm1(-2 * x) ** 2
    return float(omega_sq / (4 * T ** 4) * csch_sq)


def _normal_spectrum(p: ModelParams, name: str):
    spectrum = polariton_frequencies(p)
    if spectrum.phase == Phase.Critical:
        raise CriticalPhase(f"Thermometry: {name} diverges at omega_y = 0 ({p}).")
    if spectrum.phase == Phase.Unstable:
        raise UnstablePhase(f"Thermometry: No thermal state for omega_y^2 = {spectrum.omega_y_sq:.6g} < 0.")
    return spectrum


def partition_function(p: ModelParams, T: float) -> float:
    """
    Z = Z_x Z_y with Z_mode = csch(omega / (2 T)) / 2
    :raises CriticalPhase: Z_y diverges
    :raises UnstablePhase: no thermal State
    """
    spectrum = _normal_spectrum(p, "Partition function")
    return mode_thermo(spectrum.omega_x_sq, T).Z * mode_thermo(spectrum.omega_y_sq, T).Z


def thermo_from_frequencies(omega_x_sq: float, omega_y_sq: float, T: float, **metadata) -> ThermoPoint:
    """
    Equilibrium Quantities of two independent Modes
    """
    x, y = mode_thermo(omega_x_sq, T), mode_thermo(omega_y_sq, T)
    C = x.C + y.C
    qfi = x.qfi + y.qfi
    return ThermoPoint(T=T, Z=x.Z * y.Z, U=x.U + y.U, C=C, qfi=qfi, snr=float(T * np.sqrt(qfi)),
                       branch_flags=(x.branch, y.branch), metadata=metadata)


def thermo_point(p: ModelParams, T: float) -> ThermoPoint:
    """
    Z, U, C, QFI and Signal-to-Noise Ratio of the thermal Probe
    :param ModelParams p: Model Parameters in the normal Phase, g1 != g2 allowed
    :param float T: Temperature
    :return ThermoPoint:
    """
    spectrum = _normal_spectrum(p, "Thermal state")
    point = thermo_from_frequencies(spectrum.omega_x_sq, spectrum.omega_y_sq, T, anisotropic=not p.is_isotropic)
    qfi_printed = mode_qfi(spectrum.omega_x_sq, T) + mode_qfi(spectrum.omega_y_sq, T)
    if not np.isclose(point.qfi, qfi_printed, rtol=1e-10, atol=0.0):
        logging.error(f"Thermometry: F = C / T^2 broken at {p}, T = {T}: {point.qfi} vs {qfi_printed}.")
    return point


def temperature_uncertainty(qfi: float, measurements: int = 1) -> float:
    """
    Cramer-Rao Bound Delta T >= 1 / sqrt(N F)
    """
    if measurements < 1:
        raise InvalidParameters(f"Thermometry: Number of measurements must be >= 1, got {measurements}.")
    return float(1 / np.sqrt(measurements * qfi))


def relative_error_bound(C: float) -> float:
    """
    Single-shot Bound (Delta T / T)^2 >= 1 / C
    """
    return float(1 / C)


@dataclass(frozen=True, eq=False)
class QFIMap:
    """
    QFI on a (g, T) Grid, Shape (len(T_values), len(g_values)), nan outside the normal Phase
    """
    g_values: np.ndarray
    T_values: np.ndarray
    qfi: np.ndarray
    C: np.ndarray
    d_rule: str


def qfi_map(d_rule: DRule, g_values, T_values, omega_c: float = 1.0, omega_b: float = 1.0) -> QFIMap:
    """
    QFI Density Map over Coupling and Temperature
    :param DRule d_rule: Rule for D
    :param g_values: Couplings
    :param T_values: Temperatures
    """
    g_values, T_values = np.asarray(g_values, dtype=float), np.asarray(T_values, dtype=float)
    qfi = np.full((T_values.size, g_values.size), np.nan)
    C = np.full_like(qfi, np.nan)
    for j, g in enumerate(g_values):
        p = d_rule.params(omega_c, omega_b, float(g))
        spectrum = polariton_frequencies(p)
        if spectrum.phase != Phase.Normal:
            logging.info(f"Thermometry: Skipping g = {g:g}, phase is {spectrum.phase.value}.")
            continue
        for i, T in enumerate(T_values):
            point = thermo_from_frequencies(spectrum.omega_x_sq, spectrum.omega_y_sq, float(T))
            qfi[i, j], C[i, j] = point.qfi, point.C
    return QFIMap(g_values=g_values, T_values=T_values, qfi=qfi, C=C, d_rule=d_rule.label)
