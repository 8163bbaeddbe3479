import logging
import numpy as np
from enum import Enum
from dataclasses import dataclass

from src.errors import InvalidParameters, InvalidSqueezing, UnstablePhase
from src.model.params import ModelParams

# |omega_y^2| below this Fraction of omega_c^2 counts as critical
CRITICAL_TOLERANCE = 1e-10


class Phase(Enum):
    """
    Phase of the Hopfield Model
    """
    Normal = "normal"
    Critical = "critical"
    Unstable = "unstable"


@dataclass(frozen=True)
class PolaritonSpectrum:
    """
    Squared Polariton Frequencies, omega_y_sq stays a (possibly negative) real Number
    """
    omega_x_sq: float
    omega_y_sq: float
    phase: Phase

    @property
    def omega_x(self) -> float:
        return float(np.sqrt(self.omega_x_sq))

    @property
    def omega_y(self) -> float:
        """
        Lower Polariton Frequency
        :raises UnstablePhase: omega_y^2 < 0
        """
        if self.phase == Phase.Unstable:
            raise UnstablePhase(f"Model: omega_y^2 = {self.omega_y_sq:.6g} < 0, the Hamiltonian is unbounded below.")
        return float(np.sqrt(max(self.omega_y_sq, 0.0)))


def classify_phase(omega_y_sq: float, omega_c: float) -> Phase:
    if abs(omega_y_sq) < CRITICAL_TOLERANCE * omega_c ** 2:
        return Phase.Critical
    if omega_y_sq > 0:
        return Phase.Normal
    return Phase.Unstable


def polariton_frequencies(p: ModelParams) -> PolaritonSpectrum:
    """
    Exact squared Polariton Frequencies of the anisotropic Hopfield Model
    :param ModelParams p: Model Parameters
    :return PolaritonSpectrum: omega_x_sq >= omega_y_sq with Phase Classification
    :raises InvalidSqueezing: |lambda2| >= 1
    """
    if not p.squeezing_valid:
        raise InvalidSqueezing(
            f"Model: |lambda2| = {abs(p.lambda2):.6g} must be < 1 for the squeezing transformation.")

    Omega_x_sq = p.omega_c ** 2 + 4 * p.D * p.omega_c
    Omega_y_sq = p.omega_b ** 2
    lambda1 = (p.g1 + p.g2) * np.sqrt(p.omega_c * p.omega_b)
    lambda2 = p.lambda2
    total = Omega_x_sq + Omega_y_sq

    center = 2 * lambda1 * lambda2 + total
    root = np.sqrt((1 - lambda2 ** 2) * (Omega_x_sq - Omega_y_sq) ** 2 + (2 * lambda1 + lambda2 * total) ** 2)
    omega_x_sq = (center + root) / 2
    omega_y_sq = (center - root) / 2

    phase = classify_phase(omega_y_sq, p.omega_c)
    if phase != Phase.Normal:
        logging.info(f"Model: {phase.value.capitalize()} Phase at {p}, omega_y^2 = {omega_y_sq:.6g}.")
    return PolaritonSpectrum(omega_x_sq=float(omega_x_sq), omega_y_sq=float(omega_y_sq), phase=phase)


def isotropic_frequencies(p: ModelParams) -> PolaritonSpectrum:
    """
    Polariton Frequencies for g1 = g2, written with the Detuning Omega = omega_c^2 + 4 D omega_c - omega_b^2
    """
    g = p.g1
    total = p.omega_c ** 2 + p.omega_b ** 2 + 4 * p.D * p.omega_c
    root = np.sqrt((p.omega_c ** 2 - p.omega_b ** 2 + 4 * p.D * p.omega_c) ** 2 + 16 * g ** 2 * p.omega_c * p.omega_b)
    omega_y_sq = (total - root) / 2
    return PolaritonSpectrum(
        omega_x_sq=float((total + root) / 2), omega_y_sq=float(omega_y_sq),
        phase=classify_phase(omega_y_sq, p.omega_c))


def rwa_frequencies(p: ModelParams) -> tuple[float, float]:
    """
    Polariton Frequencies under the rotating-wave Approximation, g2 and D are ignored
    :return: (omega_x_rwa, omega_y_rwa)
    """
    root = np.sqrt((p.omega_c - p.omega_b) ** 2 + 4 * p.g1 ** 2)
    return float((p.omega_c + p.omega_b + root) / 2), float((p.omega_c + p.omega_b - root) / 2)


def energy_level(p: ModelParams, m: int, n: int, shifted: bool = False) -> float:
    """
    Energy E_mn of the Ladder
    :param ModelParams p: Model Parameters
    :param int m: Upper Polariton Quanta
    :param int n: Lower Polariton Quanta
    :param bool shifted: Ground State at 0 instead of the zero-point Energy
    :raises UnstablePhase:
    """
    if m < 0 or n < 0:
        raise InvalidParameters(f"Model: Quantum Numbers must be non-negative, got m = {m}, n = {n}.")
    spectrum = polariton_frequencies(p)
    omega_x, omega_y = spectrum.omega_x, spectrum.omega_y
    if shifted:
        return omega_x * m + omega_y * n
    return omega_x * (m + 0.5) + omega_y * (n + 0.5)


def ladder(p: ModelParams, count: int, shifted: bool = False) -> list[tuple[float, int, int]]:
    """
    Lowest Energy Levels sorted ascending
    :return: List of (E_mn, m, n)
    """
    spectrum = polariton_frequencies(p)
    omega_x, omega_y = spectrum.omega_x, spectrum.omega_y
    offset = 0.0 if shifted else (omega_x + omega_y) / 2
    # count levels never need more than count quanta per branch
    levels = [(omega_x * m + omega_y * n + offset, m, n) for m in range(count) for n in range(count)]
    return sorted(levels)[:count]


def ground_state_energy(p: ModelParams, normal_ordered: bool = False) -> float:
    """
    Zero-point Energy (omega_x + omega_y) / 2
    :param bool normal_ordered: Relative to the normal-ordered bare Hamiltonian, which subtracts (omega_c + omega_b) / 2
    """
    energy = energy_level(p, 0, 0)
    if normal_ordered:
        energy -= (p.omega_c + p.omega_b) / 2
    return energy


def critical_diamagnetic(p: ModelParams) -> float:
    """
    D_crit = (g1 + g2)^2 / (4 omega_b) - omega_c / 4, the Hamiltonian is bounded below for D > D_crit
    """
    return (p.g1 + p.g2) ** 2 / (4 * p.omega_b) - p.omega_c / 4


def critical_coupling(p: ModelParams) -> float:
    """
    Critical Coupling of the superradiant Transition at D = 0, g1 = g2
    """
    if p.D != 0 or not p.is_isotropic:
        logging.warning(f"Model: Critical Coupling assumes D = 0 and g1 = g2, got {p}.")
    return float(np.sqrt(p.omega_c * p.omega_b) / 2)
