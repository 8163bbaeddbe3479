import logging
import numpy as np
from dataclasses import dataclass

from src.errors import CriticalPhase, InvalidParameters, TailNotConverged, UnstablePhase
from src.model import ModelParams, Phase, polariton_frequencies

TAIL_TOLERANCE = 1e-12
MAX_LADDER = 4000


@dataclass(frozen=True)
class LadderThermo:
    """
    Direct Sums over the Levels E_mn = omega_x (m + 1/2) + omega_y (n + 1/2)
    """
    Z: float
    U: float
    C: float
    cutoff: int
    tail: float


def _tail(ratio: float, cutoff: int) -> float:
    """
    Relative Weight of the Levels with m >= cutoff or n >= cutoff for one Mode of Boltzmann Ratio q
    """
    return float(ratio ** cutoff)


def ladder_thermo(p: ModelParams, T: float, cutoff: int | None = None, tail: float = TAIL_TOLERANCE) -> LadderThermo:
    """
    Z, U and C from truncated Sums over the Energy Ladder
    :param ModelParams p: Model Parameters in the normal Phase
    :param float T: Temperature
    :param int cutoff: Levels per Mode, chosen from the Tail Bound if omitted
    :param float tail: allowed missing Weight relative to Z
    :raises TailNotConverged: the Cutoff misses more than tail
    """
    if not T > 0:
        raise InvalidParameters(f"Oracle: Temperature must be positive, got T = {T}.")
    spectrum = polariton_frequencies(p)
    if spectrum.phase == Phase.Critical:
        raise CriticalPhase(f"Oracle: Ladder sum diverges at omega_y = 0 ({p}).")
    if spectrum.phase == Phase.Unstable:
        raise UnstablePhase(f"Oracle: No ladder for omega_y^2 = {spectrum.omega_y_sq:.6g} < 0.")
    omega_x, omega_y = spectrum.omega_x, spectrum.omega_y

    ratio = np.exp(-min(omega_x, omega_y) / T)
    if cutoff is None:
        # C converges slowest, its relative error is about q^(N - 1) N^2
        cutoff = 1
        while _tail(ratio, cutoff - 1) * cutoff ** 2 > tail or _tail(ratio, cutoff) > tail / 2:
            cutoff += 1
            if cutoff > MAX_LADDER:
                raise TailNotConverged(f"Oracle: Ladder needs more than {MAX_LADDER} levels per mode at T = {T}.")
    missing = 1 - (1 - _tail(np.exp(-omega_x / T), cutoff)) * (1 - _tail(np.exp(-omega_y / T), cutoff))
    if missing > tail:
        raise TailNotConverged(f"Oracle: Cutoff {cutoff} misses weight {missing:.3g} > {tail:g} at T = {T}.")

    levels = np.arange(cutoff)
    excitation = np.add.outer(omega_x * levels, omega_y * levels).ravel()
    weights = np.exp(-excitation / T)
    partition = weights.sum()
    mean = np.sum(weights * excitation) / partition
    variance = np.sum(weights * (excitation - mean) ** 2) / partition

    zero_point = (omega_x + omega_y) / 2
    logging.debug(f"Oracle: Ladder sum with {cutoff} levels per mode, missing weight {missing:.3g}.")
    return LadderThermo(Z=float(np.exp(-zero_point / T) * partition), U=float(zero_point + mean),
                        C=float(variance / T ** 2), cutoff=cutoff, tail=float(missing))
