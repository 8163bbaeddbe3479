import logging
import numpy as np

from src.model import ModelParams
from src.dynamics.coefficients import MuMatrix, initial_derivative


def heisenberg_generator(p: ModelParams) -> np.ndarray:
    """
    Linear Generator M of dv/dt = M v for v = (a, a^dag, b, b^dag) under the Hopfield Hamiltonian
    Valid for any g1, g2, D.
    """
    wc, wb, g1, g2, D = p.omega_c, p.omega_b, p.g1, p.g2, p.D
    return np.array([
        [-1j * (wc + 2 * D), -2j * D, -g1, g2],
        [2j * D, 1j * (wc + 2 * D), g2, -g1],
        [g1, g2, -1j * wb, 0],
        [g2, g1, 0, 1j * wb],
    ], dtype=complex)


def sign_pattern_consistent(p: ModelParams, mu: MuMatrix, atol: float = 1e-12) -> bool:
    """
    Check that df_j/dt(0) of the Coefficient Table matches i[H, a] row by row
    """
    expected = heisenberg_generator(p)[0]
    actual = initial_derivative(mu)
    scale = max(1.0, float(np.max(np.abs(expected))))
    consistent = bool(np.allclose(actual, expected, rtol=0.0, atol=atol * scale))
    if not consistent:
        logging.error(f"Dynamics: Initial derivative {actual} does not match Heisenberg row {expected}.")
    return consistent
