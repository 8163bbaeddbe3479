"""
Field Coefficients from the linear Heisenberg Equations, valid for g1 != g2
"""

import numpy as np
import scipy.linalg

from src.errors import CriticalPhase, UnstablePhase
from src.model import ModelParams, Phase, polariton_frequencies
from src.dynamics import EvolvedFieldCoeffs, MuMatrix, heisenberg_generator, mixing_angle


def linear_heisenberg_coefficients(p: ModelParams, times) -> EvolvedFieldCoeffs:
    """
    f_j(t) as the first Row of expm(M t)
    :param ModelParams p: Model Parameters, any g1, g2
    :param times: 1d Array of Times
    """
    generator = heisenberg_generator(p)
    t = np.atleast_1d(np.asarray(times, dtype=float))
    f = np.array([scipy.linalg.expm(generator * time)[0] for time in t]).T
    return EvolvedFieldCoeffs(times=t, f=f, metadata={"oracle": "expm"})


def mode_table(p: ModelParams) -> MuMatrix:
    """
    Coefficient Table mu_jk = W_0k (W^-1)_kj from the Eigendecomposition M = W diag(i s_k nu_k) W^-1
    Columns ordered (+omega_x, -omega_x, +omega_y, -omega_y) like the closed Form.
    :raises CriticalPhase: M is defective at omega_y = 0
    :raises UnstablePhase: omega_y^2 < 0
    """
    spectrum = polariton_frequencies(p)
    if spectrum.phase == Phase.Critical:
        raise CriticalPhase(f"Oracle: Heisenberg generator is defective at omega_y = 0 ({p}).")
    if spectrum.phase == Phase.Unstable:
        raise UnstablePhase(f"Oracle: omega_y^2 = {spectrum.omega_y_sq:.6g} < 0, no oscillating modes.")

    eigenvalues, W = scipy.linalg.eig(heisenberg_generator(p))
    # descending Im: (+omega_x, +omega_y, -omega_y, -omega_x), pairs regrouped without comparing |nu|
    order = np.argsort(-eigenvalues.imag)[[0, 3, 1, 2]]
    frequencies = eigenvalues.imag[order]
    W = W[:, order]
    mu = W[0][:, None] * np.linalg.inv(W)
    return MuMatrix(mu=mu.T, phi=mixing_angle(p), lambda_ap=2 * p.g1 * np.sqrt(p.omega_c * p.omega_b),
                    omega_x=float(frequencies[0]), omega_y=float(frequencies[2]))
