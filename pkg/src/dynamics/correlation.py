import logging
import numpy as np
from dataclasses import dataclass

from src.errors import InvalidParameters
from src.model import ModelParams
from src.dynamics.coefficients import MuMatrix, mu_coefficients, evaluate_coefficients


@dataclass(frozen=True)
class FockProduct:
    """
    Initial Product State |n, m> with n Field and m Matter Excitations
    """
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise InvalidParameters(f"Dynamics: Occupations must be non-negative, got ({self.n}, {self.m}).")

    @property
    def weights(self) -> np.ndarray:
        """
        Weights of f_j^*(t1) f_j(t2) in the Autocorrelation
        """
        return np.array([self.n, self.n + 1, self.m, self.m + 1], dtype=float)

    @property
    def outside_stated_domain(self) -> bool:
        """
        The Autocorrelation was derived for n != m, it is evaluated for n = m as well
        """
        return self.n == self.m

    @property
    def label(self) -> str:
        return f"({self.n},{self.m})"


def autocorrelation(p: ModelParams, state: FockProduct, t1, t2, mu: MuMatrix | None = None):
    """
    <n,m| a^dag(t1) a(t2) |n,m>
    :param ModelParams p: Model Parameters with g1 = g2
    :param FockProduct state: Initial State
    :param t1: Time or Array of Times
    :param t2: Time or Array of Times, broadcast against t1
    :param MuMatrix mu: precomputed Coefficient Table
    :return: complex Value or Array with the broadcast Shape of t1 and t2
    """
    if mu is None:
        mu = mu_coefficients(p)
    if state.outside_stated_domain:
        logging.warning(f"Dynamics: Autocorrelation for n = m = {state.n} is evaluated outside n != m.")
    t1, t2 = np.broadcast_arrays(np.asarray(t1, dtype=float), np.asarray(t2, dtype=float))
    f_t1 = evaluate_coefficients(mu, t1)
    f_t2 = evaluate_coefficients(mu, t2)
    result = np.tensordot(state.weights, np.conj(f_t1) * f_t2, axes=(0, 0))
    return result[()] if result.ndim == 0 else result


def hermitian_check(p: ModelParams, state: FockProduct, times, atol: float = 1e-12) -> bool:
    """
    Check autocorrelation(t1, t2) = conj(autocorrelation(t2, t1)) on a Time Grid
    """
    t = np.asarray(times, dtype=float)
    grid = autocorrelation(p, state, t[:, None], t[None, :])
    scale = max(1.0, float(np.max(np.abs(grid))))
    return bool(np.allclose(grid, np.conj(grid.T), rtol=0.0, atol=atol * scale))
