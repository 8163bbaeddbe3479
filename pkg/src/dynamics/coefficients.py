import logging
import numpy as np
from dataclasses import dataclass, field

from src.errors import NotIsotropic, UnstablePhase
from src.model import ModelParams, Phase, polariton_frequencies

# f_j(t) = sum_k mu_jk exp(i s_k nu_k t) with nu = (omega_x, omega_x, omega_y, omega_y)
SIGNS = np.array([1.0, -1.0, 1.0, -1.0])


@dataclass(frozen=True, eq=False)
class MuMatrix:
    """
    Coefficients mu_jk of a(t) = f1 a + f2 a^dag + f3 b + f4 b^dag
    Rows j are the Operators (a, a^dag, b, b^dag), Columns k the Exponentials
    (exp(+i omega_x t), exp(-i omega_x t), exp(+i omega_y t), exp(-i omega_y t)).
    In the critical Phase the omega_y Columns are undefined and pair_limit holds (c_j, d_j) of the
    Limit mu_j3 exp(i omega_y t) + mu_j4 exp(-i omega_y t) -> c_j + i d_j t.
    """
    mu: np.ndarray
    phi: float
    lambda_ap: float
    omega_x: float
    omega_y: float
    critical: bool = False
    pair_limit: np.ndarray | None = None

    @property
    def frequencies(self) -> np.ndarray:
        return np.array([self.omega_x, self.omega_x, self.omega_y, self.omega_y])

    @property
    def exponents(self) -> np.ndarray:
        """
        s_k nu_k, the Argument of exp(i s_k nu_k t)
        """
        return SIGNS * self.frequencies

    def row_sums(self) -> np.ndarray:
        """
        f_j(0), equal to (1, 0, 0, 0)
        """
        if self.critical:
            return self.mu[:, :2].sum(axis=1) + self.pair_limit[:, 0]
        return self.mu.sum(axis=1)


@dataclass(frozen=True, eq=False)
class EvolvedFieldCoeffs:
    """
    f_j sampled on a Time Grid, f has Shape (4, len(times))
    """
    times: np.ndarray
    f: np.ndarray
    critical: bool = False
    metadata: dict = field(default_factory=dict)

    @property
    def f1(self) -> np.ndarray:
        return self.f[0]

    @property
    def f2(self) -> np.ndarray:
        return self.f[1]

    @property
    def f3(self) -> np.ndarray:
        return self.f[2]

    @property
    def f4(self) -> np.ndarray:
        return self.f[3]


def mixing_angle(p: ModelParams) -> float:
    """
    Angle phi with tan(2 phi) = 2 lambda / Omega, Omega = omega_c^2 + 4 D omega_c - omega_b^2, in [0, pi/2]
    """
    lambda_ap = 2 * p.g1 * np.sqrt(p.omega_c * p.omega_b)
    detuning = p.omega_c ** 2 + 4 * p.D * p.omega_c - p.omega_b ** 2
    return float(0.5 * np.arctan2(2 * lambda_ap, detuning))


def mu_coefficients(p: ModelParams) -> MuMatrix:
    """
    Closed-form Coefficient Table of the Heisenberg Field Operator for g1 = g2
    :param ModelParams p: Model Parameters
    :return MuMatrix:
    :raises NotIsotropic: g1 != g2
    :raises UnstablePhase: omega_y^2 < 0
    """
    if not p.is_isotropic:
        raise NotIsotropic(f"Dynamics: The coefficient table needs g1 = g2, got g1 = {p.g1}, g2 = {p.g2}.")
    spectrum = polariton_frequencies(p)
    if spectrum.phase == Phase.Unstable:
        raise UnstablePhase(f"Dynamics: omega_y^2 = {spectrum.omega_y_sq:.6g} < 0, no bounded evolution.")

    wc, wb = p.omega_c, p.omega_b
    wx, wy = spectrum.omega_x, spectrum.omega_y
    phi = mixing_angle(p)
    c2, s2, sin2 = np.cos(phi) ** 2, np.sin(phi) ** 2, np.sin(2 * phi)
    root = np.sqrt(wb * wc)

    mu = np.zeros((4, 4), dtype=complex)
    mu[0, 0] = -c2 * (wc - wx) ** 2 / (4 * wc * wx)
    mu[0, 1] = c2 * (wc + wx) ** 2 / (4 * wc * wx)
    mu[1, 0] = c2 * (wc - wx) * (wc + wx) / (4 * wc * wx)
    mu[1, 1] = c2 * (wx ** 2 - wc ** 2) / (4 * wc * wx)
    mu[2, 0] = 1j * sin2 * (wb - wx) * (wc - wx) / (8 * wx * root)
    mu[2, 1] = -1j * sin2 * (wb + wx) * (wc + wx) / (8 * wx * root)
    mu[3, 0] = 1j * sin2 * (wb + wx) * (wc - wx) / (8 * wx * root)
    mu[3, 1] = -1j * sin2 * (wb - wx) * (wc + wx) / (8 * wx * root)

    if spectrum.phase == Phase.Critical:
        logging.warning(f"Dynamics: Critical Phase at {p}, omega_y terms replaced by their limit.")
        mu[:, 2:] = np.nan
        pair_limit = np.array([
            [s2, -s2 * wc / 2],
            [0.0, s2 * wc / 2],
            [1j * sin2 * (wb + wc) / (4 * root), -1j * sin2 * root / 4],
            [1j * sin2 * (wb - wc) / (4 * root), -1j * sin2 * root / 4],
        ], dtype=complex)
        return MuMatrix(mu=mu, phi=phi, lambda_ap=2 * p.g1 * root, omega_x=wx, omega_y=0.0, critical=True,
                        pair_limit=pair_limit)

    mu[0, 2] = -s2 * (wc - wy) ** 2 / (4 * wc * wy)
    mu[0, 3] = s2 * (wc + wy) ** 2 / (4 * wc * wy)
    mu[1, 2] = s2 * (wc - wy) * (wc + wy) / (4 * wc * wy)
    mu[1, 3] = s2 * (wy ** 2 - wc ** 2) / (4 * wc * wy)
    mu[2, 2] = 1j * sin2 * (wb - wy) * (wy - wc) / (8 * wy * root)
    mu[2, 3] = 1j * sin2 * (wb + wy) * (wc + wy) / (8 * wy * root)
    mu[3, 2] = -1j * sin2 * (wb + wy) * (wc - wy) / (8 * wy * root)
    mu[3, 3] = 1j * sin2 * (wb - wy) * (wc + wy) / (8 * wy * root)

    return MuMatrix(mu=mu, phi=phi, lambda_ap=2 * p.g1 * root, omega_x=wx, omega_y=wy)


def evaluate_coefficients(mu: MuMatrix, times) -> np.ndarray:
    """
    f_j(t) for Times of any Shape
    :return: complex Array of Shape (4,) + shape(times)
    """
    t = np.asarray(times, dtype=float)
    if mu.critical:
        phases = np.exp(1j * np.multiply.outer(mu.exponents[:2], t))
        x_part = np.tensordot(mu.mu[:, :2], phases, axes=(1, 0))
        c, d = mu.pair_limit[:, 0], mu.pair_limit[:, 1]
        return x_part + c.reshape((4,) + (1,) * t.ndim) + 1j * np.multiply.outer(d, t)
    phases = np.exp(1j * np.multiply.outer(mu.exponents, t))
    return np.tensordot(mu.mu, phases, axes=(1, 0))


def field_coefficients(mu: MuMatrix, times) -> EvolvedFieldCoeffs:
    """
    Sample f_1..f_4 on a Time Grid
    :param MuMatrix mu: Coefficient Table
    :param times: 1d Array of Times t >= 0
    """
    t = np.atleast_1d(np.asarray(times, dtype=float))
    metadata = {"critical": mu.critical, "phi": mu.phi}
    return EvolvedFieldCoeffs(times=t, f=evaluate_coefficients(mu, t), critical=mu.critical, metadata=metadata)


def initial_derivative(mu: MuMatrix) -> np.ndarray:
    """
    df_j/dt at t = 0
    """
    derivative = (1j * mu.exponents[:2] * mu.mu[:, :2]).sum(axis=1)
    if mu.critical:
        return derivative + 1j * mu.pair_limit[:, 1]
    return derivative + (1j * mu.exponents[2:] * mu.mu[:, 2:]).sum(axis=1)


def commutator_invariant(coeffs: EvolvedFieldCoeffs) -> np.ndarray:
    """
    |f1|^2 - |f2|^2 + |f3|^2 - |f4|^2, equal to 1 for a unitary Evolution
    """
    weights = np.array([1.0, -1.0, 1.0, -1.0])
    return np.tensordot(weights, np.abs(coeffs.f) ** 2, axes=(0, 0))
