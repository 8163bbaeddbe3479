"""
Time-dependent physical Spectrum
S(omega, t) = 2 Gamma exp(-2 Gamma t) int_0^t int_0^t exp((Gamma - i omega) t1) exp((Gamma + i omega) t2)
              <a^dag(t1) a(t2)> dt1 dt2
The Correlation is a finite Sum of Products conj(f_j(t1)) f_j(t2), so the double Integral factors into
one-dimensional Integrals of Exponentials that are evaluated in closed form.
"""

import logging
import numpy as np

from src.errors import CriticalPhase, QuadratureNotConverged
from src.model import ModelParams
from src.dynamics import MuMatrix, FockProduct, mu_coefficients, evaluate_coefficients
from src.spectrum.types import FilterConfig, Method, SpectrumResult, lorentzian_component, sum_components

IMAGINARY_TOLERANCE = 1e-8
_SERIES_LIMIT = 1e-3


def _relative_exponential(x: np.ndarray) -> np.ndarray:
    """
    (exp(x) - 1) / x for complex x, with the Taylor Series near 0
    """
    x = np.asarray(x, dtype=complex)
    small = np.abs(x) < _SERIES_LIMIT
    safe = np.where(small, 1.0, x)
    direct = (np.exp(safe) - 1) / safe
    series = 1 + x / 2 + x ** 2 / 6 + x ** 3 / 24 + x ** 4 / 120
    return np.where(small, series, direct)


def window_mean(beta: np.ndarray, t0: float, width: float) -> np.ndarray:
    """
    Mean of exp(beta t) over [t0, t0 + width], exp(beta t0) for width = 0
    """
    beta = np.asarray(beta, dtype=complex)
    if width == 0:
        return np.exp(beta * t0)
    return np.exp(beta * t0) * _relative_exponential(beta * width)


def _require_dynamics(p: ModelParams, mu: MuMatrix | None) -> MuMatrix:
    if mu is None:
        mu = mu_coefficients(p)
    if mu.critical:
        raise CriticalPhase(f"Spectrum: omega_y = 0 at {p}, the physical spectrum has no long-time form.")
    return mu


def _resonant_components(mu: MuMatrix, state: FockProduct, gamma: float) -> tuple:
    """
    Long-time Lines at +omega_x and +omega_y
    """
    weights = state.weights
    numerators = 2 * gamma * (weights[:, None] * np.abs(mu.mu) ** 2).sum(axis=0)
    return (lorentzian_component(mu.omega_x, numerators[1], numerators[1], gamma, "x"),
            lorentzian_component(mu.omega_y, numerators[3], numerators[3], gamma, "y"))


def ew_spectrum_quadrature(p: ModelParams, state: FockProduct, filter_config: FilterConfig,
                           mu: MuMatrix | None = None) -> SpectrumResult:
    """
    Finite-time physical Spectrum, exact term-wise Evaluation of the double Integral
    :param ModelParams p: Model Parameters with g1 = g2
    :param FockProduct state: Initial State |n, m>
    :param FilterConfig filter_config: Filter Width, Observation Time, Frequency Grid and Averaging Window
    :param MuMatrix mu: precomputed Coefficient Table
    :return SpectrumResult:
    :raises CriticalPhase: omega_y = 0
    :raises QuadratureNotConverged: Imaginary Residue above Tolerance
    """
    mu = _require_dynamics(p, mu)
    if state.outside_stated_domain:
        logging.warning(f"Spectrum: Initial state {state.label} has n = m.")
    gamma, t_obs, width = filter_config.gamma, filter_config.t_obs, filter_config.t_average
    omega = filter_config.omega_grid
    exponents = mu.exponents
    weights = state.weights

    # z_k = Gamma + i (omega + s_k nu_k), Shape (n_omega, 4)
    z = gamma + 1j * (omega[:, None] + exponents[None, :])

    if width == 0:
        # exp(-Gamma t) I_j = sum_k mu_jk (exp(i (omega + s_k nu_k) t) - exp(-Gamma t)) / z_k
        kernel = (np.exp(1j * (omega[:, None] + exponents[None, :]) * t_obs) - np.exp(-gamma * t_obs)) / z
        integrals = kernel @ mu.mu.T
        values = 2 * gamma * (np.abs(integrals) ** 2 @ weights)
        imaginary = 0.0
    else:
        coupling = (mu.mu.T * weights) @ np.conj(mu.mu)
        beat = window_mean(1j * (exponents[:, None] - exponents[None, :]), t_obs, width)
        rise = window_mean(-gamma + 1j * (omega[:, None] + exponents[None, :]), t_obs, width)
        fall = window_mean(-gamma - 1j * (omega[:, None] + exponents[None, :]), t_obs, width)
        decay = window_mean(np.array(-2 * gamma), t_obs, width)
        bracket = beat[None, :, :] - rise[:, :, None] - fall[:, None, :] + decay
        terms = coupling[None, :, :] * bracket / (z[:, :, None] * np.conj(z)[:, None, :])
        total = 2 * gamma * terms.sum(axis=(1, 2))
        values = total.real
        imaginary = float(np.max(np.abs(total.imag)))

    peak = float(np.max(np.abs(values)))
    if imaginary > IMAGINARY_TOLERANCE * max(peak, 1.0):
        raise QuadratureNotConverged(f"Spectrum: Imaginary residue {imaginary:.3g} exceeds tolerance.")
    if np.min(values) < -IMAGINARY_TOLERANCE * max(peak, 1.0):
        raise QuadratureNotConverged(f"Spectrum: Negative spectrum value {np.min(values):.3g}.")
    values = np.clip(values, 0.0, None)

    logging.debug(f"Spectrum: Quadrature for {state.label} at {p}, Gamma t = {gamma * t_obs:g}, "
                  f"window = {width:g}.")
    return SpectrumResult(
        omega=omega, values=values, components=_resonant_components(mu, state, gamma),
        method=Method.Quadrature, gamma=gamma, params=p,
        metadata={"state": state.label, "t_obs": t_obs, "t_average": width, "scheme": "separable",
                  "imaginary_residue": imaginary, "outside_stated_domain": state.outside_stated_domain})


def ew_spectrum_long_time(p: ModelParams, state: FockProduct, filter_config: FilterConfig,
                          mu: MuMatrix | None = None) -> SpectrumResult:
    """
    Complete long-time Limit, one Lorentzian per Exponential of every f_j
    """
    mu = _require_dynamics(p, mu)
    gamma = filter_config.gamma
    numerators = 2 * gamma * (state.weights[:, None] * np.abs(mu.mu) ** 2).sum(axis=0)
    labels = ("x-", "x", "y-", "y")
    components = tuple(
        lorentzian_component(-exponent, numerator, numerator, gamma, label)
        for exponent, numerator, label in zip(mu.exponents, numerators, labels))
    return SpectrumResult(
        omega=filter_config.omega_grid, values=sum_components(filter_config.omega_grid, components, gamma),
        components=components, method=Method.ClosedForm, gamma=gamma, params=p,
        metadata={"state": state.label, "form": "complete"})


def _trapezoid_weights(times: np.ndarray) -> np.ndarray:
    step = times[1] - times[0]
    weights = np.full(times.size, step)
    weights[[0, -1]] = step / 2
    return weights


def _trapezoid_pass(p: ModelParams, state: FockProduct, filter_config: FilterConfig, mu: MuMatrix,
                    steps: int) -> np.ndarray:
    gamma, t_obs = filter_config.gamma, filter_config.t_obs
    times = np.linspace(0.0, t_obs, steps + 1)
    # correlation[a, b] = <a^dag(t_a) a(t_b)>, built from f_j on the 1d grid
    f = evaluate_coefficients(mu, times)
    correlation = (np.conj(f).T * state.weights) @ f
    kernel = _trapezoid_weights(times)[None, :] * np.exp(
        (gamma + 1j * filter_config.omega_grid[:, None]) * times[None, :] - gamma * t_obs)
    values = 2 * gamma * np.sum((np.conj(kernel) @ correlation) * kernel, axis=1)
    return values.real


def ew_spectrum_trapezoid(p: ModelParams, state: FockProduct, filter_config: FilterConfig, steps: int = 400,
                          rtol: float = 1e-2, max_refinements: int = 2, mu: MuMatrix | None = None) -> SpectrumResult:
    """
    Finite-time Spectrum from the two-time Correlation Matrix and a 2d Trapezoid Rule
    The Step Count doubles until successive Results agree to rtol.
    :raises QuadratureNotConverged:
    """
    mu = _require_dynamics(p, mu)
    if filter_config.t_average > 0:
        logging.info("Spectrum: Trapezoid scheme evaluates at t_obs, the averaging window is ignored.")

    previous = _trapezoid_pass(p, state, filter_config, mu, steps)
    change = float("nan")
    for _ in range(max_refinements):
        steps *= 2
        current = _trapezoid_pass(p, state, filter_config, mu, steps)
        change = float(np.max(np.abs(current - previous)) / np.max(np.abs(current)))
        logging.debug(f"Spectrum: Trapezoid with {steps} steps changed by {change:.3g}.")
        if change <= rtol:
            return SpectrumResult(
                omega=filter_config.omega_grid, values=np.clip(current, 0.0, None),
                components=_resonant_components(mu, state, filter_config.gamma), method=Method.Quadrature,
                gamma=filter_config.gamma, params=p,
                metadata={"state": state.label, "t_obs": filter_config.t_obs, "scheme": "trapezoid",
                          "steps": steps, "change": change})
        previous = current
    raise QuadratureNotConverged(
        f"Spectrum: Trapezoid did not reach rtol = {rtol} with {steps} steps (last change {change:.3g}).")
