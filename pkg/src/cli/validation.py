"""
Oracle Comparisons of the validate Command
Each Check compares a closed Form with an independent Computation on fixed Parameter Points.
"""

import logging
import numpy as np
from dataclasses import dataclass

from src.errors import ConfigError
from src.model import DRule, ladder
from src.dynamics import FockProduct, mu_coefficients, field_coefficients, commutator_invariant, \
    sign_pattern_consistent, autocorrelation
from src.spectrum import FilterConfig, ew_spectrum_quadrature, ew_spectrum_long_time, ew_spectrum_closed_10, \
    sup_norm_deviation
from src.thermometry import thermo_point
from src.oracle import CONVERGENCE_RTOL, MAX_DIMENSION, FockTruncation, converged_eigenvalues, correlation_oracle, \
    linear_heisenberg_coefficients, mode_table, ladder_thermo

SUITES = ("polaritons", "dynamics", "correlation", "spectrum", "thermometry")
# deep strong Coupling Points whose low Spectrum must be the closed-form Ladder without avoided Crossings
LADDER_COUPLINGS = (1.5, 3.0)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.deviation) and self.deviation <= self.tolerance)

    def as_row(self) -> dict:
        return {"suite": self.suite, "check": self.name, "deviation": self.deviation, "tolerance": self.tolerance,
                "passed": self.passed}


def _relative(value, reference) -> float:
    value, reference = np.asarray(value), np.asarray(reference)
    return float(np.max(np.abs(value - reference) / np.maximum(1.0, np.abs(reference))))


def eigenvalue_cutoffs(cutoff: int) -> tuple[int, int]:
    """
    Reference and final Cutoff of the Convergence Estimate
    """
    return 2 * cutoff // 3, cutoff


def polaritons_suite(cutoff: int, max_dimension: int = MAX_DIMENSION) -> list[Check]:
    """
    Lowest Gaps of the truncated Fock Hamiltonian against the closed-form Ladder
    :raises CutoffTooLarge: before any Matrix is built
    """
    trunc = FockTruncation(cutoff=cutoff, max_dimension=max_dimension)
    trunc.check_budget(trunc.block_dimension)
    cutoffs = eigenvalue_cutoffs(cutoff)
    checks = []
    for rule, g, omega_b in ((DRule.trk(), 0.1, 1.0), (DRule.trk(), 0.3, 1.0), (DRule.trk(), 0.3, 1.5),
                             (DRule.trk(), 0.5, 1.0), (DRule.zero(), 0.2, 1.0)):
        p = rule.params(1.0, omega_b, g)
        oracle = converged_eigenvalues(p, cutoffs=cutoffs, count=4, max_dimension=max_dimension)
        expected = [energy for energy, _, _ in ladder(p, 4, shifted=True)]
        checks.append(Check("polaritons", f"gaps {rule.label} g={g:g} omega_b={omega_b:g}",
                            _relative(oracle.values - oracle.values[0], expected), 1e-6))
    for g in LADDER_COUPLINGS:
        p = DRule.trk().params(1.0, 1.0, g)
        oracle = converged_eigenvalues(p, cutoffs=cutoffs, count=6, max_dimension=max_dimension)
        expected = [energy for energy, _, _ in ladder(p, 6, shifted=True)]
        checks.append(Check("polaritons", f"ladder trk g={g:g}", _relative(oracle.values - oracle.values[0], expected),
                            1e-6))
        checks.append(Check("polaritons", f"converged trk g={g:g}",
                            float(np.max(oracle.estimates / np.maximum(1.0, np.abs(oracle.values)))),
                            CONVERGENCE_RTOL))
    return checks


def dynamics_suite() -> list[Check]:
    """
    Coefficient Table against the Eigenmodes and the Matrix Exponential of the linear Heisenberg Equations
    """
    checks = []
    times = np.linspace(0.0, 10.0, 21)
    for g in (0.1, 0.35, 1.0):
        p = DRule.trk().params(1.0, 1.0, g)
        mu = mu_coefficients(p)
        checks.append(Check("dynamics", f"mode table g={g:g}", float(np.max(np.abs(mu.mu - mode_table(p).mu))),
                            1e-10))
        coefficients = field_coefficients(mu, times)
        checks.append(Check("dynamics", f"expm g={g:g}",
                            float(np.max(np.abs(coefficients.f - linear_heisenberg_coefficients(p, times).f))),
                            1e-9))
        checks.append(Check("dynamics", f"commutator g={g:g}",
                            float(np.max(np.abs(commutator_invariant(coefficients) - 1))), 1e-10))
        checks.append(Check("dynamics", f"sign pattern g={g:g}", 0.0 if sign_pattern_consistent(p, mu) else np.inf,
                            0.0))
    return checks


def correlation_suite(cutoff: int, max_dimension: int = MAX_DIMENSION) -> list[Check]:
    """
    Autocorrelation against truncated Fock Propagation at four fifths of the Eigenvalue Cutoff
    """
    p = DRule.trk().params(1.0, 1.0, 0.35)
    trunc = FockTruncation(cutoff=max(2, 4 * cutoff // 5), max_dimension=max_dimension)
    checks = []
    for state in (FockProduct(1, 0), FockProduct(0, 1)):
        t1, t2 = np.array([2.0, 1.0, 0.5]), np.array([2.0, 3.0, 4.0])
        oracle = correlation_oracle(p, state, t1, t2, trunc)
        deviation = float(np.max(np.abs(oracle - autocorrelation(p, state, t1, t2))))
        checks.append(Check("correlation", f"state {state.label} g=0.35", deviation, 1e-6))
    return checks


def spectrum_suite() -> list[Check]:
    """
    Window-averaged finite-time Spectrum against the long-time Forms
    """
    checks = []
    state = FockProduct(1, 0)
    for g in (0.1, 0.35):
        p = DRule.trk().params(1.0, 1.0, g)
        mu = mu_coefficients(p)
        filter_config = FilterConfig.long_time(beat=mu.omega_x - mu.omega_y)
        quadrature = ew_spectrum_quadrature(p, state, filter_config, mu)
        complete = ew_spectrum_long_time(p, state, filter_config, mu)
        checks.append(Check("spectrum", f"quadrature g={g:g}", sup_norm_deviation(quadrature, complete), 2e-2))
        checks.append(Check("spectrum", f"closed form (1,0) g={g:g}",
                            sup_norm_deviation(ew_spectrum_closed_10(p, filter_config), complete), 2e-2))
    return checks


def thermometry_suite() -> list[Check]:
    """
    Closed-form Thermodynamics against direct Ladder Sums
    """
    checks = []
    for g, T in ((0.3, 0.5), (0.0, 0.1), (1.0, 0.2)):
        p = DRule.trk().params(1.0, 1.0, g)
        point, oracle = thermo_point(p, T), ladder_thermo(p, T)
        for name, value, reference in (("Z", point.Z, oracle.Z), ("U", point.U, oracle.U), ("C", point.C, oracle.C)):
            deviation = abs(value - reference) / abs(reference) if reference else abs(value)
            checks.append(Check("thermometry", f"{name} g={g:g} T={T:g}", float(deviation), 1e-10))
        checks.append(Check("thermometry", f"F = C/T^2 g={g:g} T={T:g}",
                            float(abs(point.qfi * T ** 2 - point.C) / point.C), 1e-12))
    return checks


def run_suite(suite: str, cutoff: int, max_dimension: int = MAX_DIMENSION) -> list[Check]:
    """
    Run one Suite or 'all'
    :param int cutoff: Eigenvalue Cutoff, Propagation uses four fifths of it
    :param int max_dimension: Budget for every dense Matrix
    :raises ConfigError: unknown Suite
    """
    if suite != "all" and suite not in SUITES:
        raise ConfigError(f"Config: Unknown validation suite '{suite}', use 'all' or one of {SUITES}.")
    runners = {
        "polaritons": lambda: polaritons_suite(cutoff, max_dimension),
        "dynamics": dynamics_suite,
        "correlation": lambda: correlation_suite(cutoff, max_dimension),
        "spectrum": spectrum_suite,
        "thermometry": thermometry_suite,
    }
    checks = []
    for name in SUITES if suite == "all" else (suite,):
        logging.info(f"Validate: Running suite '{name}'.")
        checks.extend(runners[name]())
    for check in checks:
        if not check.passed:
            logging.error(f"Validate: {check.suite} / {check.name} deviates by {check.deviation:.3g} "
                          f"> {check.tolerance:g}.")
    return checks
