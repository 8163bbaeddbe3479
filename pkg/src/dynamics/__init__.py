from .coefficients import (
    SIGNS, MuMatrix, EvolvedFieldCoeffs, mixing_angle, mu_coefficients, evaluate_coefficients, field_coefficients,
    initial_derivative, commutator_invariant)
from .heisenberg import heisenberg_generator, sign_pattern_consistent
from .correlation import FockProduct, autocorrelation, hermitian_check
__all__ = [
    "SIGNS", "MuMatrix", "EvolvedFieldCoeffs", "mixing_angle", "mu_coefficients", "evaluate_coefficients",
    "field_coefficients", "initial_derivative", "commutator_invariant",
    "heisenberg_generator", "sign_pattern_consistent",
    "FockProduct", "autocorrelation", "hermitian_check",
]
