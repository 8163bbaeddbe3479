from .fock import (
    MAX_DIMENSION, EIGENVALUE_CUTOFF, PROPAGATION_CUTOFF, Representation, FockTruncation, annihilation,
    quadrature_squared, mode_operators, sparse_hamiltonian, build_hamiltonian, parity_sectors, parity_block,
    parity_leakage)
from .eigen import CONVERGENCE_RTOL, Eigenspectrum, eigenspectrum, lowest_eigenvalues, converged_eigenvalues
from .propagation import (
    LEAK_TOLERANCE, HeisenbergPropagator, propagate_heisenberg, field_coefficients_oracle, correlation_oracle)
from .linear import linear_heisenberg_coefficients, mode_table
from .ladder import TAIL_TOLERANCE, MAX_LADDER, LadderThermo, ladder_thermo
__all__ = [
    "MAX_DIMENSION", "EIGENVALUE_CUTOFF", "PROPAGATION_CUTOFF", "Representation", "FockTruncation", "annihilation",
    "quadrature_squared", "mode_operators", "sparse_hamiltonian", "build_hamiltonian", "parity_sectors",
    "parity_block", "parity_leakage",
    "CONVERGENCE_RTOL", "Eigenspectrum", "eigenspectrum", "lowest_eigenvalues", "converged_eigenvalues",
    "LEAK_TOLERANCE", "HeisenbergPropagator", "propagate_heisenberg", "field_coefficients_oracle",
    "correlation_oracle",
    "linear_heisenberg_coefficients", "mode_table",
    "TAIL_TOLERANCE", "MAX_LADDER", "LadderThermo", "ladder_thermo",
]
