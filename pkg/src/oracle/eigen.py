import logging
import numpy as np
import scipy.linalg
from dataclasses import dataclass, field

from src.errors import EigensolverFailure, InvalidParameters
from src.model import ModelParams
from src.oracle.fock import (
    EIGENVALUE_CUTOFF, MAX_DIMENSION, FockTruncation, Representation, sparse_hamiltonian, parity_block, parity_sectors)

CONVERGENCE_RTOL = 1e-6


@dataclass(frozen=True, eq=False)
class Eigenspectrum:
    """
    Ascending Eigenvalues of a truncated Hamiltonian
    :param values: Eigenvalues
    :param estimates: |E_k(N) - E_k(N - Delta N)| for the leading Eigenvalues, nan without a Reference
    :param converged: Estimate within rtol
    """
    values: np.ndarray
    estimates: np.ndarray
    converged: np.ndarray
    cutoffs: tuple[int, ...] = ()
    metadata: dict = field(default_factory=dict)

    @property
    def gaps(self) -> np.ndarray:
        return self.values[1:] - self.values[0]


def _eigvalsh(matrix: np.ndarray, count: int | None = None) -> np.ndarray:
    subset = None if count is None or count >= matrix.shape[0] else [0, count - 1]
    try:
        return scipy.linalg.eigh(matrix, eigvals_only=True, subset_by_index=subset)
    except np.linalg.LinAlgError as error:
        raise EigensolverFailure(
            f"Oracle: Eigensolver failed on a {matrix.shape[0]}-dimensional matrix: {error}") from error


def _compare(values: np.ndarray, reference, rtol: float) -> Eigenspectrum:
    estimates = np.full(values.shape, np.nan)
    if reference is None:
        return Eigenspectrum(values=values, estimates=estimates, converged=np.zeros(values.shape, dtype=bool))
    count = min(values.size, np.asarray(reference).size)
    estimates[:count] = np.abs(values[:count] - np.asarray(reference)[:count])
    with np.errstate(invalid="ignore"):
        converged = estimates <= rtol * np.maximum(1.0, np.abs(values))
    return Eigenspectrum(values=values, estimates=estimates, converged=converged)


def eigenspectrum(matrix: np.ndarray, reference: np.ndarray | None = None, rtol: float = CONVERGENCE_RTOL,
                  trunc: FockTruncation | None = None) -> Eigenspectrum:
    """
    Sorted Eigenvalues with Convergence Flags against the Eigenvalues of a smaller Cutoff
    :param matrix: Hermitian Matrix
    :param reference: ascending Eigenvalues at a smaller Cutoff
    :param float rtol: Tolerance relative to max(1, |E_k|)
    :param FockTruncation trunc: diagonalize the two Parity Blocks separately
    :return Eigenspectrum:
    :raises EigensolverFailure:
    """
    if trunc is None:
        values = _eigvalsh(matrix)
    else:
        values = np.sort(np.concatenate([_eigvalsh(matrix[np.ix_(sector, sector)])
                                         for sector in parity_sectors(trunc)]))
    return _compare(values, reference, rtol)


def lowest_eigenvalues(p: ModelParams, trunc: FockTruncation, count: int) -> np.ndarray:
    """
    count lowest Eigenvalues, each Parity Block diagonalized on its own
    :raises CutoffTooLarge: a Block exceeds the Budget of trunc
    """
    hamiltonian = sparse_hamiltonian(p, trunc)
    values = [_eigvalsh(parity_block(p, trunc, parity, hamiltonian), count) for parity in (0, 1)]
    return np.sort(np.concatenate(values))[:count]


def converged_eigenvalues(p: ModelParams, cutoffs: tuple[int, ...] = (2 * EIGENVALUE_CUTOFF // 3, EIGENVALUE_CUTOFF),
                          count: int = 10, rtol: float = CONVERGENCE_RTOL,
                          representation: Representation = Representation.Rotated,
                          max_dimension: int = MAX_DIMENSION) -> Eigenspectrum:
    """
    Lowest Eigenvalues at the largest Cutoff, each compared to the next smaller Cutoff
    :param ModelParams p: Model Parameters
    :param tuple cutoffs: increasing Cutoffs
    :param int count: Number of Eigenvalues kept
    :param int max_dimension: Budget for each dense Parity Block
    :return Eigenspectrum: count Eigenvalues, Estimates from the last two Cutoffs
    """
    if len(cutoffs) < 2 or list(cutoffs) != sorted(set(cutoffs)):
        raise InvalidParameters(f"Oracle: Need at least two increasing cutoffs, got {cutoffs}.")
    largest = FockTruncation(cutoff=cutoffs[-1], max_dimension=max_dimension)
    largest.check_budget(largest.block_dimension)
    reference = None
    result = None
    for cutoff in cutoffs:
        trunc = FockTruncation(cutoff=cutoff, representation=representation, max_dimension=max_dimension)
        result = _compare(lowest_eigenvalues(p, trunc, count), reference, rtol)
        reference = result.values

    values, estimates, converged = result.values, result.estimates, result.converged
    if not np.all(converged):
        logging.warning(f"Oracle: {int(np.sum(~converged))} of {count} eigenvalues unconverged at cutoff "
                        f"{cutoffs[-1]} for {p}, largest change {np.nanmax(estimates):.3g}.")
    return Eigenspectrum(values=values, estimates=estimates, converged=converged, cutoffs=tuple(cutoffs),
                         metadata={"representation": representation.value})
