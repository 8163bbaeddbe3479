"""
Heisenberg Operators from the exact Eigendecomposition of the truncated Hamiltonian
a(t) = U(t)^dag a U(t) with U(t) = exp(-i H t), diagonalized once and reused for every Time.
Both Parity Blocks are diagonalized separately, a and b map one Block onto the other.
"""

import logging
import numpy as np
import scipy.linalg

from src.errors import EigensolverFailure, InvalidParameters, UnstablePhase
from src.model import ModelParams, Phase, polariton_frequencies
from src.dynamics import EvolvedFieldCoeffs, FockProduct
from src.oracle.fock import (
    PROPAGATION_CUTOFF, FockTruncation, Representation, sparse_hamiltonian, parity_block, parity_sectors,
    mode_operators)

LEAK_TOLERANCE = 1e-8
PARITIES = (0, 1)


class HeisenbergPropagator:
    """
    Heisenberg Picture of the Field (operator 'a') or Matter (operator 'b') Annihilator
    """

    def __init__(self, p: ModelParams, trunc: FockTruncation, operator: str = "a"):
        spectrum = polariton_frequencies(p)
        if spectrum.phase == Phase.Unstable:
            raise UnstablePhase(f"Oracle: No propagation for omega_y^2 = {spectrum.omega_y_sq:.6g} < 0.")
        if operator not in ("a", "b"):
            raise InvalidParameters(f"Oracle: Operator must be 'a' or 'b', got '{operator}'.")
        self.params = p
        self.trunc = trunc
        self.sectors = parity_sectors(trunc)

        hamiltonian = sparse_hamiltonian(p, trunc)
        self.energies: list[np.ndarray] = []
        self.vectors: list[np.ndarray] = []
        for parity in PARITIES:
            try:
                energies, vectors = scipy.linalg.eigh(parity_block(p, trunc, parity, hamiltonian))
            except np.linalg.LinAlgError as error:
                raise EigensolverFailure(f"Oracle: Eigendecomposition failed at {p}: {error}") from error
            self.energies.append(energies)
            self.vectors.append(vectors)

        a, b = mode_operators(trunc)
        annihilator = a if operator == "a" else b
        # operator_blocks[s] maps Eigenbasis Coefficients of Sector s to Sector 1 - s
        self.operator_blocks = [
            self.vectors[1 - s].conj().T @ (annihilator[self.sectors[1 - s]][:, self.sectors[s]] @ self.vectors[s])
            for s in PARITIES]

        self._parity = np.zeros(trunc.dimension, dtype=int)
        self._parity[self.sectors[1]] = 1
        self._position = np.empty(trunc.dimension, dtype=int)
        for sector in self.sectors:
            self._position[sector] = np.arange(sector.size)
        n, m = trunc.occupations()
        self._boundary = (n == trunc.cutoff) | (m == trunc.cutoff)
        self._leak_reported = False
        logging.debug(f"Oracle: Propagator for '{operator}' at {p} with cutoff {trunc.cutoff}.")

    def _phases(self, parity: int, t) -> np.ndarray:
        return np.exp(1j * np.multiply.outer(np.asarray(t, dtype=float), self.energies[parity]))

    def matrix(self, t: float) -> np.ndarray:
        """
        Full Matrix of the Operator at Time t
        :raises CutoffTooLarge: (N + 1)^2 exceeds the Budget
        """
        self.trunc.check_budget(self.trunc.dimension)
        result = np.zeros((self.trunc.dimension, self.trunc.dimension), dtype=complex)
        for source in PARITIES:
            target = 1 - source
            evolved = self._phases(target, t)[:, None] * self.operator_blocks[source] \
                * self._phases(source, t).conj()[None, :]
            result[np.ix_(self.sectors[target], self.sectors[source])] = \
                self.vectors[target] @ evolved @ self.vectors[source].conj().T
        return result

    def matrix_element(self, bra: int, ket: int, times) -> np.ndarray:
        """
        <bra| a(t) |ket> for a 1d Array of Times
        """
        t = np.atleast_1d(np.asarray(times, dtype=float))
        source, target = self._parity[ket], self._parity[bra]
        if source == target:
            return np.zeros(t.shape, dtype=complex)
        left = self.vectors[target][self._position[bra]].conj()[None, :] * self._phases(target, t)
        right = self.vectors[source][self._position[ket]][None, :] * self._phases(source, t).conj()
        return np.sum((left @ self.operator_blocks[source]) * right, axis=1)

    def apply(self, state: np.ndarray, t: float) -> np.ndarray:
        """
        a(t) |state>
        """
        evolved = np.zeros(self.trunc.dimension, dtype=complex)
        for source in PARITIES:
            target = 1 - source
            projected = self.vectors[source].conj().T @ state[self.sectors[source]]
            coefficients = self._phases(source, t).conj() * projected
            evolved[self.sectors[target]] += self.vectors[target] @ (
                self._phases(target, t) * (self.operator_blocks[source] @ coefficients))
        self._check_leak(evolved, t)
        return evolved

    def _check_leak(self, vector: np.ndarray, t: float):
        leak = float(np.sum(np.abs(vector[self._boundary]) ** 2))
        if leak > LEAK_TOLERANCE * max(1.0, float(np.vdot(vector, vector).real)) and not self._leak_reported:
            logging.warning(f"Oracle: Truncation leak {leak:.3g} at t = {t:g} with cutoff {self.trunc.cutoff}.")
            self._leak_reported = True


def propagate_heisenberg(p: ModelParams, trunc: FockTruncation, operator: str, t: float) -> np.ndarray:
    """
    Matrix of U(t)^dag a U(t) (or b) on the truncated Basis
    """
    return HeisenbergPropagator(p, trunc, operator).matrix(t)


def field_coefficients_oracle(p: ModelParams, times, trunc: FockTruncation | None = None) -> EvolvedFieldCoeffs:
    """
    f_j(t) of a(t) = f1 a + f2 a^dag + f3 b + f4 b^dag read off from Matrix Elements between low Fock States
    Coefficients are always reported for the original Representation of the Coupling.
    """
    trunc = trunc or FockTruncation(cutoff=PROPAGATION_CUTOFF)
    propagator = HeisenbergPropagator(p, trunc, "a")
    t = np.atleast_1d(np.asarray(times, dtype=float))
    vacuum, field, matter = trunc.index(0, 0), trunc.index(1, 0), trunc.index(0, 1)
    f = np.array([
        propagator.matrix_element(vacuum, field, t),
        propagator.matrix_element(field, vacuum, t),
        propagator.matrix_element(vacuum, matter, t),
        propagator.matrix_element(matter, vacuum, t),
    ])
    if trunc.representation == Representation.Rotated:
        # b' = -i b
        f[2] *= -1j
        f[3] *= 1j
    return EvolvedFieldCoeffs(times=t, f=f, metadata={"cutoff": trunc.cutoff, "oracle": True})


def correlation_oracle(p: ModelParams, state: FockProduct, t1, t2, trunc: FockTruncation | None = None):
    """
    <n,m| a^dag(t1) a(t2) |n,m> = (a(t1)|n,m>)^dag (a(t2)|n,m>)
    :param t1: Time or Array of Times
    :param t2: Time or Array of Times, broadcast against t1
    :return: complex Value or Array of the broadcast Shape
    """
    trunc = trunc or FockTruncation(cutoff=PROPAGATION_CUTOFF)
    propagator = HeisenbergPropagator(p, trunc, "a")
    initial = trunc.basis_state(state.n, state.m)
    t1, t2 = np.broadcast_arrays(np.asarray(t1, dtype=float), np.asarray(t2, dtype=float))

    cache: dict[float, np.ndarray] = {}

    def evolved(t: float) -> np.ndarray:
        if t not in cache:
            cache[t] = propagator.apply(initial, t)
        return cache[t]

    result = np.array([np.vdot(evolved(float(a)), evolved(float(b))) for a, b in zip(t1.ravel(), t2.ravel())])
    result = result.reshape(t1.shape)
    return result[()] if result.ndim == 0 else result
