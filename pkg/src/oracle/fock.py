"""
Truncated two-mode Fock Space
Basis |n, m> with n Field and m Matter Quanta, 0 <= n, m <= cutoff, Index n * (cutoff + 1) + m.
The Hamiltonian is assembled sparse, only the two Parity Blocks are handed to the dense Eigensolver.
"""

import logging
import numpy as np
from enum import Enum
from dataclasses import dataclass
from scipy import sparse

from src.errors import CutoffTooLarge, InvalidParameters
from src.model import ModelParams

MAX_DIMENSION = 12000   # largest dense Matrix, the even Block at cutoff 150 has 11401 States
EIGENVALUE_CUTOFF = 150
PROPAGATION_CUTOFF = 120


class Representation(Enum):
    """
    Original: i g1 (a b^dag - a^dag b) + i g2 (a^dag b^dag - a b), complex Hermitian
    Rotated: g1 (a b^dag + a^dag b) + g2 (a^dag b^dag + a b), real symmetric, obtained by b -> i b
    """
    Original = "original"
    Rotated = "rotated"


@dataclass(frozen=True)
class FockTruncation:
    """
    :param int cutoff: Maximum Occupation N per Mode
    :param Representation representation: Form of the Coupling
    :param int max_dimension: Budget for every dense Matrix built on the Basis
    """
    cutoff: int = EIGENVALUE_CUTOFF
    representation: Representation = Representation.Rotated
    max_dimension: int = MAX_DIMENSION

    def __post_init__(self):
        if self.cutoff < 2:
            raise InvalidParameters(f"Oracle: Cutoff must be >= 2, got {self.cutoff}.")
        if self.max_dimension < 1:
            raise InvalidParameters(f"Oracle: Dimension budget must be >= 1, got {self.max_dimension}.")

    @property
    def size(self) -> int:
        return self.cutoff + 1

    @property
    def dimension(self) -> int:
        return self.size ** 2

    @property
    def block_dimension(self) -> int:
        """
        Size of the even Parity Block, the larger of the two
        """
        return (self.dimension + 1) // 2

    def check_budget(self, dimension: int):
        """
        :raises CutoffTooLarge: a dense Matrix of this Dimension exceeds max_dimension
        """
        if dimension > self.max_dimension:
            raise CutoffTooLarge(
                f"Oracle: Cutoff {self.cutoff} needs a dense matrix of dimension {dimension} > {self.max_dimension}.")

    def index(self, n: int, m: int) -> int:
        if not (0 <= n <= self.cutoff and 0 <= m <= self.cutoff):
            raise InvalidParameters(f"Oracle: State |{n},{m}> lies outside cutoff {self.cutoff}.")
        return n * self.size + m

    def occupations(self) -> tuple[np.ndarray, np.ndarray]:
        """
        Field and Matter Occupation of every Basis State
        """
        n, m = np.divmod(np.arange(self.dimension), self.size)
        return n, m

    def basis_state(self, n: int, m: int) -> np.ndarray:
        state = np.zeros(self.dimension)
        state[self.index(n, m)] = 1.0
        return state


def annihilation(size: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, size)), k=1)


def quadrature_squared(size: int) -> np.ndarray:
    """
    (a + a^dag)^2 built one Level higher and projected, so the top Diagonal Element stays exact
    """
    a = annihilation(size + 1)
    x = a + a.T
    return (x @ x)[:size, :size]


def mode_operators(trunc: FockTruncation) -> tuple[sparse.csr_matrix, sparse.csr_matrix]:
    """
    a and b on the two-mode Basis
    """
    a = sparse.csr_matrix(annihilation(trunc.size))
    identity = sparse.identity(trunc.size, format="csr")
    return sparse.kron(a, identity, format="csr"), sparse.kron(identity, a, format="csr")


def sparse_hamiltonian(p: ModelParams, trunc: FockTruncation) -> sparse.csr_matrix:
    """
    Normal-ordered Hopfield Hamiltonian on the truncated Basis, no Budget applies
    """
    a, b = mode_operators(trunc)
    identity = sparse.identity(trunc.size, format="csr")
    levels = sparse.diags(np.arange(trunc.size, dtype=float), format="csr")
    diamagnetic = sparse.csr_matrix(quadrature_squared(trunc.size))

    hamiltonian = p.omega_c * sparse.kron(levels, identity) + p.omega_b * sparse.kron(identity, levels) \
        + p.D * sparse.kron(diamagnetic, identity)
    exchange = a @ b.T
    pair = a.T @ b.T
    if trunc.representation == Representation.Rotated:
        hamiltonian = hamiltonian + p.g1 * (exchange + exchange.T) + p.g2 * (pair + pair.T)
    else:
        hamiltonian = hamiltonian + 1j * p.g1 * (exchange - exchange.T) + 1j * p.g2 * (pair - pair.T)
    return sparse.csr_matrix(hamiltonian)


def build_hamiltonian(p: ModelParams, trunc: FockTruncation) -> np.ndarray:
    """
    Dense normal-ordered Hopfield Hamiltonian on the truncated Basis
    Its Eigenvalues are E_mn - (omega_c + omega_b) / 2.
    :param ModelParams p: Model Parameters
    :param FockTruncation trunc: Truncation
    :return: real symmetric (Rotated) or complex Hermitian (Original) Matrix
    :raises CutoffTooLarge: (N + 1)^2 > max_dimension
    """
    trunc.check_budget(trunc.dimension)
    logging.debug(f"Oracle: Cutoff {trunc.cutoff} gives dimension {trunc.dimension}.")
    return sparse_hamiltonian(p, trunc).toarray()


def parity_sectors(trunc: FockTruncation) -> tuple[np.ndarray, np.ndarray]:
    """
    Basis Indices with even and odd total Occupation n + m
    """
    n, m = trunc.occupations()
    parity = (n + m) % 2
    return np.flatnonzero(parity == 0), np.flatnonzero(parity == 1)


def parity_block(p: ModelParams, trunc: FockTruncation, parity: int,
                 hamiltonian: sparse.csr_matrix | None = None) -> np.ndarray:
    """
    Dense Block of the Hamiltonian on the even (0) or odd (1) Sector
    :param sparse.csr_matrix hamiltonian: reuse an assembled Hamiltonian
    :raises CutoffTooLarge: Block larger than max_dimension
    """
    sector = parity_sectors(trunc)[parity]
    trunc.check_budget(sector.size)
    if hamiltonian is None:
        hamiltonian = sparse_hamiltonian(p, trunc)
    logging.debug(f"Oracle: Parity {parity} block of dimension {sector.size} at cutoff {trunc.cutoff}.")
    return hamiltonian[sector][:, sector].toarray()


def parity_leakage(matrix: np.ndarray, trunc: FockTruncation) -> float:
    """
    Largest Matrix Element between the even and the odd Sector
    """
    even, odd = parity_sectors(trunc)
    return float(np.max(np.abs(matrix[np.ix_(even, odd)]), initial=0.0))
