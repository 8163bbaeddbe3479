import numpy as np
import pytest

from src.errors import CriticalPhase, CutoffTooLarge, TailNotConverged
from src.model import DRule, ModelParams, ladder, ground_state_energy, polariton_frequencies
from src.dynamics import FockProduct, mu_coefficients, field_coefficients, autocorrelation
from src.thermometry import thermo_point
from src.oracle import (
    MAX_DIMENSION, EIGENVALUE_CUTOFF, Representation, FockTruncation, annihilation, build_hamiltonian, parity_block,
    parity_leakage, eigenspectrum, lowest_eigenvalues, converged_eigenvalues, propagate_heisenberg,
    field_coefficients_oracle, correlation_oracle, mode_table, ladder_thermo)


def test_uncoupled_hamiltonian_is_diagonal():
    trunc = FockTruncation(cutoff=4)
    hamiltonian = build_hamiltonian(ModelParams(1.0, 2.0, 0.0, 0.0), trunc)
    n, m = trunc.occupations()
    assert np.array_equal(hamiltonian, np.diag(n + 2.0 * m))


def test_uncoupled_eigenvalues():
    spectrum = converged_eigenvalues(ModelParams(1.0, 2.0, 0.0, 0.0), cutoffs=(5, 10), count=4)
    assert spectrum.values == pytest.approx([0.0, 1.0, 2.0, 2.0], abs=1e-12)
    assert np.all(spectrum.converged)


def test_parity_is_conserved(resonant):
    trunc = FockTruncation(cutoff=6)
    assert parity_leakage(build_hamiltonian(resonant(0.8), trunc), trunc) == 0.0
    assert parity_leakage(build_hamiltonian(ModelParams(1.0, 1.5, 0.3, 0.1, 0.2), trunc), trunc) == 0.0


def test_spectrum_matches_ladder(resonant):
    p = resonant(0.3)
    spectrum = converged_eigenvalues(p, cutoffs=(20, 40), count=6)
    assert np.all(spectrum.converged)
    expected = [energy for energy, _, _ in ladder(p, 6, shifted=True)]
    assert spectrum.gaps == pytest.approx(expected[1:], abs=1e-6)
    assert spectrum.values[0] == pytest.approx(ground_state_energy(p) - 1.0, abs=1e-6)


def test_representations_share_the_spectrum():
    p = ModelParams(1.0, 1.3, 0.4, 0.2, 0.1)
    rotated = FockTruncation(cutoff=8)
    original = FockTruncation(cutoff=8, representation=Representation.Original)
    assert np.isrealobj(build_hamiltonian(p, rotated))
    assert np.iscomplexobj(build_hamiltonian(p, original))
    assert eigenspectrum(build_hamiltonian(p, original)).values == pytest.approx(
        eigenspectrum(build_hamiltonian(p, rotated)).values, abs=1e-9)


def test_parity_blocks_reproduce_full_diagonalization(resonant):
    trunc = FockTruncation(cutoff=8)
    hamiltonian = build_hamiltonian(resonant(0.4), trunc)
    assert eigenspectrum(hamiltonian, trunc=trunc).values == pytest.approx(eigenspectrum(hamiltonian).values,
                                                                          abs=1e-10)


def test_cutoff_budget():
    with pytest.raises(CutoffTooLarge) as error:
        build_hamiltonian(ModelParams.isotropic(1.0, 1.0, 0.3), FockTruncation(cutoff=150))
    assert isinstance(error.value, MemoryError)
    with pytest.raises(ValueError):
        FockTruncation(cutoff=1)
    with pytest.raises(ValueError):
        FockTruncation(cutoff=4).index(5, 0)


def test_cutoffs_must_increase():
    with pytest.raises(ValueError):
        converged_eigenvalues(ModelParams.isotropic(1.0, 1.0, 0.3), cutoffs=(20, 10))


def test_truncated_ground_state_descends_at_collapse():
    # compressions of the same operator, so eigenvalues can only decrease with the cutoff
    p = ModelParams.isotropic(1.0, 1.0, 0.5)
    lowest = []
    for cutoff in (10, 20, 40):
        trunc = FockTruncation(cutoff=cutoff)
        lowest.append(eigenspectrum(build_hamiltonian(p, trunc), trunc=trunc).values[:2])
    lowest = np.array(lowest)
    assert np.all(np.diff(lowest, axis=0) <= 1e-12)


def test_free_heisenberg_operator():
    trunc = FockTruncation(cutoff=5)
    a = np.kron(annihilation(trunc.size), np.eye(trunc.size))
    evolved = propagate_heisenberg(ModelParams.isotropic(1.0, 1.0, 0.0), trunc, "a", 0.7)
    assert np.max(np.abs(evolved - np.exp(-0.7j) * a)) < 1e-12
    with pytest.raises(ValueError):
        propagate_heisenberg(ModelParams.isotropic(1.0, 1.0, 0.0), trunc, "c", 0.7)


@pytest.mark.slow
@pytest.mark.parametrize("g", [0.1, 0.35])
def test_field_coefficients_match_fock_propagation(g):
    p = DRule.trk().params(1.0, 1.0, g)
    t = np.linspace(0.0, 50.0, 101)
    oracle = field_coefficients_oracle(p, t)
    closed = field_coefficients(mu_coefficients(p), t)
    assert np.max(np.abs(oracle.f - closed.f)) < 1e-6


def test_correlation_matches_fock_propagation():
    p = DRule.trk().params(1.0, 1.0, 0.35)
    t1, t2 = np.meshgrid(np.linspace(0.0, 4.0, 5), np.linspace(0.0, 4.0, 5))
    for state in (FockProduct(1, 0), FockProduct(0, 2)):
        oracle = correlation_oracle(p, state, t1, t2, FockTruncation(cutoff=40))
        assert oracle.shape == (5, 5)
        assert np.max(np.abs(oracle - autocorrelation(p, state, t1, t2))) < 1e-6


@pytest.mark.parametrize("omega_b, g", [(1.0, 0.35), (1.5, 0.2), (0.7, 1.0), (2.5, 0.8), (0.4, 0.1), (1.0, 3.0)])
def test_mode_table_matches_closed_form(omega_b, g):
    p = DRule.trk().params(1.0, omega_b, g)
    closed, numerical = mu_coefficients(p), mode_table(p)
    assert (numerical.omega_x, numerical.omega_y) == pytest.approx((closed.omega_x, closed.omega_y), rel=1e-12)
    assert np.max(np.abs(numerical.mu - closed.mu)) < 1e-10


def test_mode_table_is_defective_at_collapse():
    with pytest.raises(CriticalPhase):
        mode_table(ModelParams.isotropic(1.0, 1.0, 0.5))


@pytest.mark.parametrize("T", [0.1, 0.5, 2.0])
def test_ladder_sum_matches_closed_form(resonant, T):
    p = resonant(0.3)
    direct, closed = ladder_thermo(p, T), thermo_point(p, T)
    assert direct.tail <= 1e-12
    assert direct.Z == pytest.approx(closed.Z, rel=1e-10)
    assert direct.U == pytest.approx(closed.U, rel=1e-9)
    assert direct.C == pytest.approx(closed.C, rel=1e-8)


def test_ladder_sum_needs_enough_levels(resonant):
    with pytest.raises(TailNotConverged):
        ladder_thermo(resonant(0.3), 0.5, cutoff=3)
    with pytest.raises(CriticalPhase):
        ladder_thermo(ModelParams.isotropic(1.0, 1.0, 0.5), 0.5)


def test_random_points_match_ladder():
    rng = np.random.default_rng(7)
    points = []
    while len(points) < 20:
        omega_b, g1, g2 = rng.uniform(0.7, 1.3), rng.uniform(0.0, 0.5), rng.uniform(0.0, 0.5)
        p = ModelParams(1.0, float(omega_b), float(g1), float(g2), float(rng.uniform(0.0, 0.3)))
        # away from the collapse the low levels converge at small cutoffs
        if abs(p.lambda2) < 0.9 and polariton_frequencies(p).omega_y_sq > 0.09:
            points.append(p)
    for p in points:
        spectrum = converged_eigenvalues(p, cutoffs=(30, 45), count=6)
        assert np.all(spectrum.converged)
        expected = [energy for energy, _, _ in ladder(p, 6, shifted=True)]
        assert spectrum.gaps == pytest.approx(expected[1:], rel=1e-6)


@pytest.mark.slow
@pytest.mark.parametrize("g", [1.5, 3.0])
def test_deep_strong_coupling_ladder(g):
    p = DRule.trk().params(1.0, 1.0, g)
    spectrum = converged_eigenvalues(p, cutoffs=(2 * EIGENVALUE_CUTOFF // 3, EIGENVALUE_CUTOFF), count=6)
    assert np.all(spectrum.converged)
    expected = [energy for energy, _, _ in ladder(p, 6, shifted=True)]
    assert spectrum.gaps == pytest.approx(expected[1:], abs=1e-6)
    # equally spaced, no avoided crossing below omega_x
    assert np.diff(spectrum.values) == pytest.approx(np.full(5, polariton_frequencies(p).omega_y), abs=1e-6)


def test_parity_blocks_fit_the_budget_at_the_default_cutoff():
    trunc = FockTruncation(cutoff=EIGENVALUE_CUTOFF)
    assert trunc.block_dimension == 11401
    assert trunc.block_dimension <= MAX_DIMENSION < trunc.dimension
    trunc.check_budget(trunc.block_dimension)
    with pytest.raises(CutoffTooLarge):
        parity_block(ModelParams.isotropic(1.0, 1.0, 0.3), FockTruncation(cutoff=20, max_dimension=100), 0)
    with pytest.raises(CutoffTooLarge):
        converged_eigenvalues(ModelParams.isotropic(1.0, 1.0, 0.3), cutoffs=(10, 20), max_dimension=100)


def test_lowest_eigenvalues_from_parity_blocks(resonant):
    p = resonant(0.4)
    for representation in Representation:
        trunc = FockTruncation(cutoff=10, representation=representation)
        full = eigenspectrum(build_hamiltonian(p, trunc)).values[:8]
        assert lowest_eigenvalues(p, trunc, 8) == pytest.approx(full, abs=1e-10)
