import numpy as np
import pytest
from hypothesis import given, settings

from src.errors import InvalidParameters, NotIsotropic, UnstablePhase
from src.model import DRule, ModelParams
from src.dynamics import (
    FockProduct, mu_coefficients, evaluate_coefficients, field_coefficients, commutator_invariant,
    heisenberg_generator, sign_pattern_consistent, autocorrelation, hermitian_check, initial_derivative)
from src.oracle import linear_heisenberg_coefficients
from tests.strategies import long_times, trk_params


def test_free_field_mode():
    p = ModelParams.isotropic(1.0, 1.0, 0.0)
    t = np.linspace(0.0, 10.0, 51)
    f = field_coefficients(mu_coefficients(p), t).f
    assert f[0] == pytest.approx(np.exp(-1j * t), abs=1e-14)
    assert np.max(np.abs(f[1:])) < 1e-14


def test_free_matter_mode_off_resonance():
    # omega_b > omega_c puts the field on the lower branch
    p = ModelParams.isotropic(1.0, 2.0, 0.0)
    t = np.linspace(0.0, 10.0, 51)
    f = field_coefficients(mu_coefficients(p), t).f
    assert f[0] == pytest.approx(np.exp(-1j * t), abs=1e-14)


@given(trk_params(max_g=2.0))
@settings(max_examples=100, deadline=None)
def test_row_sums(p):
    assert mu_coefficients(p).row_sums() == pytest.approx([1, 0, 0, 0], abs=1e-11)


@pytest.mark.parametrize("omega_b, g, rule", [(1.0, 0.1, DRule.trk()), (1.0, 0.35, DRule.trk()),
                                              (1.0, 1.0, DRule.trk()), (1.5, 0.2, DRule.trk()),
                                              (0.5, 0.1, DRule.zero()), (1.0, 0.3, DRule.scaled(0.5))])
def test_coefficients_match_matrix_exponential(omega_b, g, rule):
    p = rule.params(1.0, omega_b, g)
    t = np.linspace(0.0, 20.0, 41)
    closed = field_coefficients(mu_coefficients(p), t).f
    oracle = linear_heisenberg_coefficients(p, t).f
    assert np.max(np.abs(closed - oracle)) < 1e-9


def test_critical_limit_matches_matrix_exponential():
    p = ModelParams.isotropic(1.0, 1.0, 0.5)
    mu = mu_coefficients(p)
    assert mu.critical
    assert mu.row_sums() == pytest.approx([1, 0, 0, 0], abs=1e-12)
    t = np.linspace(0.0, 10.0, 21)
    coefficients = field_coefficients(mu, t)
    assert coefficients.metadata["critical"]
    assert np.max(np.abs(coefficients.f - linear_heisenberg_coefficients(p, t).f)) < 1e-8


@given(trk_params(max_g=2.0), long_times)
@settings(max_examples=200, deadline=None)
def test_commutator_conserved(p, t):
    coefficients = field_coefficients(mu_coefficients(p), [t])
    assert commutator_invariant(coefficients) == pytest.approx([1.0], abs=1e-10)


@given(trk_params(max_g=2.0))
@settings(max_examples=100, deadline=None)
def test_sign_pattern(p):
    assert sign_pattern_consistent(p, mu_coefficients(p))


def test_generator_is_free_evolution_without_coupling():
    generator = heisenberg_generator(ModelParams(1.0, 2.0, 0.0, 0.0))
    assert np.diag(generator) == pytest.approx([-1j, 1j, -2j, 2j])
    assert np.count_nonzero(generator - np.diag(np.diag(generator))) == 0


def test_requires_isotropic_coupling():
    with pytest.raises(NotIsotropic):
        mu_coefficients(ModelParams(1.0, 1.0, 0.2, 0.1))


def test_unstable_phase_has_no_table():
    with pytest.raises(UnstablePhase):
        mu_coefficients(ModelParams.isotropic(1.0, 1.0, 0.6))


def test_evaluate_coefficients_shape():
    mu = mu_coefficients(DRule.trk().params(1.0, 1.0, 0.35))
    assert evaluate_coefficients(mu, np.zeros((3, 5))).shape == (4, 3, 5)


def test_free_autocorrelation():
    p = ModelParams.isotropic(1.0, 1.0, 0.0)
    value = autocorrelation(p, FockProduct(1, 0), 0.7, 1.3)
    assert value == pytest.approx(np.exp(1j * (0.7 - 1.3)), abs=1e-14)


def test_vacuum_correlation_from_counterrotating_terms(caplog):
    p = DRule.trk().params(1.0, 1.0, 0.35)
    mu = mu_coefficients(p)
    f = evaluate_coefficients(mu, 1.0)
    value = autocorrelation(p, FockProduct(0, 0), 1.0, 1.0, mu)
    assert value.real == pytest.approx(abs(f[1]) ** 2 + abs(f[3]) ** 2)
    assert value.real > 0
    assert "outside n != m" in caplog.text


def test_occupation_is_real_and_bounded():
    p = DRule.trk().params(1.0, 1.0, 0.35)
    t = np.linspace(0.0, 20.0, 101)
    occupation = autocorrelation(p, FockProduct(1, 0), t, t)
    assert np.max(np.abs(occupation.imag)) < 1e-12
    assert occupation[0].real == pytest.approx(1.0)
    assert np.all(occupation.real > 0)


def test_hermitian_symmetry_examples():
    assert hermitian_check(DRule.trk().params(1.0, 1.0, 0.35), FockProduct(1, 0), [0.7, 1.3])
    assert hermitian_check(ModelParams.isotropic(1.0, 1.0, 0.0), FockProduct(1, 0), [0.7, 1.3])


@given(trk_params(max_g=2.0))
@settings(max_examples=100, deadline=None)
def test_hermitian_symmetry(p):
    assert hermitian_check(p, FockProduct(1, 0), np.linspace(0.0, 10.0, 11))
    assert hermitian_check(p, FockProduct(0, 2), np.linspace(0.0, 10.0, 11))


def test_fock_product_validation():
    with pytest.raises(InvalidParameters):
        FockProduct(-1, 0)
    assert FockProduct(1, 0).weights == pytest.approx([1, 2, 0, 1])
    assert FockProduct(2, 2).outside_stated_domain


@pytest.mark.parametrize("p", [DRule.trk().params(1.0, 1.0, 0.35), DRule.trk().params(1.0, 1.5, 1.0),
                               ModelParams.isotropic(1.0, 1.0, 0.5)])
def test_initial_derivative_matches_finite_difference(p):
    mu = mu_coefficients(p)
    h = 1e-5
    difference = (evaluate_coefficients(mu, h) - evaluate_coefficients(mu, -h)) / (2 * h)
    assert initial_derivative(mu) == pytest.approx(difference, abs=1e-8)


def test_matter_share_vanishes_with_coupling():
    shares = []
    for g in (1e-2, 1e-3, 1e-4):
        mu = mu_coefficients(ModelParams.isotropic(1.0, 1.5, g))
        shares.append(np.max(np.abs(mu.mu[2:])))
        assert shares[-1] < 5 * g
    assert shares[0] > shares[1] > shares[2]
    assert np.max(np.abs(mu_coefficients(ModelParams.isotropic(1.0, 1.5, 0.0)).mu[2:])) < 1e-14
