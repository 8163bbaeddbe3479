import numpy as np
import pytest

from src.errors import CriticalPhase, GridTooCoarse, InvalidParameters, NotIsotropic, QuadratureNotConverged
from src.model import DRule, ModelParams, polariton_frequencies
from src.dynamics import FockProduct, mu_coefficients
from src.spectrum import (
    FilterConfig, Method, sup_norm_deviation, window_mean, ew_spectrum_quadrature, ew_spectrum_long_time,
    ew_spectrum_trapezoid, weight_factors, rwa_weight, ew_spectrum_closed_10, ew_spectrum_closed_01,
    ew_spectrum_rwa, ew_spectrum_rwa_exact, dsc_limit_spectrum, vrs_analysis, compute_spectrum,
    dispersion_curves, polariton_dispersion_map)

GAMMA = 0.05


def averaged_filter(p: ModelParams, grid=None) -> FilterConfig:
    spectrum = polariton_frequencies(p)
    return FilterConfig.long_time(GAMMA, grid, beat=spectrum.omega_x - spectrum.omega_y)


def test_free_oscillator_peak(resonant, fine_grid):
    p = resonant(0.0)
    filter_config = FilterConfig.long_time(GAMMA, fine_grid)
    closed = ew_spectrum_closed_10(p, filter_config)
    assert closed.peak == pytest.approx(2 / GAMMA, rel=1e-9)
    assert fine_grid[np.argmax(closed.values)] == pytest.approx(1.0)
    quadrature = ew_spectrum_quadrature(p, FockProduct(1, 0), filter_config)
    assert quadrature.peak == pytest.approx(2 / GAMMA, rel=1e-3)


@pytest.mark.parametrize("g", [0.1, 0.35])
def test_quadrature_matches_long_time_sum(resonant, g):
    p = resonant(g)
    filter_config = averaged_filter(p)
    quadrature = ew_spectrum_quadrature(p, FockProduct(1, 0), filter_config)
    complete = ew_spectrum_long_time(p, FockProduct(1, 0), filter_config)
    assert sup_norm_deviation(quadrature, complete) < 2e-2
    assert quadrature.metadata["imaginary_residue"] < 1e-8
    assert np.all(quadrature.values >= 0)


@pytest.mark.parametrize("g", [0.1, 0.35])
def test_printed_closed_form_10(resonant, g):
    p = resonant(g)
    filter_config = averaged_filter(p)
    complete = ew_spectrum_long_time(p, FockProduct(1, 0), filter_config)
    assert sup_norm_deviation(ew_spectrum_closed_10(p, filter_config), complete) < 2e-2


@pytest.mark.parametrize("g, tolerance", [(0.1, 2e-2), (0.35, 7e-2)])
def test_printed_closed_form_01(resonant, g, tolerance):
    p = resonant(g)
    filter_config = averaged_filter(p)
    complete = ew_spectrum_long_time(p, FockProduct(0, 1), filter_config)
    assert sup_norm_deviation(ew_spectrum_closed_01(p, filter_config), complete) < tolerance


def test_trapezoid_matches_separable_quadrature(resonant):
    p = resonant(0.35)
    filter_config = FilterConfig(gamma=0.25, t_obs=40.0, omega_grid=np.linspace(0.0, 2.0, 201))
    exact = ew_spectrum_quadrature(p, FockProduct(1, 0), filter_config)
    trapezoid = ew_spectrum_trapezoid(p, FockProduct(1, 0), filter_config)
    assert trapezoid.metadata["scheme"] == "trapezoid"
    assert sup_norm_deviation(trapezoid, exact) < 1e-2


def test_trapezoid_without_refinement_does_not_converge(resonant):
    filter_config = FilterConfig(gamma=0.25, t_obs=40.0, omega_grid=np.linspace(0.0, 2.0, 201))
    with pytest.raises(QuadratureNotConverged):
        ew_spectrum_trapezoid(resonant(0.35), FockProduct(1, 0), filter_config, max_refinements=0)


def test_window_mean():
    assert window_mean(np.array(0.3j), 2.0, 0.0) == pytest.approx(np.exp(0.6j))
    assert abs(window_mean(np.array(2j * np.pi / 5), 0.0, 5.0)) < 1e-12
    assert window_mean(np.array(1e-6), 0.0, 1.0) == pytest.approx(1 + 5e-7, rel=1e-12)


def test_dispersive_limit_brightest_near_cavity(fine_grid):
    p = DRule.trk().params(1.0, 3.0, 0.35)
    omega_y = polariton_frequencies(p).omega_y
    spectrum = ew_spectrum_quadrature(p, FockProduct(1, 0), averaged_filter(p, fine_grid))
    brightest = fine_grid[np.argmax(spectrum.values)]
    assert brightest == pytest.approx(omega_y, abs=3e-3)
    assert brightest == pytest.approx(1.0, abs=2e-2)


def test_matter_excitation_dark_near_cavity_when_dispersive(fine_grid):
    p = DRule.trk().params(1.0, 5.0, 0.35)
    filter_config = FilterConfig.long_time(GAMMA, fine_grid)
    near_cavity = np.abs(fine_grid - 1.0) < 0.2
    matter = ew_spectrum_long_time(p, FockProduct(0, 1), filter_config).values[near_cavity]
    field = ew_spectrum_long_time(p, FockProduct(1, 0), filter_config).values[near_cavity]
    assert np.max(matter) < 0.05 * np.max(field)


def test_weight_factors():
    h_x, h_y, h_xy = weight_factors(ModelParams.isotropic(1.0, 1.0, 0.2))
    assert (h_x, h_y, h_xy) == pytest.approx((0.25, 0.25, 1.0))
    h_x, h_y, h_xy = weight_factors(DRule.trk().params(1.0, 1.0, 0.35))
    assert h_x > h_y
    assert np.sqrt(h_x) + np.sqrt(h_y) == pytest.approx(1.0)


def test_doublet_asymmetry_grows_with_coupling(resonant, fine_grid):
    results = {}
    for g in (0.1, 0.35, 1.0):
        p = resonant(g)
        results[g] = vrs_analysis(ew_spectrum_closed_10(p, FilterConfig.long_time(GAMMA, fine_grid)))
    assert 1 < results[0.1].asymmetry_ratio < results[0.35].asymmetry_ratio < results[1.0].asymmetry_ratio
    assert not results[0.35].single_dominant
    assert results[1.0].single_dominant
    assert not results[1.0].single_peak


def test_doublet_sits_on_polaritons(resonant, fine_grid):
    p = resonant(0.35)
    spectrum = polariton_frequencies(p)
    vrs = vrs_analysis(ew_spectrum_quadrature(p, FockProduct(1, 0), averaged_filter(p, fine_grid)))
    assert vrs.peak_positions == pytest.approx((spectrum.omega_y, spectrum.omega_x), abs=2e-3)
    assert vrs.splitting == pytest.approx(spectrum.omega_x - spectrum.omega_y, abs=4e-3)


def test_matter_excitation_doublet_is_more_symmetric(resonant, fine_grid):
    filter_config = FilterConfig.long_time(GAMMA, fine_grid)
    field = ew_spectrum_closed_10(resonant(0.35), filter_config).components
    matter = ew_spectrum_closed_01(resonant(0.35), filter_config).components
    assert abs(np.log(matter[0].weight / matter[1].weight)) < abs(np.log(field[0].weight / field[1].weight))


def test_matter_excitation_vanishes_without_coupling(fine_grid):
    p = ModelParams.isotropic(1.0, 2.0, 1e-3)
    assert ew_spectrum_closed_01(p, FilterConfig.long_time(GAMMA, fine_grid)).peak < 1e-3 * 2 / GAMMA


def test_rwa_doublet_is_symmetric(resonant, fine_grid):
    p = resonant(0.35, DRule.rwa())
    spectrum = compute_spectrum(p, FockProduct(1, 0), FilterConfig.long_time(GAMMA, fine_grid), Method.RWA)
    vrs = vrs_analysis(spectrum)
    assert vrs.asymmetry_ratio == pytest.approx(1.0, abs=1e-6)
    assert vrs.splitting == pytest.approx(0.7, abs=1e-3)
    assert vrs.peak_positions == pytest.approx((0.65, 1.35), abs=1e-3)


def test_rwa_weights(resonant, fine_grid):
    assert rwa_weight(resonant(0.35, DRule.rwa()), GAMMA) == pytest.approx(GAMMA)
    assert rwa_weight(resonant(0.0, DRule.rwa()), GAMMA) == GAMMA
    assert rwa_weight(ModelParams(1.0, 3.0, 0.01, 0.0), GAMMA) < 1e-3 * GAMMA

    filter_config = FilterConfig.long_time(GAMMA, fine_grid)
    printed = ew_spectrum_rwa(resonant(0.35, DRule.rwa()), filter_config)
    exact = ew_spectrum_rwa_exact(resonant(0.35, DRule.rwa()), filter_config)
    assert exact.values == pytest.approx(printed.values, rel=1e-12)


def test_single_peak_without_coupling(resonant, fine_grid):
    vrs = vrs_analysis(ew_spectrum_closed_10(resonant(0.0), FilterConfig.long_time(GAMMA, fine_grid)))
    assert vrs.single_peak
    assert vrs.peak_positions == pytest.approx((1.0,), abs=1e-6)
    assert np.isnan(vrs.splitting)


def test_coarse_grid_is_rejected(resonant):
    spectrum = ew_spectrum_closed_10(resonant(0.35), FilterConfig.long_time(GAMMA, np.linspace(0.0, 3.0, 31)))
    with pytest.raises(GridTooCoarse):
        vrs_analysis(spectrum)


def test_deep_strong_coupling_center(resonant):
    p = resonant(3.0)
    spectrum = dsc_limit_spectrum(p, FilterConfig.long_time(GAMMA, np.linspace(5.5, 6.5, 1001)))
    assert spectrum.components[0].center == pytest.approx(6.0)


def test_deep_strong_coupling_approaches_closed_form(resonant):
    offsets, deviations, ratios = [], [], []
    for g in (2.0, 4.0, 8.0):
        p = resonant(g)
        center = 2 * g
        filter_config = FilterConfig.long_time(GAMMA, np.linspace(center - 0.5, center + 0.5, 1001))
        limit, closed = dsc_limit_spectrum(p, filter_config), ew_spectrum_closed_10(p, filter_config)
        offsets.append(abs(limit.components[0].center - closed.components[0].center))
        deviations.append(sup_norm_deviation(limit, closed))
        ratios.append(limit.components[0].numerator / closed.components[0].numerator)
    assert offsets[0] > offsets[1] > offsets[2]
    assert deviations[0] > deviations[1] > deviations[2]
    assert abs(ratios[0] - 1) > abs(ratios[1] - 1) > abs(ratios[2] - 1)


def test_closed_forms_need_normal_isotropic_phase(fine_grid):
    filter_config = FilterConfig.long_time(GAMMA, fine_grid)
    with pytest.raises(CriticalPhase):
        ew_spectrum_closed_10(ModelParams.isotropic(1.0, 1.0, 0.5), filter_config)
    with pytest.raises(NotIsotropic):
        ew_spectrum_closed_01(ModelParams(1.0, 1.0, 0.3, 0.2), filter_config)
    with pytest.raises(CriticalPhase):
        ew_spectrum_quadrature(ModelParams.isotropic(1.0, 1.0, 0.5), FockProduct(1, 0), filter_config)


def test_compute_spectrum_dispatch(resonant, fine_grid):
    p = resonant(0.35)
    filter_config = FilterConfig.long_time(GAMMA, fine_grid)
    assert compute_spectrum(p, FockProduct(1, 0), filter_config, Method.ClosedForm).metadata["form"] == "printed"
    assert compute_spectrum(p, FockProduct(2, 0), filter_config, Method.ClosedForm).metadata["form"] == "complete"
    assert compute_spectrum(p, FockProduct(1, 0), filter_config, Method.DSCLimit).method == Method.DSCLimit


def test_scaled_dispersion_between_trk_and_zero():
    omega_b = np.linspace(0.6, 3.0, 25)
    trk = dispersion_curves(omega_b, 0.35, DRule.trk())
    half = dispersion_curves(omega_b, 0.35, DRule.scaled(0.5))
    zero = dispersion_curves(omega_b, 0.35, DRule.zero())
    for branch in (0, 1):
        assert np.all(zero[branch] <= half[branch]) and np.all(half[branch] <= trk[branch])


def test_dispersion_map():
    omega_b = np.array([0.8, 1.0, 1.2])
    grid = np.linspace(0.0, 3.0, 601)
    dispersion = polariton_dispersion_map(omega_b, 0.35, FilterConfig.long_time(GAMMA, grid), DRule.trk(),
                                          overlay_rules=(DRule.zero(), DRule.rwa()), method=Method.ClosedForm)
    assert dispersion.values.shape == (3, 601)
    assert set(dispersion.overlays) == {"trk", "zero", "rwa"}
    omega_x, omega_y = dispersion.overlays["trk"]
    for brightest, upper, lower in zip(dispersion.brightest_frequencies(), omega_x, omega_y):
        assert min(abs(brightest - upper), abs(brightest - lower)) < 1e-2


def test_filter_validation():
    with pytest.raises(InvalidParameters) as error:
        FilterConfig(gamma=-1.0)
    assert error.value.exit_code == 3
    with pytest.raises(InvalidParameters):
        FilterConfig(gamma=0.0)
    with pytest.raises(InvalidParameters):
        FilterConfig(omega_grid=np.array([0.0, 1.0, 0.5]))
    assert FilterConfig.long_time(GAMMA, beat=0.5).t_average == pytest.approx(8 * np.pi)


def test_precomputed_coefficients_are_reused(resonant, fine_grid):
    p = resonant(0.35)
    mu = mu_coefficients(p)
    filter_config = averaged_filter(p, fine_grid)
    direct = ew_spectrum_quadrature(p, FockProduct(1, 0), filter_config)
    reused = ew_spectrum_quadrature(p, FockProduct(1, 0), filter_config, mu)
    assert reused.values == pytest.approx(direct.values)
