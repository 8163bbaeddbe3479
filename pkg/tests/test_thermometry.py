import numpy as np
import pytest
from hypothesis import given, settings

from src.errors import CriticalPhase, InvalidParameters, PoleAt, UnstablePhase
from src.model import DRule, ModelParams, polariton_frequencies
from src.thermometry import (
    Branch, mode_thermo, mode_qfi, partition_function, thermo_from_frequencies, thermo_point,
    temperature_uncertainty, relative_error_bound, qfi_map, qfi_critical_d0, pole_loci, locate_poles, snr_curve,
    dicke_equilibrium_critical_coupling)
from tests.strategies import temperatures, trk_params


def test_ground_state_dominates_at_low_temperature():
    T = 0.05
    assert thermo_from_frequencies(1.0, 1.0, T).Z == pytest.approx(np.exp(-1 / T), rel=1e-6)


def test_classical_mode():
    assert mode_thermo(1.0, 100.0).Z == pytest.approx(100.0, rel=1e-4)


def test_equipartition(resonant):
    T = 100.0
    point = thermo_point(resonant(0.3), T)
    assert point.C == pytest.approx(2.0, rel=1e-3)
    assert point.qfi == pytest.approx(2 / T ** 2, rel=1e-3)
    assert point.branch_flags == (Branch.Hyperbolic, Branch.Hyperbolic)


@given(trk_params(), temperatures)
@settings(max_examples=200, deadline=None)
def test_fisher_information_is_heat_capacity(p, T):
    spectrum = polariton_frequencies(p)
    point = thermo_point(p, T)
    printed = mode_qfi(spectrum.omega_x_sq, T) + mode_qfi(spectrum.omega_y_sq, T)
    assert printed * T ** 2 == pytest.approx(point.C, rel=1e-10)
    assert point.snr == pytest.approx(T * np.sqrt(point.qfi))


def test_qfi_grows_with_coupling_at_low_temperature():
    qfi = [thermo_point(DRule.trk().params(1.0, 1.0, g), 0.1).qfi for g in np.linspace(0.0, 2.0, 41)]
    assert np.all(np.diff(qfi) > 0)


def test_heat_capacity_vanishes_for_gapped_probe(resonant):
    assert thermo_point(resonant(0.3), 0.02).C < 1e-10


def test_internal_energy_at_zero_temperature(resonant):
    spectrum = polariton_frequencies(resonant(0.3))
    point = thermo_point(resonant(0.3), 0.01)
    assert point.U == pytest.approx((spectrum.omega_x + spectrum.omega_y) / 2)


def test_thermal_state_needs_normal_phase():
    with pytest.raises(CriticalPhase):
        partition_function(ModelParams.isotropic(1.0, 1.0, 0.5), 0.1)
    with pytest.raises(UnstablePhase):
        thermo_point(ModelParams.isotropic(1.0, 1.0, 0.6), 0.1)
    with pytest.raises(InvalidParameters):
        mode_thermo(1.0, 0.0)


def test_zero_frequency_mode():
    mode = mode_thermo(0.0, 0.2)
    assert mode.Z == np.inf
    assert (mode.U, mode.C) == pytest.approx((0.2, 1.0))
    assert mode_qfi(0.0, 0.2) == pytest.approx(25.0)


def test_trigonometric_branch():
    T = 0.1
    mode = mode_thermo(-1.0, T)
    y = 1 / (2 * T)
    assert mode.branch == Branch.Trigonometric
    assert np.isnan(mode.Z) and np.isnan(mode.U)
    assert mode.C == pytest.approx((y / np.sin(y)) ** 2)
    assert mode_qfi(-1.0, T) == pytest.approx(mode.C / T ** 2)
    assert mode_thermo(-(2 * np.pi * T) ** 2, T).branch == Branch.PoleNearby


def test_anisotropic_probe_is_flagged():
    point = thermo_point(ModelParams(1.0, 1.0, 0.3, 0.2, 0.05), 0.2)
    assert point.metadata["anisotropic"]
    assert point.as_dict()["branch_y"] == "hyperbolic"


def test_cramer_rao_scaling():
    assert temperature_uncertainty(4.0, 4) == pytest.approx(0.5 * temperature_uncertainty(4.0, 1))
    assert relative_error_bound(2.0) == 0.5
    with pytest.raises(InvalidParameters):
        temperature_uncertainty(1.0, 0)


def test_qfi_map():
    g_values, T_values = [0.1, 0.3, 0.6], [0.1, 0.2]
    trk = qfi_map(DRule.trk(), g_values, T_values)
    assert trk.qfi.shape == (2, 3)
    assert np.all(np.isfinite(trk.qfi))
    assert trk.qfi[0, 1] == pytest.approx(thermo_point(DRule.trk().params(1.0, 1.0, 0.3), 0.1).qfi)

    zero = qfi_map(DRule.zero(), g_values, T_values)
    assert np.all(np.isnan(zero.qfi[:, 2]))
    assert np.all(np.isfinite(zero.qfi[:, :2]))


def test_critical_qfi_scales_as_inverse_square_temperature():
    T = 0.05
    qfi = qfi_critical_d0(ModelParams.isotropic(1.0, 1.0, 0.5), T)
    assert qfi * T ** 2 == pytest.approx(1.0, rel=1e-6)


def test_critical_qfi_needs_resonance_without_diamagnetic_term():
    with pytest.raises(InvalidParameters):
        qfi_critical_d0(DRule.trk().params(1.0, 1.0, 0.3), 0.1)
    with pytest.raises(InvalidParameters):
        qfi_critical_d0(ModelParams.isotropic(1.0, 2.0, 0.3), 0.1)


def test_first_pole():
    assert pole_loci(1.0, 0.05, 1)[0] == pytest.approx(0.549348, abs=1e-6)
    poles = locate_poles(1.0, 0.05, 0.0, 0.6)
    assert len(poles) == 1
    order, g = poles[0]
    assert order == 1
    assert g == pytest.approx(0.5 + 2 * (0.05 * np.pi) ** 2, abs=1e-9)


def test_poles_move_outward_with_temperature():
    cold, warm = pole_loci(1.0, 0.05, 3), pole_loci(1.0, 0.1, 3)
    assert np.all(warm > cold)
    assert (warm - 0.5) == pytest.approx(4 * (cold - 0.5))


def test_pole_raises_with_order():
    g = pole_loci(1.0, 0.05, 2)[1]
    with pytest.raises(PoleAt) as error:
        qfi_critical_d0(ModelParams.isotropic(1.0, 1.0, float(g)), 0.05)
    assert error.value.order == 2


def test_continued_qfi_between_poles():
    qfi = qfi_critical_d0(ModelParams.isotropic(1.0, 1.0, 0.52), 0.05)
    assert np.isfinite(qfi) and qfi > 0


def test_snr_vanishes_for_gapped_probe():
    snr = [snr_curve([0.2], T).snr[0] for T in (0.02, 0.05, 0.1)]
    assert snr[0] < snr[1] < snr[2]
    assert snr[0] < 1e-6


def test_snr_curve(caplog):
    g_values = np.concatenate([np.linspace(0.0, 0.8, 81), pole_loci(1.0, 0.05, 1)])
    curve = snr_curve(g_values, 0.05)
    assert np.isnan(curve.snr[-1])
    assert np.all(np.isfinite(curve.snr[:-1]))
    assert [order for order, _ in curve.poles] == [1, 2]
    assert curve.formal_continuation[-1] and not curve.formal_continuation[0]
    assert "formal trigonometric continuation" in caplog.text

    doubled = snr_curve(g_values[:-1], 0.05, measurements=4)
    assert doubled.snr == pytest.approx(2 * curve.snr[:-1])


def test_dicke_critical_coupling():
    assert dicke_equilibrium_critical_coupling(1.0, 1.0, 1e-3) == pytest.approx(0.5)
    assert dicke_equilibrium_critical_coupling(1.0, 1.0, 0.5) == pytest.approx(0.572939, abs=1e-6)
    assert dicke_equilibrium_critical_coupling(1.0, 1.0, 100.0) == pytest.approx(np.sqrt(200) / 2, rel=1e-3)


@pytest.mark.parametrize("T", [1e-3, 2e-3, 5e-3, 1e-2])
def test_critical_qfi_times_square_temperature_is_constant(T):
    qfi = qfi_critical_d0(ModelParams.isotropic(1.0, 1.0, 0.5), T)
    assert qfi * T ** 2 == pytest.approx(1.0, rel=1e-6)


@pytest.mark.parametrize("T", [0.05, 0.1])
def test_pole_ladder(T):
    loci = pole_loci(1.0, T, 6)
    assert loci[:5] == pytest.approx(0.5 + 2 * (T * np.pi * np.arange(1, 6)) ** 2, abs=1e-12)
    poles = locate_poles(1.0, T, 0.0, float(loci[4] + loci[5]) / 2)
    assert [order for order, _ in poles] == [1, 2, 3, 4, 5]
    assert [g for _, g in poles] == pytest.approx(loci[:5], abs=1e-8)
    for order, g in enumerate(loci[:5], start=1):
        with pytest.raises(PoleAt) as error:
            qfi_critical_d0(ModelParams.isotropic(1.0, 1.0, float(g)), T)
        assert error.value.order == order
