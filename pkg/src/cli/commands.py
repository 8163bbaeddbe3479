"""
Per-Point Computations of the Command Line Interface
Every Function is pure and picklable, so Sweep Points can run in separate Processes.
A Point returns its CSV Rows and an Annotation for the JSON Sidecar.
"""

import numpy as np

from src.errors import PoleAt
from src.model import (
    ModelParams, DRule, DRuleKind, Phase, polariton_frequencies, rwa_frequencies, ladder, temperature_in_kelvin,
    frequency_in_hz)
from src.dynamics import FockProduct
from src.spectrum import FilterConfig, Method, compute_spectrum, vrs_analysis
from src.thermometry import thermo_point, qfi_critical_d0, temperature_uncertainty
from src.cli.config import Command, RunConfig

# Column Name and Scaling by omega_c of every swept Variable
AXIS_COLUMNS = {
    "g": "g/omega_c", "g1": "g1/omega_c", "g2": "g2/omega_c", "omega_b": "omega_b/omega_c", "omega_c": "omega_c",
    "T": "kT/omega_c", "gamma": "gamma/omega_c", "t_obs": "t_obs*omega_c",
}


def axis_value(variable: str, value: float, omega_c: float) -> float:
    if variable == "omega_c":
        return value
    if variable == "t_obs":
        return value * omega_c
    return value / omega_c


def model_params(settings: dict, rule: DRule) -> ModelParams:
    """
    Parameters of one Point, explicit g1 / g2 override the isotropic g
    """
    omega_c, omega_b = settings["omega_c"], settings["omega_b"]
    if settings.get("g1") is None and settings.get("g2") is None:
        return rule.params(omega_c, omega_b, settings["g"])
    g1 = settings["g1"] if settings.get("g1") is not None else settings["g"]
    g2 = settings["g2"] if settings.get("g2") is not None else g1
    if rule.kind == DRuleKind.RWA:
        return ModelParams(omega_c=omega_c, omega_b=omega_b, g1=g1, g2=0.0, D=0.0)
    return ModelParams(omega_c=omega_c, omega_b=omega_b, g1=g1, g2=g2, D=rule.diamagnetic(g1, omega_b))


def frequencies(p: ModelParams, rule: DRule) -> tuple[float, float, Phase]:
    """
    (omega_x, omega_y, Phase), nan for omega_y in the unstable Phase
    """
    if rule.kind == DRuleKind.RWA:
        omega_x, omega_y = rwa_frequencies(p)
        return omega_x, omega_y, Phase.Normal if omega_y > 0 else Phase.Unstable
    spectrum = polariton_frequencies(p)
    omega_y = np.nan if spectrum.phase == Phase.Unstable else spectrum.omega_y
    return spectrum.omega_x, omega_y, spectrum.phase


def _axis_columns(point: dict, omega_c: float) -> dict:
    return {AXIS_COLUMNS[variable]: axis_value(variable, value, omega_c) for variable, value in point.items()}


def _method(config: RunConfig, rule: DRule) -> Method:
    return Method.RWA if rule.kind == DRuleKind.RWA else config.method


def _filter(config: RunConfig, settings: dict, beat: float) -> FilterConfig:
    grid = np.linspace(*config.omega_grid)
    if settings.get("t_obs") is None:
        return FilterConfig.long_time(settings["gamma"], grid, beat if config.average_beat else None)
    return FilterConfig(gamma=settings["gamma"], t_obs=settings["t_obs"], omega_grid=grid,
                        t_average=config.t_average)


def polaritons_point(config: RunConfig, point: dict, settings: dict) -> tuple[list, dict]:
    rows, annotation = [], {}
    omega_c = settings["omega_c"]
    for rule in config.d_rules:
        omega_x, omega_y, phase = frequencies(model_params(settings, rule), rule)
        rows.append({**_axis_columns(point, omega_c), "d_rule": rule.label, "omega_x/omega_c": omega_x / omega_c,
                     "omega_y/omega_c": omega_y / omega_c, "phase": phase.value})
        annotation[rule.label] = phase.value
    return rows, {"phase": annotation}


def levels_point(config: RunConfig, point: dict, settings: dict) -> tuple[list, dict]:
    rows = []
    omega_c = settings["omega_c"]
    for rule in config.d_rules:
        p = model_params(settings, rule)
        if rule.kind == DRuleKind.RWA:
            omega_x, omega_y = rwa_frequencies(p)
            levels = sorted((omega_x * m + omega_y * n, m, n)
                            for m in range(config.levels) for n in range(config.levels))[:config.levels]
        else:
            levels = ladder(p, config.levels, shifted=True)
        for k, (energy, m, n) in enumerate(levels):
            rows.append({**_axis_columns(point, omega_c), "d_rule": rule.label, "level": k, "m": m, "n": n,
                         "E/omega_c": energy / omega_c})
    return rows, {}


def spectrum_point(config: RunConfig, point: dict, settings: dict) -> tuple[list, dict]:
    rule = config.d_rules[0]
    p = model_params(settings, rule)
    omega_c = settings["omega_c"]
    omega_x, omega_y, phase = frequencies(p, rule)
    result = compute_spectrum(p, FockProduct(*config.state), _filter(config, settings, omega_x - omega_y),
                              _method(config, rule))
    axes = _axis_columns(point, omega_c)
    rows = []
    for omega, value in zip(result.omega, result.values):
        row = {**axes, "omega/omega_c": omega / omega_c, "S": value}
        if config.cavity_frequency is not None:
            row["omega_hz"] = frequency_in_hz(omega, config.cavity_frequency, omega_c)
        rows.append(row)
    overlays = {}
    for overlay in (rule, *config.overlay_rules):
        overlay_x, overlay_y, _ = frequencies(model_params(settings, overlay), overlay)
        overlays[overlay.label] = {"omega_x/omega_c": overlay_x / omega_c, "omega_y/omega_c": overlay_y / omega_c}
    return rows, {"phase": phase.value, "overlays": overlays, "method": result.method.value}


def vrs_point(config: RunConfig, point: dict, settings: dict) -> tuple[list, dict]:
    rule = config.d_rules[0]
    p = model_params(settings, rule)
    omega_x, omega_y, _ = frequencies(p, rule)
    spectrum = compute_spectrum(p, FockProduct(*config.state), _filter(config, settings, omega_x - omega_y),
                                _method(config, rule))
    vrs = vrs_analysis(spectrum)
    omega_c = settings["omega_c"]
    positions = list(vrs.peak_positions) + [np.nan] * (2 - len(vrs.peak_positions))
    heights = list(vrs.peak_heights) + [np.nan] * (2 - len(vrs.peak_heights))
    row = {**_axis_columns(point, omega_c), "d_rule": rule.label,
           "omega_left/omega_c": positions[0] / omega_c, "omega_right/omega_c": positions[1] / omega_c,
           "S_left": heights[0], "S_right": heights[1], "splitting/omega_c": vrs.splitting / omega_c,
           "asymmetry_ratio": vrs.asymmetry_ratio, "single_peak": vrs.single_peak,
           "single_dominant": vrs.single_dominant}
    return [row], {"method": spectrum.method.value, "single_dominant": vrs.single_dominant}


def thermometry_point(config: RunConfig, point: dict, settings: dict) -> tuple[list, dict]:
    T, omega_c = settings["T"], settings["omega_c"]
    axes = _axis_columns(point, omega_c)
    if config.thermometry_mode == "critical":
        g = settings["g"] if settings.get("g1") is None else settings["g1"]
        p = ModelParams.isotropic(omega_c, omega_c, g, 0.0)
        annotation = {"formal_continuation": bool(g > omega_c / 2), "pole": None}
        try:
            qfi = qfi_critical_d0(p, T)
        except PoleAt as error:
            qfi = np.nan
            annotation["pole"] = error.order
        delta_T = temperature_uncertainty(qfi, config.measurements) if np.isfinite(qfi) else np.nan
        row = {**axes, "kT/omega_c": T / omega_c, "qfi": qfi, "snr": T / delta_T, "delta_T": delta_T,
               "formal_continuation": annotation["formal_continuation"]}
    else:
        rule = config.d_rules[0]
        result = thermo_point(model_params(settings, rule), T)
        delta_T = temperature_uncertainty(result.qfi, config.measurements)
        row = {**axes, "kT/omega_c": T / omega_c, "d_rule": rule.label, "Z": result.Z, "U/omega_c": result.U / omega_c,
               "C": result.C, "qfi": result.qfi, "snr": T / delta_T, "delta_T": delta_T}
        annotation = {"branch_x": result.branch_flags[0].value, "branch_y": result.branch_flags[1].value}
    if config.cavity_frequency is not None:
        row["T_kelvin"] = temperature_in_kelvin(T, config.cavity_frequency, omega_c)
    return [row], annotation


POINT_FUNCTIONS = {
    Command.Polaritons: polaritons_point,
    Command.Levels: levels_point,
    Command.Spectrum: spectrum_point,
    Command.VRS: vrs_point,
    Command.Thermometry: thermometry_point,
}


def evaluate_point(config: RunConfig, point: dict) -> tuple[list, dict]:
    """
    Rows and Annotation of one Sweep Point
    :param RunConfig config: Run Configuration
    :param dict point: swept Variable -> Value
    """
    settings = config.settings()
    settings.update(point)
    return POINT_FUNCTIONS[config.command](config, point, settings)
