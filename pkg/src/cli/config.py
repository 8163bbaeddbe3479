"""
Run Configuration: Defaults, YAML Presets and Command Line Flags, merged in that Order
"""

import os
import logging
import yaml
import numpy as np
from enum import Enum
from dataclasses import dataclass, field, fields, asdict

from src.errors import ConfigError, HopfieldError
from src.model import DRule
from src.spectrum import DEFAULT_GAMMA, DEFAULT_GRID, LONG_TIME, Method
from src.oracle import EIGENVALUE_CUTOFF, MAX_DIMENSION

PRESETS_PATH = os.path.join(os.path.dirname(__file__), "presets.yaml")
SWEEP_VARIABLES = ("g", "g1", "g2", "omega_b", "omega_c", "T", "gamma", "t_obs")
# Couplings may vanish, every other swept Variable must be positive
NON_NEGATIVE = ("g", "g1", "g2")


class Command(Enum):
    Polaritons = "polaritons"
    Levels = "levels"
    Spectrum = "spectrum"
    VRS = "vrs"
    Thermometry = "thermometry"
    Validate = "validate"


# commands whose rows are one-dimensional in the swept Variable
ONE_AXIS_COMMANDS = (Command.Polaritons, Command.Levels)
MAX_AXES = {Command.Polaritons: 1, Command.Levels: 1, Command.Spectrum: 1, Command.VRS: 1, Command.Thermometry: 2,
            Command.Validate: 0}


@dataclass(frozen=True)
class SweepAxis:
    """
    One swept Variable, either start / stop / count with linear or log Spacing or explicit Values
    """
    variable: str
    start: float = 0.0
    stop: float = 1.0
    count: int = 1
    scale: str = "linear"
    values: tuple[float, ...] = ()

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ConfigError(f"Config: Unknown sweep variable '{self.variable}', use one of {SWEEP_VARIABLES}.")
        if not self.values and self.count < 1:
            raise ConfigError(f"Config: Sweep count must be >= 1, got {self.count}.")
        if self.scale not in ("linear", "log"):
            raise ConfigError(f"Config: Sweep scale must be 'linear' or 'log', got '{self.scale}'.")
        if self.scale == "log" and (self.start <= 0 or self.stop <= 0):
            raise ConfigError("Config: Log sweeps need positive start and stop.")

    @classmethod
    def from_value(cls, value) -> "SweepAxis":
        """
        From a YAML Mapping, a [variable, start, stop, count(, scale)] List or a SweepAxis
        """
        if isinstance(value, SweepAxis):
            return value
        if isinstance(value, dict):
            data = dict(value)
            if "values" in data:
                data["values"] = tuple(float(v) for v in data["values"])
            return cls(**data)
        if isinstance(value, (list, tuple)) and len(value) in (4, 5):
            variable, start, stop, count, *scale = value
            return cls(str(variable), float(start), float(stop), int(count), *(str(s) for s in scale))
        raise ConfigError(f"Config: Cannot read sweep axis from {value!r}.")

    def points(self) -> np.ndarray:
        if self.values:
            return np.asarray(self.values, dtype=float)
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, self.count)
        return np.linspace(self.start, self.stop, self.count)

    def as_dict(self) -> dict:
        data = asdict(self)
        data["values"] = list(self.values)
        return data


def _check_domain(variable: str, values: np.ndarray):
    """
    :raises ConfigError: a Value is not finite, negative, or zero for a Variable other than a Coupling
    """
    lowest = float(np.min(values)) if values.size else 0.0
    valid = np.all(np.isfinite(values)) and (lowest >= 0 if variable in NON_NEGATIVE else lowest > 0)
    if not valid:
        kind = "non-negative" if variable in NON_NEGATIVE else "positive"
        raise ConfigError(f"Config: {variable} must be finite and {kind}, got {lowest:g}.")


@dataclass
class RunConfig:
    """
    Everything a Run needs, all Values in Units of omega_c with k_B = hbar = 1
    """
    command: Command = Command.Polaritons
    omega_c: float = 1.0
    omega_b: float = 1.0
    g: float = 0.1
    g1: float | None = None
    g2: float | None = None
    d_rules: tuple[DRule, ...] = (DRule.trk(),)
    overlay_rules: tuple[DRule, ...] = ()
    gamma: float = DEFAULT_GAMMA
    t_obs: float | None = None
    t_average: float = 0.0
    average_beat: bool = True
    omega_grid: tuple[float, float, int] = DEFAULT_GRID
    state: tuple[int, int] = (1, 0)
    method: Method = Method.Quadrature
    temperature: float = 0.1
    thermometry_mode: str = "equilibrium"
    measurements: int = 1
    levels: int = 10
    cutoff: int = EIGENVALUE_CUTOFF
    max_dimension: int = MAX_DIMENSION
    suite: str = "all"
    sweeps: tuple[SweepAxis, ...] = ()
    output: str = os.path.join("data", "run")
    workers: int = 1
    hdf5: bool = False
    cavity_frequency: float | None = None
    preset: str | None = None

    def __post_init__(self):
        if self.workers < 1:
            raise ConfigError(f"Config: Workers must be >= 1, got {self.workers}.")
        if len(self.sweeps) > MAX_AXES[self.command]:
            raise ConfigError(f"Config: '{self.command.value}' takes at most {MAX_AXES[self.command]} sweep axes, "
                              f"got {len(self.sweeps)}.")
        if self.command in ONE_AXIS_COMMANDS and len(self.sweeps) != 1:
            raise ConfigError(f"Config: '{self.command.value}' needs exactly one sweep axis.")
        if len({axis.variable for axis in self.sweeps}) != len(self.sweeps):
            raise ConfigError("Config: Sweep variables must be distinct.")
        if self.thermometry_mode not in ("equilibrium", "critical"):
            raise ConfigError(f"Config: Thermometry mode must be 'equilibrium' or 'critical', "
                              f"got '{self.thermometry_mode}'.")
        if self.state[0] < 0 or self.state[1] < 0:
            raise ConfigError(f"Config: Initial state occupations must be non-negative, got {self.state}.")
        if not self.d_rules:
            raise ConfigError("Config: At least one D-rule is required.")
        self._check_ranges()

    def _check_ranges(self):
        """
        Reject Values outside the Model Domain before any Point is evaluated
        """
        scalars = {"omega_c": self.omega_c, "omega_b": self.omega_b, "g": self.g, "g1": self.g1, "g2": self.g2,
                   "gamma": self.gamma, "t_obs": self.t_obs, "T": self.temperature}
        for name, value in scalars.items():
            if value is not None:
                _check_domain(name, np.array([value], dtype=float))
        for axis in self.sweeps:
            _check_domain(axis.variable, axis.points())
        if not (np.isfinite(self.t_average) and self.t_average >= 0):
            raise ConfigError(f"Config: t_average must be non-negative, got {self.t_average}.")
        start, stop, count = self.omega_grid
        if count < 2 or not stop > start:
            raise ConfigError(f"Config: Frequency grid needs stop > start and count >= 2, got {self.omega_grid}.")
        for name, value, minimum in (("measurements", self.measurements, 1), ("levels", self.levels, 1),
                                     ("cutoff", self.cutoff, 3), ("max_dimension", self.max_dimension, 1)):
            if value < minimum:
                raise ConfigError(f"Config: {name} must be >= {minimum}, got {value}.")

    @property
    def filter_t_obs(self) -> float:
        return self.t_obs if self.t_obs is not None else LONG_TIME / self.gamma

    def settings(self) -> dict:
        """
        Scalar Settings of one Sweep Point before the Sweep overrides them
        """
        return {"omega_c": self.omega_c, "omega_b": self.omega_b, "g": self.g, "g1": self.g1, "g2": self.g2,
                "gamma": self.gamma, "t_obs": self.t_obs, "T": self.temperature}

    def as_dict(self) -> dict:
        """
        JSON-ready Representation
        """
        data = {}
        for item in fields(self):
            value = getattr(self, item.name)
            if isinstance(value, Enum):
                value = value.value
            elif item.name in ("d_rules", "overlay_rules"):
                value = [rule.label for rule in value]
            elif item.name == "sweeps":
                value = [axis.as_dict() for axis in value]
            elif isinstance(value, tuple):
                value = list(value)
            data[item.name] = value
        return data


def _parse_rules(value) -> tuple[DRule, ...]:
    if isinstance(value, DRule):
        return (value,)
    if isinstance(value, str):
        value = value.split(",")
    return tuple(rule if isinstance(rule, DRule) else DRule.parse(str(rule)) for rule in value)


def _enum(enum, value):
    if isinstance(value, enum):
        return value
    try:
        return enum(str(value).lower())
    except ValueError:
        raise ConfigError(f"Config: '{value}' is not one of {[item.value for item in enum]}.")


CONVERTERS = {
    "command": lambda value: _enum(Command, value),
    "method": lambda value: _enum(Method, value),
    "d_rules": _parse_rules,
    "overlay_rules": _parse_rules,
    "sweeps": lambda value: tuple(SweepAxis.from_value(axis) for axis in value),
    "omega_grid": lambda value: (float(value[0]), float(value[1]), int(value[2])),
    "state": lambda value: (int(value[0]), int(value[1])),
}


def load_presets(path: str = PRESETS_PATH) -> dict:
    """
    Read a YAML File of Preset Mappings
    :raises ConfigError: File missing or not a Mapping
    """
    try:
        with open(path, 'r') as file:
            presets = yaml.load(file, Loader=yaml.FullLoader)
    except (OSError, yaml.YAMLError) as error:
        raise ConfigError(f"Config: Cannot read presets from '{path}': {error}")
    if not isinstance(presets, dict):
        raise ConfigError(f"Config: '{path}' must contain a mapping of preset names.")
    return presets


def build_config(overrides: dict, preset: str | None = None, config_file: str | None = None) -> RunConfig:
    """
    Merge Preset, Config File and explicit Overrides into a RunConfig
    :param dict overrides: Values set explicitly, None Values are ignored
    :param str preset: Name of a shipped Preset
    :param str config_file: YAML File with the same Schema, takes its first Preset or a plain Mapping
    :return RunConfig:
    :raises ConfigError:
    """
    values: dict = {}
    if preset is not None:
        presets = load_presets()
        if preset not in presets:
            raise ConfigError(f"Config: Unknown preset '{preset}', available: {sorted(presets)}.")
        values.update(presets[preset])
        values["preset"] = preset
    if config_file is not None:
        loaded = load_presets(config_file)
        if "command" not in loaded:
            loaded = next(iter(loaded.values()))
        values.update(loaded)
    values.update({key: value for key, value in overrides.items() if value is not None})

    known = {item.name for item in fields(RunConfig)}
    unknown = set(values) - known
    if unknown:
        raise ConfigError(f"Config: Unknown keys {sorted(unknown)}.")
    try:
        converted = {key: CONVERTERS[key](value) if key in CONVERTERS else value for key, value in values.items()}
        config = RunConfig(**converted)
    except HopfieldError as error:
        if isinstance(error, ConfigError):
            raise
        raise ConfigError(f"Config: {error}") from error
    except (TypeError, ValueError, IndexError) as error:
        raise ConfigError(f"Config: Invalid configuration: {error}") from error
    logging.debug(f"Config: {config.as_dict()}")
    return config
