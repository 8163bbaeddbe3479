import numpy as np
from enum import Enum
from dataclasses import dataclass, field

from src.errors import InvalidParameters
from src.model import ModelParams

DEFAULT_GAMMA = 0.05
DEFAULT_GRID = (0.0, 3.0, 3000)
LONG_TIME = 10.0    # Gamma * t_obs treated as long time


class Method(Enum):
    """
    How a Spectrum was obtained
    """
    Quadrature = "quadrature"
    ClosedForm = "closed_form"
    RWA = "rwa"
    DSCLimit = "dsc_limit"


@dataclass(frozen=True, eq=False)
class FilterConfig:
    """
    Fabry-Perot Filter in front of the Detector
    :param float gamma: Filter Half-Width
    :param float t_obs: Observation Time of the finite-time Spectrum
    :param omega_grid: strictly increasing Frequency Samples
    :param float t_average: Length of the Window [t_obs, t_obs + t_average] the Spectrum is averaged over
    """
    gamma: float = DEFAULT_GAMMA
    t_obs: float = LONG_TIME / DEFAULT_GAMMA
    omega_grid: np.ndarray = field(default_factory=lambda: np.linspace(*DEFAULT_GRID))
    t_average: float = 0.0

    def __post_init__(self):
        grid = np.asarray(self.omega_grid, dtype=float)
        object.__setattr__(self, "omega_grid", grid)
        if self.gamma <= 0:
            raise InvalidParameters(f"Spectrum: Filter Width must be positive, got gamma = {self.gamma}.")
        if self.t_obs <= 0:
            raise InvalidParameters(f"Spectrum: Observation Time must be positive, got t_obs = {self.t_obs}.")
        if self.t_average < 0:
            raise InvalidParameters(f"Spectrum: Averaging Window must be non-negative, got {self.t_average}.")
        if grid.ndim != 1 or grid.size == 0 or np.any(np.diff(grid) <= 0):
            raise InvalidParameters("Spectrum: Frequency Grid must be a non-empty, strictly increasing 1d Array.")

    @classmethod
    def long_time(cls, gamma: float = DEFAULT_GAMMA, omega_grid=None, beat: float | None = None,
                  periods: int = 2) -> "FilterConfig":
        """
        Filter at Gamma * t_obs = 10, optionally averaged over whole Periods of the Polariton Beat
        :param float beat: Beat Frequency omega_x - omega_y
        :param int periods: Number of Beat Periods in the Averaging Window
        """
        grid = np.linspace(*DEFAULT_GRID) if omega_grid is None else omega_grid
        t_average = 0.0 if not beat else periods * 2 * np.pi / beat
        return cls(gamma=gamma, t_obs=LONG_TIME / gamma, omega_grid=grid, t_average=t_average)

    @property
    def grid_step(self) -> float:
        if self.omega_grid.size < 2:
            return 0.0
        return float(np.max(np.diff(self.omega_grid)))


@dataclass(frozen=True)
class LorentzianComponent:
    """
    One Line numerator / (gamma^2 + (omega - center)^2)
    :param float center: Line Center
    :param float weight: Printed Weight (Gamma_x, Gamma'_x, ...) of the Line
    :param float numerator: Numerator of the Lorentzian
    :param float height: Value at the Center
    :param str label: Branch Name
    """
    center: float
    weight: float
    numerator: float
    height: float
    label: str = ""

    def evaluate(self, omega: np.ndarray, gamma: float) -> np.ndarray:
        return self.numerator / (gamma ** 2 + (omega - self.center) ** 2)


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    """
    Spectrum S(omega) sampled on a Frequency Grid
    """
    omega: np.ndarray
    values: np.ndarray
    components: tuple[LorentzianComponent, ...]
    method: Method
    gamma: float
    params: ModelParams | None = None
    metadata: dict = field(default_factory=dict)

    @property
    def peak(self) -> float:
        return float(np.max(self.values))


def lorentzian_component(center: float, weight: float, numerator: float, gamma: float,
                         label: str = "") -> LorentzianComponent:
    return LorentzianComponent(center=float(center), weight=float(weight), numerator=float(numerator),
                               height=float(numerator / gamma ** 2), label=label)


def sum_components(omega: np.ndarray, components, gamma: float) -> np.ndarray:
    values = np.zeros_like(omega, dtype=float)
    for component in components:
        values = values + component.evaluate(omega, gamma)
    return values


def sup_norm_deviation(result: SpectrumResult, reference: SpectrumResult) -> float:
    """
    max |S - S_ref| / max S_ref on a common Grid
    """
    if result.omega.shape != reference.omega.shape or not np.allclose(result.omega, reference.omega):
        raise InvalidParameters("Spectrum: Spectra are sampled on different grids.")
    return float(np.max(np.abs(result.values - reference.values)) / np.max(np.abs(reference.values)))
