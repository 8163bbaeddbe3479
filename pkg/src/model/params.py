import logging
import numpy as np
from enum import Enum
from dataclasses import dataclass

from src.errors import InvalidParameters, InvalidSqueezing


@dataclass(frozen=True)
class ModelParams:
    """
    Parameters of the anisotropic Hopfield Hamiltonian in natural Units (hbar = k_B = 1)
    :param float omega_c: Field Mode Frequency
    :param float omega_b: Matter Mode Frequency
    :param float g1: Corotating Coupling
    :param float g2: Counterrotating Coupling
    :param float D: Diamagnetic Strength
    """
    omega_c: float
    omega_b: float
    g1: float
    g2: float
    D: float = 0.0

    def __post_init__(self):
        for name in ("omega_c", "omega_b", "g1", "g2", "D"):
            if not np.isfinite(getattr(self, name)):
                raise InvalidParameters(f"Model: {name} = {getattr(self, name)} is not finite.")
        if self.omega_c <= 0 or self.omega_b <= 0:
            raise InvalidParameters(
                f"Model: Frequencies must be positive, got omega_c = {self.omega_c}, omega_b = {self.omega_b}.")
        if self.g1 < 0 or self.g2 < 0:
            raise InvalidParameters(f"Model: Couplings must be non-negative, got g1 = {self.g1}, g2 = {self.g2}.")
        if self.D < 0:
            raise InvalidParameters(f"Model: Diamagnetic Strength must be non-negative, got D = {self.D}.")

    @classmethod
    def isotropic(cls, omega_c: float, omega_b: float, g: float, D: float = 0.0) -> "ModelParams":
        """
        Parameters with g1 = g2 = g
        """
        return cls(omega_c=omega_c, omega_b=omega_b, g1=g, g2=g, D=D)

    @property
    def lambda2(self) -> float:
        return (self.g1 - self.g2) / np.sqrt(self.omega_c * self.omega_b)

    @property
    def squeezing_valid(self) -> bool:
        """
        |lambda2| < 1, otherwise the squeezed Oscillators have negative Masses
        """
        return bool(abs(self.lambda2) < 1)

    @property
    def is_isotropic(self) -> bool:
        return bool(np.isclose(self.g1, self.g2, rtol=1e-12, atol=1e-15))

    def as_dict(self) -> dict:
        return {"omega_c": self.omega_c, "omega_b": self.omega_b, "g1": self.g1, "g2": self.g2, "D": self.D}


@dataclass(frozen=True)
class DerivedQuantities:
    """
    Intermediate Quantities of the Diagonalization Chain (T, R, S, R_theta)
    """
    Omega_x_sq: float
    Omega_y_sq: float
    lambda1: float
    lambda2: float
    w1_sq: float
    w2_sq: float
    lambda_tilde: float
    lambda_coupling: float
    theta: float
    r1: float
    r2: float


def derived_quantities(p: ModelParams) -> DerivedQuantities:
    """
    Quadrature Frame, squeezed Frame and Rotation Angle of the Diagonalization
    :param ModelParams p: Model Parameters
    :return DerivedQuantities:
    :raises InvalidSqueezing: |lambda2| >= 1
    """
    if not p.squeezing_valid:
        raise InvalidSqueezing(
            f"Model: |lambda2| = {abs(p.lambda2):.6g} must be < 1 for the squeezing transformation.")

    Omega_x_sq = p.omega_c ** 2 + 4 * p.D * p.omega_c
    Omega_y_sq = p.omega_b ** 2
    lambda1 = (p.g1 + p.g2) * np.sqrt(p.omega_c * p.omega_b)
    lambda2 = p.lambda2

    w1_sq = (1 + lambda2) * (Omega_x_sq + Omega_y_sq + 2 * lambda1) / 2
    w2_sq = (1 - lambda2) * (Omega_x_sq + Omega_y_sq - 2 * lambda1) / 2
    lambda_tilde = (Omega_x_sq - Omega_y_sq) / 2
    lambda_coupling = np.sqrt(1 - lambda2 ** 2) * (Omega_y_sq - Omega_x_sq) / 2

    # theta -> pi/4 for degenerate squeezed Frequencies
    if np.isclose(w1_sq, w2_sq, rtol=1e-14, atol=0.0):
        theta = np.pi / 4
    else:
        theta = 0.5 * np.arctan(2 * lambda_coupling / (w1_sq - w2_sq))

    return DerivedQuantities(
        Omega_x_sq=Omega_x_sq, Omega_y_sq=Omega_y_sq, lambda1=lambda1, lambda2=lambda2,
        w1_sq=w1_sq, w2_sq=w2_sq, lambda_tilde=lambda_tilde, lambda_coupling=lambda_coupling,
        theta=theta, r1=np.log(np.sqrt(1 + lambda2)), r2=np.log(np.sqrt(1 - lambda2)))


class DRuleKind(Enum):
    """
    Choice of the Diamagnetic Strength
    """
    TRK = "trk"
    Scaled = "scaled"
    Zero = "zero"
    RWA = "rwa"
    Explicit = "explicit"


@dataclass(frozen=True)
class DRule:
    """
    Rule that fixes D (and for RWA also g2) from the Coupling g
    """
    kind: DRuleKind = DRuleKind.TRK
    value: float = 1.0

    @classmethod
    def trk(cls) -> "DRule":
        return cls(DRuleKind.TRK)

    @classmethod
    def scaled(cls, d: float) -> "DRule":
        if not 0 <= d <= 1:
            raise InvalidParameters(f"Model: Scaled D-Rule needs 0 <= d <= 1, got d = {d}.")
        return cls(DRuleKind.Scaled, d)

    @classmethod
    def zero(cls) -> "DRule":
        return cls(DRuleKind.Zero, 0.0)

    @classmethod
    def rwa(cls) -> "DRule":
        return cls(DRuleKind.RWA, 0.0)

    @classmethod
    def explicit(cls, D: float) -> "DRule":
        return cls(DRuleKind.Explicit, D)

    @classmethod
    def parse(cls, text: str) -> "DRule":
        """
        Parse 'trk', 'zero', 'rwa', 'scaled:0.5' or 'explicit:0.09'
        """
        name, _, argument = text.strip().lower().partition(':')
        try:
            kind = DRuleKind(name)
        except ValueError:
            raise InvalidParameters(f"Model: Unknown D-Rule '{text}'.")
        if kind in (DRuleKind.Scaled, DRuleKind.Explicit):
            if not argument:
                raise InvalidParameters(f"Model: D-Rule '{name}' needs a value, e.g. '{name}:0.5'.")
            return cls.scaled(float(argument)) if kind == DRuleKind.Scaled else cls.explicit(float(argument))
        return cls(kind, 1.0 if kind == DRuleKind.TRK else 0.0)

    @property
    def label(self) -> str:
        if self.kind in (DRuleKind.Scaled, DRuleKind.Explicit):
            return f"{self.kind.value}:{self.value:g}"
        return self.kind.value

    def diamagnetic(self, g: float, omega_b: float) -> float:
        if self.kind == DRuleKind.TRK:
            return g ** 2 / omega_b
        if self.kind == DRuleKind.Scaled:
            return self.value * g ** 2 / omega_b
        if self.kind == DRuleKind.Explicit:
            return self.value
        return 0.0

    def params(self, omega_c: float, omega_b: float, g: float) -> ModelParams:
        """
        Model Parameters for Coupling g under this Rule
        """
        if self.kind == DRuleKind.RWA:
            return ModelParams(omega_c=omega_c, omega_b=omega_b, g1=g, g2=0.0, D=0.0)
        D = self.diamagnetic(g, omega_b)
        logging.debug(f"Model: D-Rule '{self.label}' gives D = {D} at g = {g}.")
        return ModelParams.isotropic(omega_c, omega_b, g, D)
