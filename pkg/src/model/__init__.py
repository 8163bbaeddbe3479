from .params import ModelParams, DerivedQuantities, derived_quantities, DRule, DRuleKind
from .polaritons import (
    Phase, PolaritonSpectrum, CRITICAL_TOLERANCE, classify_phase, polariton_frequencies, isotropic_frequencies,
    rwa_frequencies, energy_level, ladder, ground_state_energy, critical_diamagnetic, critical_coupling)
from .units import GHz, mK, frequency_in_hz, temperature_in_kelvin, temperature_from_kelvin
__all__ = [
    "ModelParams", "DerivedQuantities", "derived_quantities", "DRule", "DRuleKind",
    "Phase", "PolaritonSpectrum", "CRITICAL_TOLERANCE", "classify_phase", "polariton_frequencies",
    "isotropic_frequencies", "rwa_frequencies", "energy_level", "ladder", "ground_state_energy",
    "critical_diamagnetic", "critical_coupling",
    "GHz", "mK", "frequency_in_hz", "temperature_in_kelvin",
    "temperature_from_kelvin",
]
