from .equilibrium import (
    POLE_TOLERANCE, Branch, ModeThermo, ThermoPoint, QFIMap, mode_thermo, mode_qfi, partition_function,
    thermo_from_frequencies, thermo_point, temperature_uncertainty, relative_error_bound, qfi_map)
from .critical import (
    SNRCurve, continued_argument, qfi_critical_d0, pole_loci, locate_poles, snr_curve,
    dicke_equilibrium_critical_coupling)
__all__ = [
    "POLE_TOLERANCE", "Branch", "ModeThermo", "ThermoPoint", "QFIMap", "mode_thermo", "mode_qfi",
    "partition_function", "thermo_from_frequencies", "thermo_point", "temperature_uncertainty",
    "relative_error_bound", "qfi_map",
    "SNRCurve", "continued_argument", "qfi_critical_d0", "pole_loci", "locate_poles", "snr_curve",
    "dicke_equilibrium_critical_coupling",
]
