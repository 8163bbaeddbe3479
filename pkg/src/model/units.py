"""
Unit Definitions
The library works in natural Units (hbar = k_B = 1) where frequencies are measured relative to omega_c.
These helpers map results back to SI once the physical Cavity Frequency is known.
"""

from scipy import constants

# Frequency in Hz
GHz = 1E9

# Temperature in Kelvin
mK = 1E-3


def frequency_in_hz(omega: float, cavity_frequency: float, omega_c: float = 1.0) -> float:
    """
    Convert a natural Angular Frequency to an ordinary Frequency in Hz
    :param float omega: Angular Frequency in Units where the Cavity has omega_c
    :param float cavity_frequency: Physical Cavity Frequency in Hz
    :param float omega_c: Cavity Frequency in natural Units
    """
    return omega / omega_c * cavity_frequency


def temperature_in_kelvin(T: float, cavity_frequency: float, omega_c: float = 1.0) -> float:
    """
    Convert k_B T / (hbar omega_c) to Kelvin
    :param float T: Temperature in natural Units
    :param float cavity_frequency: Physical Cavity Frequency in Hz
    :param float omega_c: Cavity Frequency in natural Units
    """
    angular_unit = 2 * constants.pi * cavity_frequency / omega_c
    return T * constants.hbar * angular_unit / constants.k


def temperature_from_kelvin(kelvin: float, cavity_frequency: float, omega_c: float = 1.0) -> float:
    """
    Inverse of temperature_in_kelvin
    """
    angular_unit = 2 * constants.pi * cavity_frequency / omega_c
    return kelvin * constants.k / (constants.hbar * angular_unit)
