"""
Exceptions raised by the Hopfield Library
Every exception carries the exit code the command line interface reports for it.
"""


class HopfieldError(Exception):
    """
    Base Class of all Library Errors
    """
    exit_code = 3


class InvalidParameters(HopfieldError, ValueError):
    """
    Model Parameters outside their Domain
    """


class InvalidSqueezing(HopfieldError, ValueError):
    """
    |lambda2| >= 1, the Squeezing Transformation does not exist
    """


class UnstablePhase(HopfieldError, ArithmeticError):
    """
    Lower Polariton Frequency squared is negative
    """


class CriticalPhase(HopfieldError, ArithmeticError):
    """
    Lower Polariton Frequency is zero
    """


class NotIsotropic(HopfieldError, ValueError):
    """
    Operation requires g1 = g2
    """


class QuadratureNotConverged(HopfieldError, ArithmeticError):
    """
    Successive Quadrature Refinements differ by more than the Tolerance
    """


class GridTooCoarse(HopfieldError, ValueError):
    """
    Frequency Grid does not resolve the Filter Width
    """


class PoleAt(HopfieldError, ArithmeticError):
    """
    Evaluation Point lies on a Pole of the continued QFI
    """

    def __init__(self, message: str, order: int):
        super().__init__(message)
        self.order = order


class CutoffTooLarge(HopfieldError, MemoryError):
    """
    Truncated Fock Space exceeds the Dimension Budget
    """


class TailNotConverged(HopfieldError, ArithmeticError):
    """
    Truncated Ladder Sum misses more than the allowed Weight
    """


class EigensolverFailure(HopfieldError, ArithmeticError):
    """
    Dense Eigensolver did not converge
    """


class ConfigError(HopfieldError, ValueError):
    """
    Invalid Command Line or Preset Configuration
    """
    exit_code = 2


class ValidationFailure(HopfieldError, AssertionError):
    """
    Closed Form and Oracle disagree beyond the Tolerance
    """
    exit_code = 4
