"""
Exact Solution of the anisotropic Hopfield Model
See README.md for more details.
"""

__version__ = "1.1.0"
