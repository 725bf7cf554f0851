"""Nonunitary discrete-time quantum walks: GBZ band theory, Bloch/non-Bloch
spectra, PT-phase classification, lossy dynamics with corrected
probabilities, and exceptional-point location."""

from nhqw._core import *  # noqa: F401,F403
from nhqw._core import __version__  # noqa: F401
