"""Gaussian-type quadrature on the real line and the unit circle from R_II recurrence data."""

from ._r2quad import *  # noqa: F401,F403
from ._r2quad import Error, __doc__  # noqa: F401

__version__ = "0.1.0"
