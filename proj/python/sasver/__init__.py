"""Curvature and spectral verification for Sasakian space forms.

Thin wrapper around the compiled extension; see the individual function
docstrings for the available operations.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
