"""Multimode-capacity toolkit for comb-based quantum memories.

Thin Python layer over the C++ core: capacity and efficiency formulas,
Gaussian-mode energy fractions, discrete spectral analysis of truncated
pulse trains, multiplexing budgets, parameter sweeps and the material
registry.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
