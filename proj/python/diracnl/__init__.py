"""Non-locality of energy-separating transformations of the free Dirac equation.

Natural units throughout: hbar = m = c = 1, so lengths are Compton
wavelengths, momenta are in units of mc and energies in mc^2.
"""

from ._diracnl import *  # noqa: F401,F403
