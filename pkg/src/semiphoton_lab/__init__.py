"""Numerical checks of an electromagnetic model of leptons.

Submodules:

constants
    CODATA 2018 defaults, JSON loading and validation.
dirac
    Dirac-Pauli basis and momentum-space Dirac operators.
fields
    Electromagnetic form of the Dirac equation and its trig solutions.
ring
    Displacement current and net charge of waves spun on a circle.
electron_model
    Torus electron model and the consistency audit of its formulas.
kernels
    numba / numpy kernels (``SEMIPHOTON_DISABLE_NUMBA=1`` forces numpy).
"""

__version__ = "0.1.0"

from semiphoton_lab.constants import PhysicalConstants, codata_2018, load_constants, natural_units

__all__ = ["PhysicalConstants", "codata_2018", "load_constants", "natural_units", "__version__"]
