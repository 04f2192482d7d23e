"""spardisc: exact sparse discriminants of lattice configurations.

A-discriminants, mixed discriminants via the Cayley construction, iterated
(Schlaefli-style) discriminants, exact divisibility/factor checks, and the
closed-form degree arithmetic, all over arbitrary-precision integers.
"""

__version__ = "0.1.0"

from .exactpoly import DivisionFailure, PencilForm, SparsePoly, VarTable
from .lattice import CayleyConfig, LatticeConfig, Polygon, cayley

__all__ = [
    "__version__",
    "VarTable",
    "SparsePoly",
    "PencilForm",
    "DivisionFailure",
    "LatticeConfig",
    "Polygon",
    "CayleyConfig",
    "cayley",
]
