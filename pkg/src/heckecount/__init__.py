"""
Exact arithmetic in the Hecke algebra of S_kappa over Z[hbar].

Two multiplication backends are provided: ``algebra.mul`` (the standard-basis
generator rule) and ``moduli.geometric_product`` (assembly from curve counts).
``crosscheck`` compares them.
"""
from .algebra import HeckeElement, basis, mul, structure_constants
from .hbar import HbarPoly
from .moduli import curve_count, geometric_product, supported_left_factors
from .perm import Permutation

__all__ = [
    "HeckeElement", "HbarPoly", "Permutation", "basis", "mul",
    "structure_constants", "curve_count", "geometric_product",
    "supported_left_factors",
]
__version__ = "0.1.0"
