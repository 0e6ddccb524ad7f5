"""spincalc: Z/rZ spin-structure calculus on surfaces.

Twist linearity, surgery, Arf parity, Thurston-Veech origamis, shadow
curve graphs, and exact finite-symplectic verification of the twist
generation theorems.
"""

from .modring import BaseClass, MismatchError, SpMatrix, SpinError, base_transvection, intersection_form, is_primitive
from .spin import Parity, SpinStructure, arf, enumerate_structures, evaluate, from_vanishing, reduce_structure, twist_stabilizes
from .tangent_lift import LiftedClass, LiftedTransvection, pants_boundary, reverse, surgery_sum, twist_apply, zeta

__version__ = "0.1.0"

__all__ = [
    "BaseClass", "MismatchError", "SpMatrix", "SpinError",
    "base_transvection", "intersection_form", "is_primitive",
    "Parity", "SpinStructure", "arf", "enumerate_structures", "evaluate",
    "from_vanishing", "reduce_structure", "twist_stabilizes",
    "LiftedClass", "LiftedTransvection", "pants_boundary", "reverse",
    "surgery_sum", "twist_apply", "zeta",
    "__version__",
]
