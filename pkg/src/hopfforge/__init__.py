"""Exact computation in finitely presented pointed Hopf algebras."""
from .errors import HopfForgeError
from .freealg import NcPoly
from .hopf import HopfAlgebra, hopf_axiom_report
from .presets import build

__all__ = ["HopfForgeError", "HopfAlgebra", "NcPoly", "build", "hopf_axiom_report"]
__version__ = "0.1.0"
