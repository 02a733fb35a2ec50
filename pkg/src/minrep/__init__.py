"""Exact models of minimal representations built from complex Jordan algebras."""
from .scalar import Scalar
from .poly import LaurentPoly, MultiPoly
from .jordan import AlgebraDescriptor, JordanElement, rank_one, sym
from .fock import ModelParams

__all__ = ["Scalar", "LaurentPoly", "MultiPoly", "AlgebraDescriptor", "JordanElement",
           "rank_one", "sym", "ModelParams"]
__version__ = "0.1.0"
