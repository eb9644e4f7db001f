"""Exact computations of curvature spaces, weak curvature spaces and Tanaka prolongations."""

from .exactlin import Field, GaussRat, Matrix, Subspace, nullspace, rref, solve
from .liealg import LieAlgebra, Representation
from .catalog import resolve

__version__ = "0.1.0"

__all__ = [
    "Field",
    "GaussRat",
    "Matrix",
    "Subspace",
    "nullspace",
    "rref",
    "solve",
    "LieAlgebra",
    "Representation",
    "resolve",
    "__version__",
]
