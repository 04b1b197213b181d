"""Construction and verification of additive and non-additive stabiliser codes
via finite projective geometry: quantum sets of lines, projections from point
pairs, compatibility-graph clique search, and a dense numeric oracle."""

from .fields import FpMatrix, FpVector, PrimeModulus
from .geometry import ProjLine, ProjPoint, ProjSubspace
from .lines import AtLeast, QuantumLineSet
from .pauli import PauliOperator, StabiliserGroup, SymplecticVector
from .search import CodeReport, CodingSet, CompatibilityGraph, LabelledGraph

__all__ = [
    "AtLeast",
    "CodeReport",
    "CodingSet",
    "CompatibilityGraph",
    "FpMatrix",
    "FpVector",
    "LabelledGraph",
    "PauliOperator",
    "PrimeModulus",
    "ProjLine",
    "ProjPoint",
    "ProjSubspace",
    "QuantumLineSet",
    "StabiliserGroup",
    "SymplecticVector",
]

__version__ = "0.1.0"
