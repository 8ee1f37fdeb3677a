"""Equivariant K-polynomials of type A quiver orbit closures."""

from .core import OrbitSpec, QuiverA, QuiverError, coordinate_weight, dim_of_orbitspec, euler_form
from .grothendieck import groth_of_diagram, groth_partial_nw, groth_partial_se
from .kpoly import codimension, component_formula, lowest_form
from .lacing import LacingDiagram, diagrams_in_orbit, k_theoretic_diagrams, minimal_diagrams
from .laurent import LaurentPoly
from .poset import closure_leq, moebius_signs, rank_profile

__all__ = [
    "LacingDiagram", "LaurentPoly", "OrbitSpec", "QuiverA", "QuiverError", "closure_leq",
    "codimension", "component_formula", "coordinate_weight", "diagrams_in_orbit",
    "dim_of_orbitspec", "euler_form", "groth_of_diagram", "groth_partial_nw",
    "groth_partial_se", "k_theoretic_diagrams", "lowest_form", "minimal_diagrams",
    "moebius_signs", "rank_profile",
]
__version__ = "0.1.0"
