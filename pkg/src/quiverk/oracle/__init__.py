"""Independent checks: Groebner degenerations and Hom/Ext linear algebra."""

from .groebner import ResourceLimitError, groebner_basis, initial_ideal
from .hilbert import kpoly_of_monomial_ideal
from .rank import (CORRESPONDENCE, PRESETS, CoordRing, GradingError, RankCondition,
                   a2_orbit, kpoly_via_groebner, minors_ideal)
from .reps import ExplicitRep, ext_dim, hom_dim, orbit_codim_linear_algebra

__all__ = [
    "CORRESPONDENCE", "PRESETS", "CoordRing", "ExplicitRep", "GradingError",
    "RankCondition", "ResourceLimitError", "a2_orbit", "ext_dim", "groebner_basis",
    "hom_dim", "initial_ideal", "kpoly_of_monomial_ideal", "kpoly_via_groebner",
    "minors_ideal", "orbit_codim_linear_algebra",
]
