"""Minimal free resolutions and linear truncations over products of projective spaces."""

from .groebner import (
    FreeModule,
    GradedHom,
    ModuleGB,
    groebner_basis,
    minimal_generators,
    normal_form,
    syzygies,
)
from .regions import (
    DegreeBox,
    Region,
    bigraded_sufficiency,
    find_mins,
    find_region,
    linear_truncations,
    linear_truncations_bound,
    region_intersect,
    regularity_bound,
)
from .resolution import (
    BettiTable,
    ChainComplexData,
    betti,
    free_resolution,
    is_linear_complex,
    minimalize,
    partial_regularities,
    support_of_tor,
    total_regularity,
)
from .ring import Polynomial, Ring, irrelevant_ideal, make_ring, monomials_of_multidegree
from .truncation import PresentedModule, has_linear_truncation, truncate

__all__ = [
    "BettiTable", "ChainComplexData", "DegreeBox", "FreeModule", "GradedHom", "ModuleGB",
    "Polynomial", "PresentedModule", "Region", "Ring", "betti", "bigraded_sufficiency",
    "find_mins", "find_region", "free_resolution", "groebner_basis", "has_linear_truncation",
    "irrelevant_ideal", "is_linear_complex", "linear_truncations", "linear_truncations_bound",
    "make_ring", "minimal_generators", "minimalize", "monomials_of_multidegree", "normal_form",
    "partial_regularities", "region_intersect", "regularity_bound", "support_of_tor",
    "syzygies", "total_regularity", "truncate",
]
