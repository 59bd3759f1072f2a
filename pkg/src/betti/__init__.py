# Betti module - Invariants homologiques des idéaux monomiaux
from .tables import BettiPoset, BettiTable, HomologicalSummary
from .invariants import (
    ShapeMismatch,
    betti_poset,
    betti_table,
    hilbert_shape_difference,
    homological_summary,
    lattice_betti_elements,
    lattice_homology,
)
from .taylor import TooManyGenerators, format_polynomial, hilbert_numerator, scarf_complex, taylor_betti_oracle

__all__ = [
    "BettiPoset", "BettiTable", "HomologicalSummary",
    "ShapeMismatch", "betti_poset", "betti_table", "hilbert_shape_difference",
    "homological_summary", "lattice_betti_elements", "lattice_homology",
    "TooManyGenerators", "format_polynomial", "hilbert_numerator", "scarf_complex",
    "taylor_betti_oracle",
]
