# Homology module - Homologie simpliciale exacte
from .fields import FieldSpec, GF2, RATIONALS
from .chains import (
    ChainComplexData,
    boundary_matrices,
    chain_homology_ranks,
    is_acyclic,
    matrix_rank,
    reduced_homology_ranks,
)

__all__ = [
    "FieldSpec", "GF2", "RATIONALS",
    "ChainComplexData", "boundary_matrices", "chain_homology_ranks",
    "is_acyclic", "matrix_rank", "reduced_homology_ranks",
]
