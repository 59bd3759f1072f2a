"""
Homologie simpliciale réduite de petits complexes, par calcul exact de rangs
des matrices de bord (ℚ ou F_p, via sympy DomainMatrix; jamais de flottants).
"""

import logging
from dataclasses import dataclass
from typing import Optional

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from src.homology.fields import FieldSpec, RATIONALS
from src.posets.complexes import InvalidComplex, SimplicialComplexData

logger = logging.getLogger("bettilab.homology")

# Matrice creuse par colonnes: colonne -> {ligne: coefficient}
SparseColumns = dict[int, dict[int, int]]


@dataclass(frozen=True, eq=False)
class ChainComplexData:
    """
    Complexe de chaînes de K-espaces de dimension finie.

    `dimensions[i]` est le nombre de générateurs en degré i; `boundaries[i]`
    est ∂_i: C_i → C_{i-1} stockée creuse par colonnes.
    """

    dimensions: dict[int, int]
    boundaries: dict[int, SparseColumns]

    def __post_init__(self):
        for i, columns in self.boundaries.items():
            if i not in self.dimensions or i - 1 not in self.dimensions:
                raise InvalidComplex(f"∂_{i} sans espaces source et but")
            for col, entries in columns.items():
                if not 0 <= col < self.dimensions[i]:
                    raise InvalidComplex(f"Colonne {col} hors de C_{i}")
                if any(not 0 <= row < self.dimensions[i - 1] for row in entries):
                    raise InvalidComplex(f"Ligne hors de C_{i - 1} dans ∂_{i}")
        for i in self.boundaries:
            if i - 1 in self.boundaries and not _composes_to_zero(
                self.boundaries[i - 1], self.boundaries[i]
            ):
                raise InvalidComplex(f"∂_{i - 1} ∘ ∂_{i} ≠ 0")

    def boundary(self, i: int) -> SparseColumns:
        return self.boundaries.get(i, {})


def _composes_to_zero(outer: SparseColumns, inner: SparseColumns) -> bool:
    for entries in inner.values():
        total: dict[int, int] = {}
        for mid, coeff in entries.items():
            for row, value in outer.get(mid, {}).items():
                total[row] = total.get(row, 0) + coeff * value
        if any(total.values()):
            return False
    return True


def matrix_rank(columns: SparseColumns, rows: int, cols: int, field: FieldSpec = RATIONALS) -> int:
    """Rang exact d'une matrice entière creuse sur le corps donné."""
    if rows == 0 or cols == 0:
        return 0
    by_row: dict[int, dict[int, object]] = {}
    for col, entries in columns.items():
        for row, value in entries.items():
            if value:
                by_row.setdefault(row, {})[col] = ZZ(value)
    if not by_row:
        return 0
    matrix = DomainMatrix(by_row, (rows, cols), ZZ).convert_to(field.domain)
    return matrix.rank()


def boundary_matrices(data: SimplicialComplexData) -> ChainComplexData:
    """
    Complexe augmenté (réduit): la face vide engendre le degré −1.
    Signes (−1)^k pour la suppression du k-ième sommet dans l'ordre global.
    """
    by_degree: dict[int, list[tuple[int, ...]]] = {}
    for face in data.faces:
        by_degree.setdefault(len(face) - 1, []).append(face)
    index = {
        d: {face: pos for pos, face in enumerate(faces)}
        for d, faces in by_degree.items()
    }

    boundaries: dict[int, SparseColumns] = {}
    for d, faces in by_degree.items():
        if d < 0:
            continue
        columns: SparseColumns = {}
        for pos, face in enumerate(faces):
            columns[pos] = {
                index[d - 1][face[:k] + face[k + 1:]]: (-1) ** k
                for k in range(len(face))
            }
        boundaries[d] = columns

    dimensions = {d: len(faces) for d, faces in by_degree.items()}
    return ChainComplexData(dimensions, boundaries)


def chain_homology_ranks(chains: ChainComplexData, field: FieldSpec = RATIONALS) -> dict[int, int]:
    """h_i = dim C_i − rang ∂_i − rang ∂_{i+1} pour chaque degré du complexe."""
    ranks = {
        i: matrix_rank(chains.boundary(i), chains.dimensions[i - 1], chains.dimensions[i], field)
        for i in chains.boundaries
    }
    return {
        i: dim - ranks.get(i, 0) - ranks.get(i + 1, 0)
        for i, dim in sorted(chains.dimensions.items())
    }


def reduced_homology_ranks(
    data: SimplicialComplexData, field: Optional[FieldSpec] = None
) -> dict[int, int]:
    """Rangs de l'homologie réduite, degrés −1 à la dimension du complexe."""
    return chain_homology_ranks(boundary_matrices(data), field or RATIONALS)


def is_acyclic(data: SimplicialComplexData, field: Optional[FieldSpec] = None) -> bool:
    """Vrai ssi toute l'homologie réduite s'annule."""
    return not any(reduced_homology_ranks(data, field).values())
