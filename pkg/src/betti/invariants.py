"""
Nombres de Betti multigradués par la formule du treillis des ppcm:
β_{i,m}(S/I) = h̃_{i−2}((0̂, m); K), puis poset de Betti, pdim/depth et
différence de « forme » de Hilbert entre deux idéaux.
"""

import logging
from typing import Optional

from src.algebra.lcm_lattice import LcmLattice, lcm_lattice
from src.algebra.monomials import Monomial, MonomialIdeal
from src.betti.tables import BettiPoset, BettiTable, HomologicalSummary
from src.homology.chains import reduced_homology_ranks
from src.homology.fields import FieldSpec, RATIONALS
from src.posets.complexes import open_lower_complex
from src.posets.lattice import FiniteLattice
from src.posets.maps import atom_correspondence, extend_atom_map, is_join_preserving

logger = logging.getLogger("bettilab.betti")


class ShapeMismatch(ValueError):
    """Les deux treillis ne se correspondent pas par leurs générateurs."""
    pass


def lattice_homology(lattice: FiniteLattice, field: FieldSpec = RATIONALS) -> dict[int, dict[int, int]]:
    """h̃ de chaque intervalle ouvert (0̂, m), m ≠ 0̂, rangs non nuls seulement."""
    result = {}
    for m in range(lattice.size):
        if m == lattice.bottom:
            continue
        ranks = reduced_homology_ranks(open_lower_complex(lattice, m), field)
        result[m] = {d: r for d, r in ranks.items() if r}
    return result


def lattice_betti_elements(lattice: FiniteLattice, field: FieldSpec = RATIONALS) -> set[int]:
    """B(L): éléments m ≠ 0̂ dont l'intervalle (0̂, m) a une homologie réduite non nulle."""
    return {m for m, ranks in lattice_homology(lattice, field).items() if ranks}


def _lattice_for(ideal: MonomialIdeal, lcm: Optional[LcmLattice]) -> LcmLattice:
    return lcm if lcm is not None else lcm_lattice(ideal)


def betti_table(
    ideal: MonomialIdeal, field: FieldSpec = RATIONALS, lcm: Optional[LcmLattice] = None
) -> BettiTable:
    """
    Table de Betti de S/I sur K.

    Args:
        ideal: Idéal monomial
        field: Corps des coefficients
        lcm: L_I déjà construit (sinon calculé, TooLarge possible)
    """
    lcm = _lattice_for(ideal, lcm)
    counts = []
    for m, ranks in lattice_homology(lcm.lattice, field).items():
        degree = lcm.degree(m)
        counts += [(d + 2, degree, r) for d, r in ranks.items()]
    table = BettiTable.from_counts(ideal.n, field, counts)
    logger.debug(f"Betti de {ideal.format()} sur {field}: {table.totals()}")
    return table


def betti_poset(
    ideal: MonomialIdeal, field: FieldSpec = RATIONALS, lcm: Optional[LcmLattice] = None
) -> BettiPoset:
    """Sous-poset de L_I induit sur les multidegrés de Betti (0̂ exclu)."""
    lcm = _lattice_for(ideal, lcm)
    nodes = lattice_betti_elements(lcm.lattice, field)
    return BettiPoset(lcm.lattice.base.induced(nodes), field)


def homological_summary(
    ideal: MonomialIdeal, field: FieldSpec = RATIONALS, table: Optional[BettiTable] = None
) -> HomologicalSummary:
    """pdim S/I = plus grand i avec β_i ≠ 0; depth = n − pdim; pdim I = pdim S/I − 1."""
    table = table if table is not None else betti_table(ideal, field)
    pdim_quotient = table.max_degree
    depth_quotient = ideal.n - pdim_quotient
    return HomologicalSummary(
        n=ideal.n,
        pdim_quotient=pdim_quotient,
        pdim_ideal=pdim_quotient - 1,
        depth_quotient=depth_quotient,
        depth_ideal=depth_quotient + 1,
    )


def hilbert_shape_difference(
    first: MonomialIdeal, second: MonomialIdeal, field: FieldSpec = RATIONALS
) -> list[tuple[Monomial, int]]:
    """
    Éléments m ∈ B(I1) dont l'image dans L_{I2} n'est pas dans B(I2), avec
    Σ_i (−1)^i β_{i,m}(S/I1).

    L_{I1} et L_{I2} sont identifiés par la correspondance des générateurs
    (i-ème générateur minimal vers i-ème, ordre canonique).

    Raises:
        ShapeMismatch: nombres de générateurs différents, ou correspondance
            qui ne préserve pas les joins
    """
    lcm1, lcm2 = lcm_lattice(first), lcm_lattice(second)
    images = atom_correspondence(lcm1.lattice, lcm2.lattice)
    if images is None:
        raise ShapeMismatch("Les deux idéaux n'ont pas le même nombre de générateurs")
    mapping = extend_atom_map(lcm1.lattice, lcm2.lattice, images)
    if not is_join_preserving(lcm1.lattice, lcm2.lattice, mapping):
        raise ShapeMismatch("La correspondance des générateurs ne préserve pas les joins")

    table = betti_table(first, field, lcm1)
    betti1 = lattice_betti_elements(lcm1.lattice, field)
    betti2 = lattice_betti_elements(lcm2.lattice, field)
    difference = sorted(
        (lcm1.degree(m) for m in betti1 if mapping[m] not in betti2),
        key=lambda d: d.exponents,
    )
    return [(m, table.alternating_sum(m)) for m in difference]
