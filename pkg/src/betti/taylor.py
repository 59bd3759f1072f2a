"""
Complexe de Taylor: oracle indépendant pour les nombres de Betti, complexe de
Scarf et numérateur de la série de Hilbert.

Les cellules sont les parties σ de l'ensemble des générateurs, de multidegré
lcm(σ). Après tensorisation par K, seule la composante de multidegré m survit
dans le brin m: cellules σ avec lcm(σ) = m, bord restreint aux faces de même ppcm.
"""

import logging
from typing import Literal, Optional

from src.algebra.lcm_lattice import lcm_lattice
from src.algebra.monomials import Monomial, MonomialIdeal
from src.betti.tables import BettiPoset, BettiTable
from src.homology.chains import ChainComplexData, SparseColumns, chain_homology_ranks
from src.homology.fields import FieldSpec, RATIONALS
from src.posets.poset import iter_bits
from src.utils.resilience import BudgetExceeded

logger = logging.getLogger("bettilab.betti")

DEFAULT_MAX_GENERATORS = 20


class TooManyGenerators(BudgetExceeded):
    """Plus de générateurs que le complexe de Taylor ne le permet (2^k cellules)."""
    pass


def _subset_lcms(ideal: MonomialIdeal, max_generators: Optional[int]) -> list[Monomial]:
    """ppcm de chaque partie, indexé par masque de bits (masque 0 = monôme 1)."""
    k = len(ideal.generators)
    cap = max_generators if max_generators is not None else DEFAULT_MAX_GENERATORS
    if k > cap:
        raise TooManyGenerators(
            f"{k} générateurs: 2^{k} cellules de Taylor dépassent le plafond de {cap}",
            nodes=k,
        )
    lcms = [Monomial.unit(ideal.n)] * (1 << k)
    for mask in range(1, 1 << k):
        low = mask & -mask
        lcms[mask] = lcms[mask ^ low].lcm(ideal.generators[low.bit_length() - 1])
    return lcms


def _strands(lcms: list[Monomial]) -> dict[Monomial, list[int]]:
    strands: dict[Monomial, list[int]] = {}
    for mask, m in enumerate(lcms):
        strands.setdefault(m, []).append(mask)
    return strands


def _strand_complex(masks: list[int], lcms: list[Monomial]) -> ChainComplexData:
    """Complexe du brin: degré = |σ|, ∂σ = Σ_k (−1)^k (σ ∖ σ_k) sur les faces de même ppcm."""
    by_size: dict[int, list[int]] = {}
    for mask in masks:
        by_size.setdefault(mask.bit_count(), []).append(mask)
    index = {size: {mask: pos for pos, mask in enumerate(group)} for size, group in by_size.items()}
    target = lcms[masks[0]]

    boundaries: dict[int, SparseColumns] = {}
    for size, group in by_size.items():
        if size - 1 not in by_size:
            continue
        columns: SparseColumns = {}
        for pos, mask in enumerate(group):
            entries = {}
            for k, bit in enumerate(iter_bits(mask)):
                face = mask ^ (1 << bit)
                if lcms[face] == target:
                    entries[index[size - 1][face]] = (-1) ** k
            if entries:
                columns[pos] = entries
        boundaries[size] = columns

    return ChainComplexData({size: len(group) for size, group in by_size.items()}, boundaries)


def taylor_betti_oracle(
    ideal: MonomialIdeal,
    field: FieldSpec = RATIONALS,
    max_generators: Optional[int] = None,
) -> BettiTable:
    """
    β_{i,m}(S/I) comme homologie du complexe de Taylor, brin par brin.

    Raises:
        TooManyGenerators: plus de max_generators générateurs
    """
    lcms = _subset_lcms(ideal, max_generators)
    counts = []
    for m, masks in _strands(lcms).items():
        if m.is_unit:
            continue
        ranks = chain_homology_ranks(_strand_complex(masks, lcms), field)
        counts += [(i, m, r) for i, r in ranks.items() if i >= 1]
    return BettiTable.from_counts(ideal.n, field, counts)


def scarf_complex(ideal: MonomialIdeal, max_generators: Optional[int] = None) -> BettiPoset:
    """
    Δ(I): éléments de L_I (0̂ exclu) atteints par une seule partie de générateurs.
    """
    lcms = _subset_lcms(ideal, max_generators)
    multiplicity: dict[Monomial, int] = {}
    for m in lcms[1:]:
        multiplicity[m] = multiplicity.get(m, 0) + 1
    lcm = lcm_lattice(ideal)
    nodes = [
        x for x in range(lcm.size)
        if x != lcm.bottom and multiplicity[lcm.degree(x)] == 1
    ]
    return BettiPoset(lcm.lattice.base.induced(nodes), None)


HilbertSource = Literal["betti", "taylor"]


def hilbert_numerator(
    ideal: MonomialIdeal,
    source: HilbertSource = "betti",
    field: FieldSpec = RATIONALS,
    max_generators: Optional[int] = None,
) -> dict[Monomial, int]:
    """
    Numérateur K(S/I; t) de la série de Hilbert multigraduée sur Π(1 − t_j),
    coefficients non nuls seulement.

    Args:
        source: "betti" (Σ_i (−1)^i β_{i,m}) ou "taylor" (Σ_σ (−1)^{|σ|})
    """
    coefficients: dict[Monomial, int] = {}
    if source == "betti":
        from src.betti.invariants import betti_table

        table = betti_table(ideal, field)
        coefficients[Monomial.unit(ideal.n)] = 1
        for i, m, beta in table.entries:
            coefficients[m] = coefficients.get(m, 0) + (-1) ** i * beta
    elif source == "taylor":
        for mask, m in enumerate(_subset_lcms(ideal, max_generators)):
            coefficients[m] = coefficients.get(m, 0) + (-1) ** mask.bit_count()
    else:
        raise ValueError(f"Source inconnue: {source!r} (attendu betti ou taylor)")
    return {m: c for m, c in sorted(coefficients.items()) if c}


def format_polynomial(coefficients: dict[Monomial, int], variables: tuple[str, ...]) -> str:
    """Écriture lisible `1 - t_x*t_y + 2*t_x*t_y*t_z`."""
    terms = []
    for m, c in sorted(coefficients.items(), key=lambda item: (item[0].degree, item[0].exponents)):
        body = m.format(tuple(f"t_{v}" for v in variables))
        if m.is_unit:
            text = str(abs(c))
        elif abs(c) == 1:
            text = body
        else:
            text = f"{abs(c)}*{body}"
        sign = "-" if c < 0 else "+"
        terms.append(f"{sign} {text}")
    if not terms:
        return "0"
    first = terms[0]
    rendered = first[2:] if first.startswith("+") else "-" + first[2:]
    return " ".join([rendered] + terms[1:])
