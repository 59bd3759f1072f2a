"""
Profondeur de Stanley de S/I et de I par partitions en intervalles, avec
certificat vérifiable.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from src.algebra.monomials import MonomialIdeal
from src.stanley.characteristic import CharacteristicPoset, Side, characteristic_poset
from src.stanley.decomposition import IntervalPartition, InvalidPartition, verify_partition
from src.stanley.search import SearchBudget, exists_partition_with_min_rho, max_feasible_k

logger = logging.getLogger("bettilab.stanley")


@dataclass(frozen=True)
class SdepthResult:
    """sdepth d'un côté, avec la partition qui l'atteint."""

    n: int
    side: Side
    value: int
    certificate: IntervalPartition

    @property
    def spdim(self) -> int:
        return self.n - self.value

    def to_json(self) -> dict:
        return {
            "side": self.side.value,
            "n": self.n,
            "sdepth": self.value,
            "spdim": self.spdim,
            "certificate": self.certificate.to_json(),
        }


def sdepth_of_poset(poset: CharacteristicPoset, budget: Optional[SearchBudget] = None) -> SdepthResult:
    """Plus grand k admettant une partition, par k décroissant depuis la borne triviale."""
    budget = budget or SearchBudget()
    for k in range(min(max_feasible_k(poset), poset.n), -1, -1):
        partition = exists_partition_with_min_rho(poset, k, budget)
        if partition is not None:
            logger.debug(
                f"sdepth ({poset.side.value}) = {k} après {budget.used} nœuds, "
                f"{len(partition.intervals)} intervalles"
            )
            return SdepthResult(poset.n, poset.side, k, partition)
    raise AssertionError("La partition en singletons existe toujours")


def sdepth(
    ideal: MonomialIdeal,
    side: Side | str = Side.QUOTIENT,
    g_extension: Optional[Sequence[int]] = None,
    budget_nodes: Optional[int] = None,
    max_points: Optional[int] = None,
) -> SdepthResult:
    """
    sdepth S/I (side=quotient) ou sdepth I (side=ideal).

    Args:
        ideal: Idéal monomial
        side: Côté étudié
        g_extension: Plafond alternatif (test d'invariance en g)
        budget_nodes: Nœuds de recherche autorisés, toutes valeurs de k confondues
        max_points: Plafond sur la taille de la grille

    Raises:
        BudgetExceeded: recherche interrompue (valeur inconnue)
        TooLarge: grille trop grande
    """
    poset = characteristic_poset(ideal, side, g_extension, max_points)
    result = sdepth_of_poset(poset, SearchBudget(budget_nodes))
    return checked_result(poset, result)


def checked_result(poset: CharacteristicPoset, result: SdepthResult) -> SdepthResult:
    """
    Revérifie le certificat d'un résultat sdepth.

    Raises:
        InvalidPartition: certificat invalide ou de valeur différente
    """
    diagnostics = verify_partition(poset, result.certificate)
    problems = list(diagnostics.problems)
    if diagnostics.valid and diagnostics.value != result.value:
        problems.append(f"Valeur annoncée {result.value}, certificat de valeur {diagnostics.value}")
    if problems or not diagnostics.valid:
        raise InvalidPartition(problems)
    return result


def spdim(
    ideal: MonomialIdeal,
    side: Side | str = Side.QUOTIENT,
    budget_nodes: Optional[int] = None,
    max_points: Optional[int] = None,
) -> int:
    """spdim = n − sdepth."""
    return sdepth(ideal, side, budget_nodes=budget_nodes, max_points=max_points).spdim
