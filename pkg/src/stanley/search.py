"""
Recherche exacte d'une partition en intervalles dont tous les sommets b
vérifient ρ(b) ≥ k.

Couverture exacte par retour arrière itératif: le plus petit point non couvert
(degré total, puis lexicographique) est toujours le bas de son intervalle.
"""

import logging
from typing import Optional

from src.posets.poset import iter_bits
from src.stanley.characteristic import CharacteristicPoset
from src.stanley.decomposition import IntervalPartition
from src.utils.resilience import BudgetExceeded

logger = logging.getLogger("bettilab.stanley")

DEFAULT_BUDGET = 100_000_000
FAILED_STATES_CAP = 1 << 20


class SearchBudget:
    """Compteur de nœuds partagé entre plusieurs recherches."""

    def __init__(self, limit: Optional[int] = None):
        self.limit = limit if limit is not None else DEFAULT_BUDGET
        self.used = 0

    def spend(self, k: int, covered: int):
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(
                f"Budget de recherche épuisé ({self.limit} nœuds) pour k = {k}",
                nodes=self.used,
                state={"k": k, "covered_points": covered.bit_count()},
            )


def max_feasible_k(poset: CharacteristicPoset) -> int:
    """Borne supérieure: chaque point a besoin d'un sommet b ≥ lui avec ρ(b) ≥ k."""
    return min(
        max(poset.rho[j] for j in iter_bits(poset.up_masks[i]))
        for i in range(poset.size)
    )


def _singletons(poset: CharacteristicPoset) -> IntervalPartition:
    return IntervalPartition.from_pairs(poset, [(p, p) for p in poset.points])


def exists_partition_with_min_rho(
    poset: CharacteristicPoset,
    k: int,
    budget: Optional[SearchBudget] = None,
) -> Optional[IntervalPartition]:
    """
    Partition de P en intervalles [a, b] avec ρ(b) ≥ k, ou None si aucune n'existe.

    Args:
        poset: Poset caractéristique
        k: Seuil sur ρ des sommets d'intervalles (0 ≤ k ≤ n)
        budget: Compteur de nœuds (BudgetExceeded au-delà)

    Raises:
        ValueError: k hors de [0, n]
        BudgetExceeded: recherche interrompue; le résultat est inconnu
    """
    if not 0 <= k <= poset.n:
        raise ValueError(f"k = {k} hors de [0, {poset.n}]")
    if k == 0:
        return _singletons(poset)

    budget = budget or SearchBudget()
    size = poset.size
    full = (1 << size) - 1
    admissible = sum(1 << j for j in range(size) if poset.rho[j] >= k)
    tops_above = [poset.up_masks[i] & admissible for i in range(size)]
    if any(not mask for mask in tops_above):
        return None

    # Intervalles candidats par bas, les plus grands d'abord
    candidates: list[list[tuple[int, int]]] = []
    for a in range(size):
        options = [(b, poset.interval_mask(a, b)) for b in iter_bits(tops_above[a])]
        options.sort(key=lambda item: (-item[1].bit_count(), item[0]))
        candidates.append(options)

    failed: set[int] = set()

    def feasible(covered: int) -> bool:
        free = full & ~covered
        return all(tops_above[c] & free for c in iter_bits(free))

    path: list[tuple[int, int]] = []
    frames: list[list] = []  # [couverture, bas, prochain candidat]
    covered = 0
    descend = True

    while True:
        if descend:
            if covered == full:
                pairs = [(poset.points[a], poset.points[b]) for a, b in path]
                return IntervalPartition.from_pairs(poset, pairs)
            budget.spend(k, covered)
            if covered not in failed and feasible(covered):
                free = full & ~covered
                bottom = (free & -free).bit_length() - 1
                frames.append([covered, bottom, 0])
            elif path:
                path.pop()

        if not frames:
            return None

        frame = frames[-1]
        state, bottom, start = frame
        options = candidates[bottom]
        chosen = None
        for pos in range(start, len(options)):
            b, mask = options[pos]
            if not mask & state:
                chosen = (pos, b, mask)
                break

        if chosen is None:
            if len(failed) < FAILED_STATES_CAP:
                failed.add(state)
            frames.pop()
            if not frames:
                return None
            path.pop()
            descend = False
            continue

        pos, b, mask = chosen
        frame[2] = pos + 1
        path.append((bottom, b))
        covered = state | mask
        descend = True
