"""
Recherche exacte d'applications surjectives préservant les joins entre
treillis atomistiques, données par l'image des atomes.
"""

import logging
from typing import Optional

from src.posets.lattice import FiniteLattice
from src.posets.maps import extend_atom_map, is_join_preserving, is_surjective
from src.posets.poset import PosetError
from src.utils.resilience import BudgetExceeded

logger = logging.getLogger("bettilab.lab")

DEFAULT_SURJECTION_BUDGET = 1_000_000


def validate_join_surjection(
    source: FiniteLattice, target: FiniteLattice, atom_images: dict[int, int]
) -> bool:
    """Revalidation indépendante: join-préservation sur toutes les paires et surjectivité."""
    if set(atom_images) != set(source.atoms):
        return False
    images = extend_atom_map(source, target, atom_images)
    return is_join_preserving(source, target, images) and is_surjective(target, images)


def find_join_surjection(
    source: FiniteLattice,
    target: FiniteLattice,
    budget_nodes: Optional[int] = None,
) -> Optional[dict[int, int]]:
    """
    Cherche f: atomes de L → L2 dont le prolongement par joins est une
    surjection préservant les joins (f(0̂) = 0̂).

    Les atomes sont traités par position croissante, les images essayées par
    position croissante: la première solution trouvée est la plus petite dans
    l'ordre lexicographique.

    Returns:
        Image de chaque atome, ou None si aucune surjection n'existe

    Raises:
        PosetError: treillis non atomistiques
        BudgetExceeded: recherche interrompue
    """
    if not (source.atomistic and target.atomistic):
        raise PosetError("Les deux treillis doivent être atomistiques")
    if target.size > source.size:
        return None

    budget = budget_nodes if budget_nodes is not None else DEFAULT_SURJECTION_BUDGET
    atoms = list(source.atoms)
    step_of = {a: t for t, a in enumerate(atoms)}

    # Paires (x, y) à vérifier dès que x ∨ y est entièrement déterminé
    complete_at = [
        max((step_of[a] for a in source.atoms_below(x)), default=-1)
        for x in range(source.size)
    ]
    checks: list[list[tuple[int, int, int]]] = [[] for _ in atoms]
    for x in range(source.size):
        for y in range(x + 1, source.size):
            z = source.join(x, y)
            if complete_at[z] >= 0:
                checks[complete_at[z]].append((x, y, z))
    nodes_at = [[x for x in range(source.size) if complete_at[x] == t] for t in range(len(atoms))]

    images: dict[int, int] = {source.bottom: target.bottom}
    assignment: dict[int, int] = {}
    target_atoms = set(target.atoms)
    expanded = 0

    def consistent(t: int) -> bool:
        for x in nodes_at[t]:
            images[x] = target.join_all(assignment[a] for a in source.atoms_below(x))
        return all(images[z] == target.join(images[x], images[y]) for x, y, z in checks[t])

    def uncovered_atoms(t: int) -> int:
        hit = {assignment[a] for a in atoms[: t + 1]}
        return len(target_atoms - hit)

    def search(t: int) -> bool:
        nonlocal expanded
        if t == len(atoms):
            return len(set(images.values())) == target.size
        for candidate in range(target.size):
            expanded += 1
            if expanded > budget:
                raise BudgetExceeded(
                    f"Recherche de surjection interrompue après {budget} nœuds",
                    nodes=expanded,
                    state={"assigned_atoms": t},
                )
            assignment[atoms[t]] = candidate
            # Un atome de L2 n'est atteint que comme image exacte d'un atome de L
            if uncovered_atoms(t) > len(atoms) - t - 1:
                continue
            if consistent(t) and search(t + 1):
                return True
        del assignment[atoms[t]]
        return False

    if not atoms:
        return None
    found = search(0)
    logger.debug(f"Surjection {'trouvée' if found else 'absente'} ({expanded} nœuds)")
    return dict(assignment) if found else None
