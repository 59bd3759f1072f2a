"""
Applications entre treillis atomistiques définies par l'image des atomes.
"""

from typing import Mapping, Optional

from src.posets.lattice import FiniteLattice


def extend_atom_map(
    source: FiniteLattice, target: FiniteLattice, atom_images: Mapping[int, int]
) -> tuple[int, ...]:
    """
    Prolonge f des atomes à tout L: f(x) = join des images des atomes sous x,
    f(0̂) = 0̂. Le prolongement n'est un morphisme que si `is_join_preserving`.
    """
    return tuple(
        target.join_all(atom_images[a] for a in source.atoms_below(x))
        for x in range(source.size)
    )


def is_join_preserving(source: FiniteLattice, target: FiniteLattice, images: tuple[int, ...]) -> bool:
    """Comparaison exhaustive des tables de join (et f(0̂) = 0̂)."""
    if images[source.bottom] != target.bottom:
        return False
    for a in range(source.size):
        for b in range(a + 1, source.size):
            if images[source.join(a, b)] != target.join(images[a], images[b]):
                return False
    return True


def is_surjective(target: FiniteLattice, images: tuple[int, ...]) -> bool:
    return len(set(images)) == target.size


def atom_correspondence(source: FiniteLattice, target: FiniteLattice) -> Optional[dict[int, int]]:
    """i-ème atome vers i-ème atome (None si les nombres d'atomes diffèrent)."""
    if len(source.atoms) != len(target.atoms):
        return None
    return dict(zip(source.atoms, target.atoms))
