"""
Treillis finis: tables de meet/join, atomes, rang, éléments meet-irréductibles,
retrait d'élément, clôture par intersections et chaînes par rang décroissant.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from src.posets.poset import (
    EmptyPoset,
    FinitePoset,
    PosetError,
    UnknownElement,
    iter_bits,
    poset_from_order,
)

logger = logging.getLogger("bettilab.posets")


class NotALattice(PosetError):
    """Une paire d'éléments n'a pas de meet ou de join unique."""

    def __init__(self, pair: tuple, kind: str = "join"):
        super().__init__(f"Pas de {kind} unique pour la paire {pair}")
        self.pair = pair
        self.kind = kind


class NotMeetIrreducible(PosetError):
    pass


class CannotRemoveBottom(PosetError):
    pass


class BottomExcluded(PosetError):
    pass


class NotMeetClosed(PosetError):
    pass


class StepNotLattice(PosetError):
    """Une étape intermédiaire de la chaîne n'est plus un treillis."""

    def __init__(self, step: int, cause: Exception):
        super().__init__(f"L'étape {step} de la chaîne n'est pas un treillis: {cause}")
        self.step = step


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """
    Treillis fini immuable construit par `lattice_from_poset`.

    Les tables meet/join sont indexées par positions de nœuds de `base`.
    """

    base: FinitePoset
    bottom: int
    top: int
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    atoms: tuple[int, ...]
    atomistic: bool

    @property
    def size(self) -> int:
        return self.base.size

    def __len__(self) -> int:
        return self.base.size

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def join_all(self, nodes: Iterable[int]) -> int:
        """Join d'une famille (le join vide vaut 0̂)."""
        return reduce(self.join, nodes, self.bottom)

    def meet_all(self, nodes: Iterable[int]) -> int:
        """Meet d'une famille (le meet vide vaut le sommet)."""
        return reduce(self.meet, nodes, self.top)

    def leq(self, a: int, b: int) -> bool:
        return self.base.leq(a, b)

    @cached_property
    def atom_mask(self) -> int:
        return sum(1 << a for a in self.atoms)

    def atoms_below(self, a: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.base.down[a] & self.atom_mask))

    def label(self, a: int):
        return self.base.label(a)

    def name(self, a: int) -> Hashable:
        return self.base.names[a]


def lattice_from_poset(poset: FinitePoset) -> FiniteLattice:
    """
    Remplit les tables meet/join et vérifie exhaustivement la structure de treillis.

    Raises:
        EmptyPoset: poset vide
        NotALattice: une paire témoin sans meet ou join unique
    """
    n = poset.size
    if n == 0:
        raise EmptyPoset("Le poset vide n'est pas un treillis")

    # Dans un poset, les masques d'idéaux (resp. de filtres) principaux sont distincts
    by_down = {mask: i for i, mask in enumerate(poset.down)}
    by_up = {mask: i for i, mask in enumerate(poset.up)}

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        meet[a][a] = join[a][a] = a
        for b in range(a + 1, n):
            lower = poset.down[a] & poset.down[b]
            m = by_down.get(lower)
            if m is None:
                raise NotALattice((poset.names[a], poset.names[b]), "meet")
            upper = poset.up[a] & poset.up[b]
            j = by_up.get(upper)
            if j is None:
                raise NotALattice((poset.names[a], poset.names[b]), "join")
            meet[a][b] = meet[b][a] = m
            join[a][b] = join[b][a] = j

    # Toutes les paires ont un meet et un join: 0̂ et le sommet existent
    full = (1 << n) - 1
    bottom = by_up[full]
    top = by_down[full]

    atoms = tuple(poset.upper_covers(bottom))
    atom_mask = sum(1 << a for a in atoms)

    atomistic = True
    for x in range(n):
        joined = reduce(lambda acc, a: join[acc][a], iter_bits(poset.down[x] & atom_mask), bottom)
        if joined != x:
            atomistic = False
            break

    return FiniteLattice(
        base=poset,
        bottom=bottom,
        top=top,
        meet_table=tuple(tuple(row) for row in meet),
        join_table=tuple(tuple(row) for row in join),
        atoms=atoms,
        atomistic=atomistic,
    )


def rank(lattice: FiniteLattice, a: int) -> int:
    """Rang de a: nombre d'atomes en dessous de a."""
    lattice.base.check_node(a)
    return (lattice.base.down[a] & lattice.atom_mask).bit_count()


def meet_irreducibles(lattice: FiniteLattice) -> set[int]:
    """
    Éléments a tels que a = b ∧ c impose a ∈ {b, c}.
    Ce sont exactement les éléments ayant au plus une couverture supérieure
    (le sommet l'est donc toujours, par vacuité).
    """
    return {a for a in range(lattice.size) if len(lattice.base.upper_covers(a)) <= 1}


def remove_element(lattice: FiniteLattice, a: int) -> FiniteLattice:
    """
    Retire un élément meet-irréductible et reconstruit les tables.

    Pour un élément autre que le sommet le résultat est toujours un treillis;
    le sommet ne peut être retiré que s'il a une seule couverture inférieure
    (sinon NotALattice est levée par la revalidation).
    """
    lattice.base.check_node(a)
    if a == lattice.bottom:
        raise CannotRemoveBottom("0̂ ne peut pas être retiré")
    if a not in meet_irreducibles(lattice):
        raise NotMeetIrreducible(f"{lattice.name(a)!r} n'est pas meet-irréductible")
    remaining = [x for x in range(lattice.size) if x != a]
    return lattice_from_poset(lattice.base.induced(remaining))


def boolean_algebra(k: int) -> FiniteLattice:
    """Algèbre de Boole des parties de {1..k}, ordonnée par inclusion."""
    subsets = [
        combo
        for size in range(k + 1)
        for combo in combinations(range(1, k + 1), size)
    ]
    return lattice_from_poset(poset_from_order(subsets, lambda s, t: set(s) <= set(t)))


def chain_lattice(k: int) -> FiniteLattice:
    """Chaîne 0 < 1 < ... < k-1."""
    if k < 1:
        raise EmptyPoset("Une chaîne a au moins un élément")
    return lattice_from_poset(poset_from_order(range(k), lambda a, b: a <= b))


def meet_closure(atom_count: int, family: Iterable[Iterable[int]]) -> FiniteLattice:
    """
    M(B): toutes les intersections de sous-familles de B dans l'algèbre de Boole sur
    {1..n}; l'intersection de la sous-famille vide est {1..n}.

    Returns:
        Treillis ordonné par inclusion (meet = intersection), nœuds nommés par
        des tuples triés d'atomes.
    """
    full = frozenset(range(1, atom_count + 1))
    members = [frozenset(b) for b in family]
    for b in members:
        if not b <= full:
            raise PosetError(f"{sorted(b)} n'est pas une partie de {{1..{atom_count}}}")

    closed = {full}
    for b in members:
        closed |= {s & b for s in closed}

    ordered = sorted(closed, key=lambda s: (len(s), sorted(s)))
    names = [tuple(sorted(s)) for s in ordered]
    return lattice_from_poset(poset_from_order(names, lambda s, t: set(s) <= set(t)))


def decreasing_rank_chain(lattice: FiniteLattice, sublattice: Iterable[int]) -> list[FiniteLattice]:
    """
    Chaîne L = L0 ⊋ L1 ⊋ ... ⊋ Lr = M obtenue en retirant les éléments de L ∖ M
    par rang décroissant (égalités départagées par position croissante).

    Args:
        lattice: Treillis L
        sublattice: Positions (dans L) des éléments de M

    Raises:
        NotMeetClosed: M ne contient pas 0̂ ou le sommet, ou n'est pas stable par meet
        StepNotLattice: une étape intermédiaire échoue à la validation
    """
    keep = set(sublattice)
    for x in keep:
        lattice.base.check_node(x)
    if lattice.bottom not in keep or lattice.top not in keep:
        raise NotMeetClosed("M doit contenir 0̂ et le sommet")
    for a, b in combinations(sorted(keep), 2):
        if lattice.meet(a, b) not in keep:
            raise NotMeetClosed(
                f"meet({lattice.name(a)!r}, {lattice.name(b)!r}) hors de M"
            )

    removal = sorted(
        (x for x in range(lattice.size) if x not in keep),
        key=lambda x: (-rank(lattice, x), x),
    )
    chain = [lattice]
    current = lattice
    for step, x in enumerate(removal, start=1):
        name = lattice.name(x)
        remaining = [i for i in range(current.size) if current.name(i) != name]
        try:
            current = lattice_from_poset(current.base.induced(remaining))
        except NotALattice as e:
            raise StepNotLattice(step, e) from e
        chain.append(current)

    logger.debug(f"Chaîne par rang décroissant: {len(removal)} retraits")
    return chain
