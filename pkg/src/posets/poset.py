"""
Ensembles partiellement ordonnés finis.
Table de comparabilité dense stockée sous forme de masques de bits (un entier par élément).
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Iterator, Optional, Sequence

import networkx as nx

logger = logging.getLogger("bettilab.posets")


class PosetError(ValueError):
    """Erreur structurelle sur un poset ou un treillis."""
    pass


class CycleDetected(PosetError):
    """Les relations fournies contiennent un cycle (antisymétrie violée)."""

    def __init__(self, cycle: Sequence[Hashable]):
        super().__init__(f"Cycle dans les relations: {' < '.join(map(str, cycle))}")
        self.cycle = tuple(cycle)


class UnknownElement(PosetError):
    """Élément absent du poset."""
    pass


class EmptyPoset(PosetError):
    """Opération non définie sur le poset vide."""
    pass


def iter_bits(mask: int) -> Iterator[int]:
    """Itère sur les positions des bits à 1 d'un masque, par ordre croissant."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """
    Poset fini immuable.

    Les nœuds sont les positions 0..n-1; `names` garde les identifiants
    opaques d'origine (dans l'ordre fourni) et `labels` d'éventuels multidegrés.
    `up[i]` est le masque des j tels que i ≤ j (réflexif).
    """

    names: tuple
    up: tuple[int, ...]
    labels: Optional[tuple] = None
    down: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.names)
        if len(self.up) != n:
            raise PosetError("Table de comparabilité de taille incohérente")
        if len(set(self.names)) != n:
            raise PosetError("Identifiants de nœuds dupliqués")
        if self.labels is not None and len(self.labels) != n:
            raise PosetError("Nombre d'étiquettes incohérent")

        down = [0] * n
        for i, mask in enumerate(self.up):
            if mask >> n:
                raise PosetError(f"Masque hors bornes pour le nœud {self.names[i]}")
            for j in iter_bits(mask):
                down[j] |= 1 << i
        object.__setattr__(self, "down", tuple(down))
        self._validate()

    def _validate(self):
        """Réflexivité, antisymétrie, transitivité, cohérence avec les couvertures."""
        for i, mask in enumerate(self.up):
            bit = 1 << i
            if not mask & bit:
                raise PosetError(f"Relation non réflexive en {self.names[i]}")
            if mask & self.down[i] != bit:
                j = next(iter_bits((mask & self.down[i]) ^ bit))
                raise PosetError(f"Antisymétrie violée: {self.names[i]}, {self.names[j]}")
            for j in iter_bits(mask):
                if self.up[j] | mask != mask:
                    raise PosetError(f"Transitivité violée au-dessus de {self.names[j]}")

        # Les couvertures doivent régénérer la même table
        regenerated: dict[int, int] = {}
        for i in self.linear_extension:
            mask = 1 << i
            for c in self.lower_covers(i):
                mask |= regenerated[c]
            regenerated[i] = mask
        if any(regenerated[i] != self.down[i] for i in range(len(self.names))):
            raise PosetError("Relation de couverture incohérente avec la table")

    # === Requêtes de base ===

    def __len__(self) -> int:
        return len(self.names)

    @property
    def size(self) -> int:
        return len(self.names)

    @cached_property
    def _index(self) -> dict:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: Hashable) -> int:
        """Position d'un identifiant de nœud."""
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(f"Élément inconnu: {name!r}") from None

    def check_node(self, i: int) -> int:
        if not 0 <= i < len(self.names):
            raise UnknownElement(f"Nœud hors bornes: {i}")
        return i

    def leq(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def strict_up(self, i: int) -> int:
        return self.up[i] & ~(1 << i)

    def strict_down(self, i: int) -> int:
        return self.down[i] & ~(1 << i)

    def label(self, i: int):
        return None if self.labels is None else self.labels[i]

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        """Extension linéaire déterministe: nombre d'éléments en dessous, puis position."""
        return tuple(sorted(range(len(self.names)), key=lambda i: (self.down[i].bit_count(), i)))

    @cached_property
    def _lower_covers(self) -> tuple[tuple[int, ...], ...]:
        covers = []
        for i in range(len(self.names)):
            below = self.strict_down(i)
            covers.append(tuple(
                j for j in iter_bits(below) if self.up[j] & below == 1 << j
            ))
        return tuple(covers)

    @cached_property
    def _upper_covers(self) -> tuple[tuple[int, ...], ...]:
        covers: list[list[int]] = [[] for _ in self.names]
        for i, lower in enumerate(self._lower_covers):
            for j in lower:
                covers[j].append(i)
        return tuple(tuple(c) for c in covers)

    def lower_covers(self, i: int) -> tuple[int, ...]:
        return self._lower_covers[i]

    def upper_covers(self, i: int) -> tuple[int, ...]:
        return self._upper_covers[i]

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Longueur de la plus longue chaîne se terminant en chaque nœud."""
        height = [0] * len(self.names)
        for i in self.linear_extension:
            height[i] = max((height[c] + 1 for c in self.lower_covers(i)), default=0)
        return tuple(height)

    def induced(self, nodes: Iterable[int]) -> "FinitePoset":
        """Sous-poset induit (noms et étiquettes conservés, ordre des nœuds conservé)."""
        keep = sorted(set(nodes))
        position = {old: new for new, old in enumerate(keep)}
        up = []
        for old in keep:
            mask = 0
            for j in iter_bits(self.up[old]):
                if j in position:
                    mask |= 1 << position[j]
            up.append(mask)
        labels = None if self.labels is None else tuple(self.labels[i] for i in keep)
        return FinitePoset(tuple(self.names[i] for i in keep), tuple(up), labels)

    def hasse_diagram(self) -> nx.DiGraph:
        """Diagramme de Hasse (arêtes de couverture orientées vers le haut)."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.names)))
        for i in range(len(self.names)):
            graph.add_edges_from((i, j) for j in self.upper_covers(i))
        return graph


def build_poset(
    elements: Sequence[Hashable],
    relations: Iterable[tuple[Hashable, Hashable]],
    labels: Optional[Sequence] = None,
) -> FinitePoset:
    """
    Construit un poset à partir de générateurs de l'ordre strict.

    Args:
        elements: Identifiants des nœuds (leur ordre donne les positions)
        relations: Paires (a, b) signifiant a ≤ b
        labels: Multidegrés optionnels, un par élément

    Returns:
        La clôture réflexive-transitive des relations

    Raises:
        CycleDetected: si la clôture violerait l'antisymétrie
    """
    elements = tuple(elements)
    index = {name: i for i, name in enumerate(elements)}
    if len(index) != len(elements):
        raise PosetError("Identifiants de nœuds dupliqués")

    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(elements)))
    for a, b in relations:
        if a not in index or b not in index:
            raise UnknownElement(f"Relation sur un élément inconnu: ({a!r}, {b!r})")
        if a != b:
            graph.add_edge(index[a], index[b])

    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise CycleDetected([elements[u] for u, _ in cycle])

    closure = nx.transitive_closure_dag(graph)
    up = tuple(
        (1 << i) | sum(1 << j for j in closure.successors(i))
        for i in range(len(elements))
    )
    return FinitePoset(elements, up, None if labels is None else tuple(labels))


def poset_from_order(
    elements: Sequence[Hashable],
    leq: Callable[[Hashable, Hashable], bool],
    labels: Optional[Sequence] = None,
) -> FinitePoset:
    """Construit un poset à partir d'un prédicat d'ordre (divisibilité, inclusion...)."""
    elements = tuple(elements)
    up = tuple(
        sum(1 << j for j, b in enumerate(elements) if leq(a, b))
        for a in elements
    )
    return FinitePoset(elements, up, None if labels is None else tuple(labels))


def length(poset: FinitePoset) -> int:
    """
    Longueur ℓ(P): nombre maximal de pas stricts d'une chaîne l0 < ... < lℓ.
    Les chaînes peuvent partir de n'importe quel élément (0̂ compris).
    """
    if poset.size == 0:
        raise EmptyPoset("La longueur du poset vide n'est pas définie")
    return max(poset.heights)


def augment_with_top(poset: FinitePoset, top_name: Hashable = "1̂") -> FinitePoset:
    """Ajoute un nouvel élément maximum 1̂ au-dessus de tout le poset."""
    n = poset.size
    if top_name in poset._index:
        raise PosetError(f"Le nom {top_name!r} est déjà utilisé")
    top_bit = 1 << n
    up = tuple(mask | top_bit for mask in poset.up) + (top_bit,)
    labels = None if poset.labels is None else poset.labels + (None,)
    return FinitePoset(poset.names + (top_name,), up, labels)
