"""
Treillis des ppcm L_I et réalisation d'un treillis atomistique par un idéal
squarefree.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from src.algebra.monomials import Monomial, MonomialIdeal
from src.posets.lattice import FiniteLattice, lattice_from_poset, meet_irreducibles
from src.posets.poset import PosetError, poset_from_order
from src.utils.resilience import BudgetExceeded

logger = logging.getLogger("bettilab.algebra")

DEFAULT_MAX_NODES = 1 << 16


class TooLarge(BudgetExceeded):
    """Le nombre d'éléments dépasse le plafond configuré."""
    pass


@dataclass(frozen=True, eq=False)
class LcmLattice:
    """
    L_I: ppcm des parties non vides des générateurs minimaux, plus 0̂.

    Positions des nœuds: 0̂ = 0, puis les atomes 1..k dans l'ordre des
    générateurs, puis le reste par (degré total, exposants).
    """

    ideal: MonomialIdeal
    lattice: FiniteLattice

    def degree(self, node: int) -> Monomial:
        return self.lattice.label(node)

    @cached_property
    def _by_degree(self) -> dict[Monomial, int]:
        return {self.degree(i): i for i in range(self.lattice.size)}

    def node_of(self, degree: Monomial) -> Optional[int]:
        """Nœud d'un multidegré, ou None s'il n'est pas un ppcm de générateurs."""
        return self._by_degree.get(degree)

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    def nodes(self) -> range:
        return range(self.lattice.size)

    def to_json(self) -> dict:
        base = self.lattice.base
        return {
            "size": self.size,
            "elements": [list(self.degree(i).exponents) for i in self.nodes()],
            "atoms": [list(self.degree(a).exponents) for a in self.lattice.atoms],
            "covers": [
                [list(self.degree(i).exponents), list(self.degree(j).exponents)]
                for i in self.nodes()
                for j in base.upper_covers(i)
            ],
        }


def lcm_lattice(ideal: MonomialIdeal, max_nodes: Optional[int] = None) -> LcmLattice:
    """
    Construit L_I par clôture BFS sous le join avec les atomes.

    Args:
        ideal: Idéal monomial (générateurs minimaux)
        max_nodes: Plafond sur le nombre d'éléments (0̂ compris)

    Returns:
        LcmLattice dont l'ordre est la divisibilité

    Raises:
        TooLarge: plus de max_nodes éléments
    """
    cap = max_nodes if max_nodes is not None else DEFAULT_MAX_NODES
    atoms = list(ideal.generators)

    seen: set[Monomial] = set(atoms)
    queue = deque(atoms)
    while queue:
        current = queue.popleft()
        for g in atoms:
            joined = current.lcm(g)
            if joined not in seen:
                seen.add(joined)
                if len(seen) + 1 > cap:
                    raise TooLarge(
                        f"Treillis des ppcm de plus de {cap} éléments",
                        nodes=len(seen) + 1,
                        state={"generators": len(atoms)},
                    )
                queue.append(joined)

    rest = sorted(seen - set(atoms), key=lambda m: (m.degree, m.exponents))
    degrees = [Monomial.unit(ideal.n)] + atoms + rest
    poset = poset_from_order(
        range(len(degrees)),
        lambda a, b: degrees[a].divides(degrees[b]),
        labels=degrees,
    )
    lattice = lattice_from_poset(poset)
    logger.debug(f"L_I de {ideal.format()}: {lattice.size} éléments")
    return LcmLattice(ideal=ideal, lattice=lattice)


def realize_lattice(lattice: FiniteLattice) -> MonomialIdeal:
    """
    Idéal squarefree dont le treillis des ppcm est isomorphe à L.

    Une variable par élément meet-irréductible autre que le sommet; le générateur
    de l'atome a est le produit des variables des m tels que a ≰ m.

    Raises:
        PosetError: L n'est pas atomistique ou n'a pas d'atome
    """
    if not lattice.atomistic:
        raise PosetError("Seul un treillis atomistique est réalisable")
    if not lattice.atoms:
        raise PosetError("Un treillis sans atome ne définit pas d'idéal")

    irreducibles = sorted(m for m in meet_irreducibles(lattice) if m != lattice.top)
    variables = tuple(f"m{i + 1}" for i in range(len(irreducibles)))
    generators = [
        Monomial(tuple(0 if lattice.leq(a, m) else 1 for m in irreducibles))
        for a in lattice.atoms
    ]
    return MonomialIdeal.from_generators(variables, generators)
