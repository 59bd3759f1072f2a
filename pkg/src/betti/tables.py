"""
Types de résultats des invariants homologiques: table de Betti multigraduée,
poset de Betti, résumé pdim/depth.
"""

from dataclasses import dataclass
from typing import Iterable, Optional

from src.algebra.monomials import Monomial
from src.homology.fields import FieldSpec
from src.posets.poset import FinitePoset


@dataclass(frozen=True)
class BettiTable:
    """
    β_{i,m}(S/I) non nuls, triés par (i, m).

    β_{0,1} = 1 est implicite et n'est jamais stocké.
    """

    n: int
    field: FieldSpec
    entries: tuple[tuple[int, Monomial, int], ...]

    def __post_init__(self):
        for i, m, beta in self.entries:
            if beta <= 0:
                raise ValueError(f"Entrée nulle ou négative stockée: β_{i},{m.exponents} = {beta}")
            if i < 1:
                raise ValueError("Seuls les degrés homologiques ≥ 1 sont stockés")
            if len(m) != self.n:
                raise ValueError("Multidegré de longueur incohérente")
        object.__setattr__(self, "entries", tuple(sorted(self.entries, key=lambda e: (e[0], e[1].exponents))))

    @classmethod
    def from_counts(
        cls, n: int, field: FieldSpec, counts: Iterable[tuple[int, Monomial, int]]
    ) -> "BettiTable":
        """Construit la table en omettant les zéros."""
        return cls(n, field, tuple((i, m, beta) for i, m, beta in counts if beta))

    def get(self, i: int, m: Monomial) -> int:
        if i == 0 and m.is_unit:
            return 1
        for j, d, beta in self.entries:
            if j == i and d == m:
                return beta
        return 0

    @property
    def max_degree(self) -> int:
        """Plus grand i avec β_i ≠ 0 (0 pour S/I = S)."""
        return max((i for i, _, _ in self.entries), default=0)

    def totals(self) -> dict[int, int]:
        """β_i = Σ_m β_{i,m}."""
        result: dict[int, int] = {}
        for i, _, beta in self.entries:
            result[i] = result.get(i, 0) + beta
        return result

    def alternating_sum(self, m: Monomial) -> int:
        """Σ_i (−1)^i β_{i,m}, avec le terme implicite en m = 1."""
        total = 1 if m.is_unit else 0
        for i, d, beta in self.entries:
            if d == m:
                total += (-1) ** i * beta
        return total

    def to_json(self) -> dict:
        return {
            "field": str(self.field),
            "entries": [
                {"i": i, "deg": list(m.exponents), "beta": beta}
                for i, m, beta in self.entries
            ],
        }


@dataclass(frozen=True, eq=False)
class BettiPoset:
    """
    Sous-poset induit de L_I (0̂ exclu), nœuds nommés par leur position dans L_I
    et étiquetés par leur multidegré. `field` vaut None pour le complexe de Scarf.
    """

    poset: FinitePoset
    field: Optional[FieldSpec] = None

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def nodes(self) -> tuple[int, ...]:
        return self.poset.names

    @property
    def degrees(self) -> tuple[Monomial, ...]:
        return self.poset.labels or ()

    def to_json(self) -> dict:
        p = self.poset
        return {
            "field": None if self.field is None else str(self.field),
            "elements": [list(m.exponents) for m in self.degrees],
            "covers": [
                [list(p.labels[i].exponents), list(p.labels[j].exponents)]
                for i in range(p.size)
                for j in p.upper_covers(i)
            ],
        }


@dataclass(frozen=True)
class HomologicalSummary:
    """pdim et profondeur de S/I et de I (Auslander-Buchsbaum)."""

    n: int
    pdim_quotient: int
    pdim_ideal: int
    depth_quotient: int
    depth_ideal: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pdim_quotient": self.pdim_quotient,
            "pdim_ideal": self.pdim_ideal,
            "depth_quotient": self.depth_quotient,
            "depth_ideal": self.depth_ideal,
        }
