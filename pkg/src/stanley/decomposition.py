"""
Certificats de profondeur de Stanley: partitions en intervalles, vérification
indépendante et décomposition de Stanley induite.

Un intervalle [a, b] donne les espaces x^e·K[Z_b], Z_b = {x_j : b_j = g_j}, pour
chaque e de [a, b] égal à a sur les coordonnées de Z_b.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Optional, Sequence

import numpy as np

from src.algebra.monomials import Monomial
from src.stanley.characteristic import CharacteristicPoset, Side

logger = logging.getLogger("bettilab.stanley")

Point = tuple[int, ...]


class InvalidPartition(ValueError):
    """La famille d'intervalles n'est pas une partition du poset caractéristique."""

    def __init__(self, problems: Sequence[str]):
        super().__init__("; ".join(problems) or "Partition invalide")
        self.problems = list(problems)


def _rho(point: Sequence[int], g: Sequence[int]) -> int:
    return sum(1 for b, c in zip(point, g) if b == c)


@dataclass(frozen=True)
class IntervalPartition:
    """Intervalles [a, b] d'un poset caractéristique de plafond g."""

    g: Point
    side: Side
    intervals: tuple[tuple[Point, Point], ...]

    @classmethod
    def from_pairs(cls, poset: CharacteristicPoset, pairs) -> "IntervalPartition":
        ordered = sorted(
            ((tuple(a), tuple(b)) for a, b in pairs),
            key=lambda ab: (sum(ab[0]), ab[0], ab[1]),
        )
        return cls(poset.g, poset.side, tuple(ordered))

    @property
    def value(self) -> int:
        """min ρ(b) sur les sommets d'intervalles."""
        return min((_rho(b, self.g) for _, b in self.intervals), default=len(self.g))

    def to_json(self) -> dict:
        return {
            "g": list(self.g),
            "side": self.side.value,
            "intervals": [{"a": list(a), "b": list(b)} for a, b in self.intervals],
            "value": self.value,
        }

    @classmethod
    def from_json(cls, data: dict) -> "IntervalPartition":
        return cls(
            tuple(data["g"]),
            Side(data["side"]),
            tuple((tuple(item["a"]), tuple(item["b"])) for item in data["intervals"]),
        )


@dataclass(frozen=True)
class StanleyDecomposition:
    """Espaces de Stanley (m_i, Z_i), Z_i donné par positions de variables."""

    variables: tuple[str, ...]
    spaces: tuple[tuple[Monomial, tuple[int, ...]], ...]

    @property
    def depth(self) -> int:
        return min((len(z) for _, z in self.spaces), default=len(self.variables))

    def format_space(self, index: int) -> str:
        m, z = self.spaces[index]
        names = ",".join(self.variables[j] for j in z)
        return f"{m.format(self.variables)}·K[{names}]"

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "spaces": [
                {"m": list(m.exponents), "Z": [self.variables[j] for j in z]}
                for m, z in self.spaces
            ],
        }


def stanley_spaces(g: Point, intervals) -> list[tuple[Monomial, tuple[int, ...]]]:
    """Espaces induits par chaque intervalle, sans vérification."""
    spaces = []
    for a, b in intervals:
        z = tuple(j for j in range(len(g)) if b[j] == g[j])
        ranges = [range(a[j], a[j] + 1) if j in z else range(a[j], b[j] + 1) for j in range(len(g))]
        spaces += [(Monomial(tuple(e)), z) for e in product(*ranges)]
    return spaces


@dataclass
class PartitionDiagnostics:
    """Résultat de `verify_partition` (jamais d'exception)."""

    valid: bool
    value: Optional[int] = None
    problems: list[str] = field(default_factory=list)
    clashing_point: Optional[Point] = None
    missing_point: Optional[Point] = None

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "value": self.value,
            "problems": self.problems,
            "clashing_point": None if self.clashing_point is None else list(self.clashing_point),
            "missing_point": None if self.missing_point is None else list(self.missing_point),
        }


def _counting_problems(poset: CharacteristicPoset, spaces) -> list[str]:
    """Chaque point de P est dans exactement un espace, et aucun espace ne sort de P."""
    coords = poset.coords
    counts = np.zeros(poset.size, dtype=np.int64)
    box_total = 0
    for m, z in spaces:
        e = np.array(m.exponents)
        fixed = [j for j in range(poset.n) if j not in z]
        hits = (coords >= e).all(axis=1)
        if fixed:
            hits &= (coords[:, fixed] == e[fixed]).all(axis=1)
        counts += hits
        box_total += prod(poset.g[j] - m.exponents[j] + 1 for j in z)

    problems = []
    bad = np.flatnonzero(counts != 1)
    if bad.size:
        point = poset.points[int(bad[0])]
        problems.append(f"Le point {list(point)} est dans {int(counts[bad[0]])} espaces de Stanley")
    elif box_total != poset.size:
        problems.append("Un espace de Stanley sort du poset caractéristique")
    return problems


def verify_partition(poset: CharacteristicPoset, partition: IntervalPartition) -> PartitionDiagnostics:
    """
    Vérifie bornes, appartenance au côté, disjonction, recouvrement et
    comptage des espaces de Stanley induits.
    """
    diagnostics = PartitionDiagnostics(valid=False)
    problems = diagnostics.problems

    if tuple(partition.g) != poset.g or partition.side != poset.side:
        problems.append(f"Certificat pour g={list(partition.g)}, {partition.side.value}: "
                        f"attendu g={list(poset.g)}, {poset.side.value}")
        return diagnostics

    seen = 0
    for a, b in partition.intervals:
        if len(a) != poset.n or len(b) != poset.n or any(x > y for x, y in zip(a, b)):
            problems.append(f"Intervalle mal formé [{list(a)}, {list(b)}]")
            continue
        ia, ib = poset.index.get(tuple(a)), poset.index.get(tuple(b))
        if ia is None or ib is None:
            problems.append(f"Intervalle [{list(a)}, {list(b)}] hors du côté {poset.side.value}")
            continue
        mask = poset.interval_mask(ia, ib)
        if mask.bit_count() != prod(y - x + 1 for x, y in zip(a, b)):
            problems.append(f"Intervalle [{list(a)}, {list(b)}] sort du côté {poset.side.value}")
            continue
        overlap = mask & seen
        if overlap:
            point = poset.points[(overlap & -overlap).bit_length() - 1]
            diagnostics.clashing_point = diagnostics.clashing_point or point
            problems.append(f"Intervalles non disjoints en {list(point)}")
        seen |= mask

    full = (1 << poset.size) - 1
    if seen != full:
        gap = full & ~seen
        point = poset.points[(gap & -gap).bit_length() - 1]
        diagnostics.missing_point = point
        problems.append(f"Point non couvert: {list(point)}")

    if not problems:
        problems += _counting_problems(poset, stanley_spaces(poset.g, partition.intervals))

    diagnostics.value = partition.value
    diagnostics.valid = not problems
    if not diagnostics.valid:
        logger.debug(f"Certificat rejeté: {problems}")
    return diagnostics


def partition_to_stanley_decomposition(
    poset: CharacteristicPoset, partition: IntervalPartition
) -> StanleyDecomposition:
    """
    Décomposition de Stanley induite par une partition valide.

    Raises:
        InvalidPartition: la vérification échoue
    """
    diagnostics = verify_partition(poset, partition)
    if not diagnostics.valid:
        raise InvalidPartition(diagnostics.problems)
    return StanleyDecomposition(
        poset.ideal.variables,
        tuple(stanley_spaces(poset.g, partition.intervals)),
    )
