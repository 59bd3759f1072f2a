"""
Poset caractéristique d'un idéal monomial: vecteurs d'exposants a ≤ g du côté
choisi (quotient: x^a ∉ I; idéal: x^a ∈ I).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from src.algebra.lcm_lattice import TooLarge
from src.algebra.monomials import AlgebraError, MonomialIdeal

logger = logging.getLogger("bettilab.stanley")

DEFAULT_MAX_POINTS = 1_000_000


class Side(str, Enum):
    """Module étudié: S/I ou I."""
    QUOTIENT = "quotient"
    IDEAL = "ideal"


class CapTooSmall(AlgebraError):
    """Le plafond g fourni est en dessous du ppcm des générateurs."""
    pass


def _mask_from_bools(flags: np.ndarray) -> int:
    """Masque de bits (bit i = flags[i])."""
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


@dataclass(frozen=True, eq=False)
class CharacteristicPoset:
    """
    Points du côté `side` sous le plafond g, rangés par (degré total, lexicographique).

    ρ(b) = nombre de coordonnées j avec b_j = g_j.
    """

    ideal: MonomialIdeal
    side: Side
    g: tuple[int, ...]
    coords: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.coords)

    @property
    def n(self) -> int:
        return len(self.g)

    @cached_property
    def points(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(e) for e in row) for row in self.coords)

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def rho(self) -> tuple[int, ...]:
        g = np.array(self.g, dtype=np.int64)
        return tuple(int(r) for r in (self.coords == g).sum(axis=1))

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        """up_masks[i]: points c ≥ p_i."""
        return tuple(_mask_from_bools((self.coords >= row).all(axis=1)) for row in self.coords)

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        """down_masks[i]: points c ≤ p_i."""
        return tuple(_mask_from_bools((self.coords <= row).all(axis=1)) for row in self.coords)

    def interval_mask(self, a: int, b: int) -> int:
        return self.up_masks[a] & self.down_masks[b]

    def contains(self, point: Sequence[int]) -> bool:
        return tuple(point) in self.index


def default_cap(ideal: MonomialIdeal) -> tuple[int, ...]:
    """g par défaut: exposants du ppcm des générateurs minimaux."""
    return ideal.lcm().exponents


def characteristic_poset(
    ideal: MonomialIdeal,
    side: Side | str = Side.QUOTIENT,
    g_extension: Optional[Sequence[int]] = None,
    max_points: Optional[int] = None,
) -> CharacteristicPoset:
    """
    Énumère la grille 0 ≤ a ≤ g et garde les points du côté demandé.

    Args:
        ideal: Idéal monomial
        side: quotient (x^a ∉ I) ou ideal (x^a ∈ I)
        g_extension: Plafond ≥ ppcm, coordonnée par coordonnée
        max_points: Plafond sur Π(g_j + 1)

    Raises:
        CapTooSmall: g_extension sous le ppcm dans une coordonnée
        TooLarge: grille plus grande que max_points
    """
    side = Side(side)
    base = default_cap(ideal)
    if g_extension is None:
        g = base
    else:
        g = tuple(int(e) for e in g_extension)
        if len(g) != ideal.n:
            raise CapTooSmall(f"Plafond de longueur {len(g)} pour {ideal.n} variables")
        if any(e < d for e, d in zip(g, base)):
            raise CapTooSmall(f"Plafond {g} sous le ppcm {base}")

    cap = max_points if max_points is not None else DEFAULT_MAX_POINTS
    grid_size = int(np.prod([e + 1 for e in g], dtype=object))
    if grid_size > cap:
        raise TooLarge(f"Grille de {grid_size} points au-delà du plafond {cap}", nodes=grid_size)

    grid = np.indices([e + 1 for e in g]).reshape(len(g), -1).T
    in_ideal = np.zeros(len(grid), dtype=bool)
    for gen in ideal.generators:
        in_ideal |= (grid >= np.array(gen.exponents)).all(axis=1)
    keep = in_ideal if side == Side.IDEAL else ~in_ideal

    selected = grid[keep]
    order = sorted(range(len(selected)), key=lambda i: (int(selected[i].sum()), tuple(selected[i])))
    coords = selected[order] if order else selected

    logger.debug(f"Poset caractéristique ({side.value}, g={g}): {len(coords)} points")
    return CharacteristicPoset(ideal=ideal, side=side, g=g, coords=coords)
