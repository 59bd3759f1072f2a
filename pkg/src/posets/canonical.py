"""
Forme canonique des posets finis et test d'isomorphisme.

Raffinement itératif de partition (hauteur, couvertures), puis individualisation
avec retour arrière sur la partition stable; la forme retenue est le plus petit
codage binaire obtenu aux feuilles.

Codage (version 1): b"BLPCF1" + n sur 4 octets big-endian, puis pour chaque
nœud dans l'ordre canonique le masque de ses successeurs stricts sur
ceil(n/8) octets big-endian. Stable entre exécutions et plateformes.
"""

from collections import Counter
from typing import Optional

from src.posets.poset import FinitePoset, iter_bits

CANONICAL_VERSION = b"BLPCF1"


def _initial_colors(poset: FinitePoset) -> list[int]:
    invariants = [
        (poset.heights[i], len(poset.lower_covers(i)), len(poset.upper_covers(i)))
        for i in range(poset.size)
    ]
    ranking = {inv: r for r, inv in enumerate(sorted(set(invariants)))}
    return [ranking[inv] for inv in invariants]


def _refine(poset: FinitePoset, colors: list[int]) -> list[int]:
    """Raffine jusqu'à stabilité; l'ordre des classes raffine l'ordre d'entrée."""
    classes = len(set(colors))
    while True:
        signatures = [
            (
                colors[i],
                tuple(sorted(colors[j] for j in iter_bits(poset.strict_up(i)))),
                tuple(sorted(colors[j] for j in iter_bits(poset.strict_down(i)))),
            )
            for i in range(poset.size)
        ]
        ranking = {sig: r for r, sig in enumerate(sorted(set(signatures)))}
        colors = [ranking[sig] for sig in signatures]
        if len(ranking) == classes:
            return colors
        classes = len(ranking)


def _encode(poset: FinitePoset, order: list[int]) -> bytes:
    n = poset.size
    position = {node: p for p, node in enumerate(order)}
    width = (n + 7) // 8
    rows = []
    for node in order:
        mask = 0
        for j in iter_bits(poset.strict_up(node)):
            mask |= 1 << (n - 1 - position[j])
        rows.append(mask.to_bytes(width, "big"))
    return CANONICAL_VERSION + n.to_bytes(4, "big") + b"".join(rows)


def _search(poset: FinitePoset, colors: list[int], best: Optional[bytes]) -> bytes:
    colors = _refine(poset, colors)
    counts = Counter(colors)
    target = min((c for c, k in counts.items() if k > 1), default=None)

    if target is None:
        order = sorted(range(poset.size), key=lambda i: colors[i])
        code = _encode(poset, order)
        return code if best is None or code < best else best

    # Deux jumeaux (mêmes successeurs et prédécesseurs stricts) s'échangent
    # par un automorphisme: un seul représentant suffit
    tried = set()
    for v in (i for i in range(poset.size) if colors[i] == target):
        twin_key = (poset.strict_up(v), poset.strict_down(v))
        if twin_key in tried:
            continue
        tried.add(twin_key)
        individualized = [2 * c + (0 if i == v else 1) for i, c in enumerate(colors)]
        best = _search(poset, individualized, best)
    return best


def canonical_form(poset: FinitePoset) -> bytes:
    """Chaîne d'octets canonique: égale pour deux posets ssi ils sont isomorphes."""
    if poset.size == 0:
        return CANONICAL_VERSION + (0).to_bytes(4, "big")
    return _search(poset, _initial_colors(poset), None)


def is_isomorphic(first: FinitePoset, second: FinitePoset) -> bool:
    """Isomorphisme d'ordre (les étiquettes sont ignorées)."""
    if first.size != second.size:
        return False
    return canonical_form(first) == canonical_form(second)
