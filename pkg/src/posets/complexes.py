"""
Complexes simpliciaux finis et complexes d'ordre d'intervalles de treillis.
"""

from dataclasses import dataclass
from typing import Hashable, Sequence

from src.posets.lattice import BottomExcluded, FiniteLattice
from src.posets.poset import FinitePoset, PosetError, iter_bits


class InvalidComplex(PosetError):
    """Famille de faces non close par passage aux sous-ensembles."""
    pass


@dataclass(frozen=True, eq=False)
class SimplicialComplexData:
    """
    Complexe simplicial: sommets indexés et faces (tuples croissants de
    positions de sommets). La face vide est toujours présente.
    """

    vertices: tuple
    faces: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        face_set = set(self.faces)
        if () not in face_set:
            raise InvalidComplex("La face vide doit appartenir au complexe")
        n = len(self.vertices)
        for face in self.faces:
            if list(face) != sorted(set(face)) or any(not 0 <= v < n for v in face):
                raise InvalidComplex(f"Face mal formée: {face}")
            # Il suffit de vérifier les faces de codimension 1
            for k in range(len(face)):
                if face[:k] + face[k + 1:] not in face_set:
                    raise InvalidComplex(f"Face {face} sans sa facette {face[:k] + face[k + 1:]}")

    @property
    def dimension(self) -> int:
        """Dimension (−1 pour le complexe réduit à la face vide)."""
        return max(len(face) for face in self.faces) - 1

    def faces_of_dimension(self, d: int) -> list[tuple[int, ...]]:
        return [face for face in self.faces if len(face) == d + 1]


def complex_from_faces(vertices: Sequence[Hashable], faces) -> SimplicialComplexData:
    """Construit un complexe en normalisant et triant les faces (face vide ajoutée)."""
    normalized = {tuple(sorted(face)) for face in faces} | {()}
    return SimplicialComplexData(tuple(vertices), tuple(sorted(normalized, key=lambda f: (len(f), f))))


def cone(data: SimplicialComplexData, apex: Hashable = "apex") -> SimplicialComplexData:
    """Cône sur un complexe (nouveau sommet placé en dernière position)."""
    a = len(data.vertices)
    faces = list(data.faces) + [face + (a,) for face in data.faces]
    return complex_from_faces(data.vertices + (apex,), faces)


def order_complex(poset: FinitePoset, nodes: Sequence[int]) -> SimplicialComplexData:
    """
    Complexe d'ordre du sous-poset induit sur `nodes`: les faces sont les chaînes.

    Les sommets sont rangés selon l'extension linéaire du poset, de sorte que les
    chaînes s'écrivent comme des tuples croissants de positions.
    """
    chosen = set(nodes)
    ordered = [i for i in poset.linear_extension if i in chosen]
    position = {node: p for p, node in enumerate(ordered)}
    mask_of = sum(1 << i for i in ordered)

    faces: list[tuple[int, ...]] = [()]
    stack = [((position[v],), v) for v in ordered]
    while stack:
        chain, last = stack.pop()
        faces.append(chain)
        for w in iter_bits(poset.strict_up(last) & mask_of):
            stack.append((chain + (position[w],), w))

    return SimplicialComplexData(
        tuple(poset.names[i] for i in ordered),
        tuple(sorted(faces, key=lambda f: (len(f), f))),
    )


def open_lower_complex(lattice: FiniteLattice, m: int) -> SimplicialComplexData:
    """
    Complexe d'ordre de l'intervalle ouvert (0̂, m).

    Raises:
        BottomExcluded: si m = 0̂
    """
    lattice.base.check_node(m)
    if m == lattice.bottom:
        raise BottomExcluded("L'intervalle (0̂, 0̂) n'est pas défini")
    between = lattice.base.strict_down(m) & ~(1 << lattice.bottom)
    return order_complex(lattice.base, list(iter_bits(between)))
