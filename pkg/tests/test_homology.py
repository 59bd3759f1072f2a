"""
Tests de l'homologie simpliciale exacte (ℚ et F_p).
"""

import pytest

from src.homology import (
    GF2,
    RATIONALS,
    ChainComplexData,
    FieldSpec,
    boundary_matrices,
    chain_homology_ranks,
    is_acyclic,
    matrix_rank,
    reduced_homology_ranks,
)
from src.posets import complex_from_faces, cone
from src.posets.complexes import InvalidComplex

# Plan projectif réel à six sommets
RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
    (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4),
]


def closed(facets):
    """Complexe engendré par des facettes données sur les sommets 1..n."""
    vertices = sorted({v for f in facets for v in f})
    position = {v: i for i, v in enumerate(vertices)}
    faces = set()
    for facet in facets:
        idx = sorted(position[v] for v in facet)
        for mask in range(1 << len(idx)):
            faces.add(tuple(idx[k] for k in range(len(idx)) if mask >> k & 1))
    return complex_from_faces(vertices, faces)


class TestFieldSpec:

    @pytest.mark.parametrize("text, characteristic", [("q", 0), ("Q", 0), ("fp:2", 2), ("fp:7", 7)])
    def test_parse(self, text, characteristic):
        assert FieldSpec.parse(text).characteristic == characteristic

    @pytest.mark.parametrize("text", ["fp:4", "fp:x", "r", "fp:-3"])
    def test_invalid(self, text):
        with pytest.raises(ValueError):
            FieldSpec.parse(text)

    def test_str(self):
        assert str(RATIONALS) == "q"
        assert str(GF2) == "fp:2"


class TestRanks:

    def test_rank_depends_on_characteristic(self):
        columns = {0: {0: 2}}
        assert matrix_rank(columns, 1, 1, RATIONALS) == 1
        assert matrix_rank(columns, 1, 1, GF2) == 0

    def test_empty_matrix(self):
        assert matrix_rank({}, 0, 3) == 0
        assert matrix_rank({0: {}}, 2, 1) == 0

    def test_bad_chain_complex(self):
        with pytest.raises(InvalidComplex):
            ChainComplexData({0: 1, 1: 1}, {1: {0: {3: 1}}})
        # ∂1∂2 ≠ 0
        with pytest.raises(InvalidComplex):
            ChainComplexData({0: 1, 1: 1, 2: 1}, {1: {0: {0: 1}}, 2: {0: {0: 1}}})

    def test_chain_homology_of_interval(self):
        chains = ChainComplexData({0: 2, 1: 1}, {1: {0: {0: -1, 1: 1}}})
        assert chain_homology_ranks(chains) == {0: 1, 1: 0}


class TestReducedHomology:

    def test_empty_complex(self):
        data = complex_from_faces([], [])
        assert reduced_homology_ranks(data) == {-1: 1}

    def test_point_is_acyclic(self):
        assert is_acyclic(complex_from_faces(["v"], [(0,)]))

    def test_two_points(self):
        data = complex_from_faces(["a", "b"], [(0,), (1,)])
        assert reduced_homology_ranks(data) == {-1: 0, 0: 1}

    def test_circle(self):
        data = closed([(1, 2), (2, 3), (1, 3)])
        assert reduced_homology_ranks(data) == {-1: 0, 0: 0, 1: 1}

    def test_cone_is_acyclic(self):
        circle = closed([(1, 2), (2, 3), (1, 3)])
        assert is_acyclic(cone(circle), GF2)

    def test_boundary_matrix_shapes(self):
        data = closed([(1, 2, 3)])
        chains = boundary_matrices(data)
        assert chains.dimensions == {-1: 1, 0: 3, 1: 3, 2: 1}

    def test_projective_plane_torsion(self):
        rp2 = closed(RP2_FACETS)
        over_q = reduced_homology_ranks(rp2, RATIONALS)
        over_f2 = reduced_homology_ranks(rp2, GF2)
        assert over_q[1] == 0 and over_q[2] == 0
        assert over_f2[1] == 1 and over_f2[2] == 1
